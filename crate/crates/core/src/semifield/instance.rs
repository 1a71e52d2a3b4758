use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::value::{DualNumber, LeadingTerm, Tropical, Value};
use crate::error::{Error, Result};
use crate::order::Comparison;
use crate::rational::{self, Rational};

/// A concrete preordered semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Instance {
    /// `(N, +, ·)` with the usual order. Not a semifield.
    Naturals,
    /// Nonnegative rationals; stands in for the real semifield.
    RatPlus,
    /// `{0, 1}` with `1 + 1 = 1`.
    Boolean,
    /// `(Q ∪ {-∞}, max, +)`.
    TropicalRat,
    /// `(Z ∪ {-∞}, max, +)`.
    TropicalInt,
    /// Same algebra, reversed preorder.
    Opposite(Box<Instance>),
    /// Product semifield with the componentwise preorder.
    Product(Box<Instance>, Box<Instance>),
    /// Lexicographic product; the left factor must be totally preordered
    /// and order cancellative.
    Lexicographic(Box<Instance>, Box<Instance>),
    /// Leading terms `r·X^n`, `n ∈ Z`: the quotient of `R_+[X]` that keeps
    /// only the largest-degree term.
    LeadingTerm,
    /// `R_(+)[X]/(X²)` ordered by `r1 = r2 ∧ s1 <= s2`.
    DualNumbers,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Naturals => f.write_str("Naturals"),
            Instance::RatPlus => f.write_str("RatPlus"),
            Instance::Boolean => f.write_str("Boolean"),
            Instance::TropicalRat => f.write_str("TropicalRat"),
            Instance::TropicalInt => f.write_str("TropicalInt"),
            Instance::Opposite(i) => write!(f, "Opposite({i})"),
            Instance::Product(a, b) => write!(f, "Product({a}, {b})"),
            Instance::Lexicographic(a, b) => write!(f, "Lexicographic({a}, {b})"),
            Instance::LeadingTerm => f.write_str("LeadingTerm"),
            Instance::DualNumbers => f.write_str("DualNumbers"),
        }
    }
}

impl Instance {
    pub fn opposite(inner: Instance) -> Self {
        Instance::Opposite(Box::new(inner))
    }

    pub fn product(left: Instance, right: Instance) -> Result<Self> {
        if !left.is_strict() || !right.is_strict() {
            return Err(Error::InvalidInstance(format!("product factors must be zerosumfree: {left}, {right}")));
        }
        Ok(Instance::Product(Box::new(left), Box::new(right)))
    }

    pub fn lexicographic(left: Instance, right: Instance) -> Result<Self> {
        if !left.is_total() || !left.is_order_cancellative() {
            return Err(Error::InvalidInstance(format!(
                "left factor of a lexicographic product must be total and order cancellative, got {left}"
            )));
        }
        if !left.is_semifield() || !right.is_semifield() {
            return Err(Error::InvalidInstance("lexicographic factors must be semifields".into()));
        }
        Ok(Instance::Lexicographic(Box::new(left), Box::new(right)))
    }

    /// Any two elements are comparable.
    pub fn is_total(&self) -> bool {
        match self {
            Instance::Naturals
            | Instance::RatPlus
            | Instance::Boolean
            | Instance::TropicalRat
            | Instance::TropicalInt
            | Instance::LeadingTerm => true,
            Instance::Opposite(i) => i.is_total(),
            Instance::Lexicographic(a, b) => a.is_total() && b.is_total(),
            Instance::Product(..) | Instance::DualNumbers => false,
        }
    }

    /// `a + x <= a + y` implies `x <= y`.
    pub fn is_order_cancellative(&self) -> bool {
        match self {
            Instance::Naturals | Instance::RatPlus => true,
            Instance::Opposite(i) => i.is_order_cancellative(),
            Instance::Product(a, b) | Instance::Lexicographic(a, b) => {
                a.is_order_cancellative() && b.is_order_cancellative()
            }
            _ => false,
        }
    }

    pub fn is_semifield(&self) -> bool {
        match self {
            Instance::Naturals => false,
            Instance::Opposite(i) => i.is_semifield(),
            Instance::Product(a, b) | Instance::Lexicographic(a, b) => a.is_semifield() && b.is_semifield(),
            _ => true,
        }
    }

    /// Zerosumfree: `a + b = 0` forces `a = b = 0`. Every instance here is.
    pub fn is_strict(&self) -> bool {
        match self {
            Instance::Opposite(i) => i.is_strict(),
            Instance::Product(a, b) | Instance::Lexicographic(a, b) => a.is_strict() && b.is_strict(),
            _ => true,
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidValue { instance: self.to_string(), reason: reason.into() }
    }

    pub fn validate(&self, v: &Value) -> Result<()> {
        match (self, v) {
            (Instance::Naturals, Value::Scalar(q)) => {
                if q.is_negative() || !rational::is_integer(q) {
                    return Err(self.invalid(format!("{q} is not a natural number")));
                }
                Ok(())
            }
            (Instance::RatPlus, Value::Scalar(q)) => {
                if q.is_negative() {
                    return Err(self.invalid(format!("{q} is negative")));
                }
                Ok(())
            }
            (Instance::Boolean, Value::Bool(_)) => Ok(()),
            (Instance::TropicalRat, Value::Tropical(_)) => Ok(()),
            (Instance::TropicalInt, Value::Tropical(t)) => match t {
                Tropical::Finite(q) if !rational::is_integer(q) => Err(self.invalid(format!("{q} is not an integer"))),
                _ => Ok(()),
            },
            (Instance::Opposite(i), v) => i.validate(v),
            (Instance::Product(a, b) | Instance::Lexicographic(a, b), Value::Pair(x, y)) => {
                a.validate(x)?;
                b.validate(y)?;
                if a.is_zero(x) != b.is_zero(y) {
                    return Err(self.invalid("components must be both zero or both nonzero"));
                }
                Ok(())
            }
            (Instance::LeadingTerm, Value::Leading(l)) => match l {
                LeadingTerm::Term { coefficient, .. } if !coefficient.is_positive() => {
                    Err(self.invalid("coefficient must be > 0"))
                }
                _ => Ok(()),
            },
            (Instance::DualNumbers, Value::Dual(d)) => match d {
                DualNumber::Element { r, .. } if !r.is_positive() => Err(self.invalid("real part must be > 0")),
                _ => Ok(()),
            },
            _ => Err(self.invalid(format!("value {v} has the wrong shape"))),
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            Instance::Naturals | Instance::RatPlus => Value::Scalar(Rational::zero()),
            Instance::Boolean => Value::Bool(false),
            Instance::TropicalRat | Instance::TropicalInt => Value::Tropical(Tropical::NegInf),
            Instance::Opposite(i) => i.zero(),
            Instance::Product(a, b) | Instance::Lexicographic(a, b) => Value::pair(a.zero(), b.zero()),
            Instance::LeadingTerm => Value::Leading(LeadingTerm::Zero),
            Instance::DualNumbers => Value::Dual(DualNumber::Zero),
        }
    }

    pub fn one(&self) -> Value {
        self.from_natural(1)
    }

    /// The image of `n ∈ N`, i.e. `1 + ... + 1`.
    pub fn from_natural(&self, n: u64) -> Value {
        if n == 0 {
            return self.zero();
        }
        let q = rational::from_u64(n);
        match self {
            Instance::Naturals | Instance::RatPlus => Value::Scalar(q),
            Instance::Boolean => Value::Bool(true),
            Instance::TropicalRat | Instance::TropicalInt => Value::tropical(Rational::zero()),
            Instance::Opposite(i) => i.from_natural(n),
            Instance::Product(a, b) | Instance::Lexicographic(a, b) => {
                Value::pair(a.from_natural(n), b.from_natural(n))
            }
            Instance::LeadingTerm => Value::Leading(LeadingTerm::Term { coefficient: q, exponent: 0 }),
            Instance::DualNumbers => Value::Dual(DualNumber::Element { r: q, s: Rational::zero() }),
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match v {
            Value::Scalar(q) => q.is_zero(),
            Value::Bool(b) => !b,
            Value::Tropical(t) => *t == Tropical::NegInf,
            Value::Pair(x, y) => match self {
                Instance::Product(a, b) | Instance::Lexicographic(a, b) => a.is_zero(x) && b.is_zero(y),
                Instance::Opposite(i) => i.is_zero(v),
                _ => false,
            },
            Value::Leading(l) => l.is_zero(),
            Value::Dual(d) => d.is_zero(),
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Result<Value> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Result<Value> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub fn inv(&self, a: &Value) -> Result<Value> {
        self.validate(a)?;
        self.inv_raw(a)
    }

    /// `x^k` for any integer `k`; negative exponents need an invertible `x`.
    pub fn pow(&self, x: &Value, k: i64) -> Result<Value> {
        self.validate(x)?;
        let base = if k < 0 { self.inv_raw(x)? } else { x.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul_raw(&sq, &sq);
            }
        }
        Ok(acc)
    }

    /// `n · x`.
    pub fn scale(&self, n: u64, x: &Value) -> Result<Value> {
        self.mul(&self.from_natural(n), x)
    }

    /// Sum of a sequence of values; the empty sum is zero.
    pub fn sum<'a, I>(&self, items: I) -> Result<Value>
    where
        I: IntoIterator<Item = &'a Value>,
    {
        let mut acc = self.zero();
        for v in items {
            acc = self.add(&acc, v)?;
        }
        Ok(acc)
    }

    pub fn compare(&self, a: &Value, b: &Value) -> Result<Comparison> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.compare_raw(a, b))
    }

    fn add_raw(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Instance::Opposite(i), a, b) => i.add_raw(a, b),
            (_, Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (_, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x || *y),
            (_, Value::Tropical(x), Value::Tropical(y)) => Value::Tropical(x.max(y)),
            (Instance::Product(l, r) | Instance::Lexicographic(l, r), Value::Pair(x1, x2), Value::Pair(y1, y2)) => {
                Value::pair(l.add_raw(x1, y1), r.add_raw(x2, y2))
            }
            (_, Value::Leading(x), Value::Leading(y)) => Value::Leading(x.add(y)),
            (_, Value::Dual(x), Value::Dual(y)) => Value::Dual(x.add(y)),
            _ => unreachable!("operands validated against {self}"),
        }
    }

    fn mul_raw(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Instance::Opposite(i), a, b) => i.mul_raw(a, b),
            (_, Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (_, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x && *y),
            (_, Value::Tropical(x), Value::Tropical(y)) => Value::Tropical(x.plus(y)),
            (Instance::Product(l, r) | Instance::Lexicographic(l, r), Value::Pair(x1, x2), Value::Pair(y1, y2)) => {
                Value::pair(l.mul_raw(x1, y1), r.mul_raw(x2, y2))
            }
            (_, Value::Leading(x), Value::Leading(y)) => Value::Leading(x.mul(y)),
            (_, Value::Dual(x), Value::Dual(y)) => Value::Dual(x.mul(y)),
            _ => unreachable!("operands validated against {self}"),
        }
    }

    fn inv_raw(&self, a: &Value) -> Result<Value> {
        if self.is_zero(a) {
            return Err(Error::InversionOfZero);
        }
        match (self, a) {
            (Instance::Opposite(i), a) => i.inv_raw(a),
            (Instance::Naturals, Value::Scalar(q)) => {
                if q.is_one() {
                    Ok(a.clone())
                } else {
                    Err(Error::NotInvertible)
                }
            }
            (_, Value::Scalar(q)) => Ok(Value::Scalar(q.recip())),
            (_, Value::Bool(_)) => Ok(Value::Bool(true)),
            (_, Value::Tropical(Tropical::Finite(q))) => Ok(Value::tropical(-q)),
            (Instance::Product(l, r) | Instance::Lexicographic(l, r), Value::Pair(x, y)) => {
                Ok(Value::pair(l.inv_raw(x)?, r.inv_raw(y)?))
            }
            (_, Value::Leading(l)) => Ok(Value::Leading(l.inv()?)),
            (_, Value::Dual(d)) => Ok(Value::Dual(d.inv()?)),
            _ => Err(Error::InversionOfZero),
        }
    }

    fn compare_raw(&self, a: &Value, b: &Value) -> Comparison {
        match (self, a, b) {
            (Instance::Opposite(i), a, b) => i.compare_raw(a, b).reverse(),
            (_, Value::Scalar(x), Value::Scalar(y)) => Comparison::from_ordering(x.cmp(y)),
            (_, Value::Bool(x), Value::Bool(y)) => Comparison::from_ordering(x.cmp(y)),
            (_, Value::Tropical(x), Value::Tropical(y)) => Comparison::from_ordering(x.cmp(y)),
            (Instance::Product(l, r), Value::Pair(x1, x2), Value::Pair(y1, y2)) => {
                l.compare_raw(x1, y1).meet(r.compare_raw(x2, y2))
            }
            (Instance::Lexicographic(l, r), Value::Pair(x1, x2), Value::Pair(y1, y2)) => match l.compare_raw(x1, y1) {
                Comparison::Equivalent => r.compare_raw(x2, y2),
                other => other,
            },
            (_, Value::Leading(x), Value::Leading(y)) => Comparison::from_ordering(x.cmp(y)),
            (_, Value::Dual(x), Value::Dual(y)) => x.compare(y),
            _ => unreachable!("operands validated against {self}"),
        }
    }

    /// Ambient preorder relative to `(x, y)`: compares `a·y + b·x`
    /// against `a·x + b·y`.
    pub fn ambient_le(&self, a: &Value, b: &Value, x: &Value, y: &Value) -> Result<Comparison> {
        let lhs = self.add(&self.mul(a, y)?, &self.mul(b, x)?)?;
        let rhs = self.add(&self.mul(a, x)?, &self.mul(b, y)?)?;
        self.compare(&lhs, &rhs)
    }

    /// Checks the two-sided bound `x <= u^k` and `1 <= u^k · x`.
    pub fn is_power_universal_witness(&self, u: &Value, x: &Value, k: u32) -> Result<bool> {
        let uk = self.pow(u, i64::from(k))?;
        let upper = self.compare(x, &uk)?.is_le();
        let lower = self.compare(&self.one(), &self.mul(&uk, x)?)?.is_le();
        Ok(upper && lower)
    }
}
