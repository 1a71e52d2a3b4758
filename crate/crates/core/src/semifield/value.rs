use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An element of the tropical semifield in the additive picture.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tropical {
    NegInf,
    Finite(#[serde_as(as = "DisplayFromStr")] Rational),
}

impl Tropical {
    pub fn finite(q: Rational) -> Self {
        Tropical::Finite(q)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Tropical::Finite(q) => Some(q),
            Tropical::NegInf => None,
        }
    }

    pub fn max(&self, other: &Self) -> Self {
        match (self, other) {
            (Tropical::NegInf, b) => b.clone(),
            (a, Tropical::NegInf) => a.clone(),
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a.max(b).clone()),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (Tropical::Finite(a), Tropical::Finite(b)) => Tropical::Finite(a + b),
            _ => Tropical::NegInf,
        }
    }
}

impl PartialOrd for Tropical {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tropical {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Tropical::NegInf, Tropical::NegInf) => Equal,
            (Tropical::NegInf, _) => Less,
            (_, Tropical::NegInf) => Greater,
            (Tropical::Finite(a), Tropical::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::NegInf => f.write_str("-inf"),
            Tropical::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// `coefficient · X^exponent` in the semifield of leading terms, or zero.
/// Addition keeps the term of larger exponent and adds coefficients on ties.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LeadingTerm {
    Zero,
    Term {
        #[serde_as(as = "DisplayFromStr")]
        coefficient: Rational,
        exponent: i64,
    },
}

impl LeadingTerm {
    pub fn new(coefficient: Rational, exponent: i64) -> Result<Self> {
        if !coefficient.is_positive() {
            return Err(Error::InvalidValue {
                instance: "LeadingTerm".into(),
                reason: format!("coefficient {coefficient} must be > 0"),
            });
        }
        Ok(LeadingTerm::Term { coefficient, exponent })
    }

    pub fn one() -> Self {
        LeadingTerm::Term { coefficient: Rational::one(), exponent: 0 }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, LeadingTerm::Zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (LeadingTerm::Zero, b) => b.clone(),
            (a, LeadingTerm::Zero) => a.clone(),
            (LeadingTerm::Term { coefficient: r, exponent: n }, LeadingTerm::Term { coefficient: s, exponent: m }) => {
                match n.cmp(m) {
                    std::cmp::Ordering::Greater => self.clone(),
                    std::cmp::Ordering::Less => other.clone(),
                    std::cmp::Ordering::Equal => LeadingTerm::Term { coefficient: r + s, exponent: *n },
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (LeadingTerm::Term { coefficient: r, exponent: n }, LeadingTerm::Term { coefficient: s, exponent: m }) => {
                LeadingTerm::Term { coefficient: r * s, exponent: n + m }
            }
            _ => LeadingTerm::Zero,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            LeadingTerm::Zero => Err(Error::InversionOfZero),
            LeadingTerm::Term { coefficient, exponent } => {
                Ok(LeadingTerm::Term { coefficient: coefficient.recip(), exponent: -exponent })
            }
        }
    }
}

impl PartialOrd for LeadingTerm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Zero lies below every nonzero element; nonzero elements compare by
/// exponent first and coefficient second.
impl Ord for LeadingTerm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (LeadingTerm::Zero, LeadingTerm::Zero) => Equal,
            (LeadingTerm::Zero, _) => Less,
            (_, LeadingTerm::Zero) => Greater,
            (LeadingTerm::Term { coefficient: r, exponent: n }, LeadingTerm::Term { coefficient: s, exponent: m }) => {
                n.cmp(m).then_with(|| r.cmp(s))
            }
        }
    }
}

impl fmt::Display for LeadingTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeadingTerm::Zero => f.write_str("0"),
            LeadingTerm::Term { coefficient, exponent } => write!(f, "{coefficient}*X^{exponent}"),
        }
    }
}

/// `r + s·X` modulo `X²` with `r > 0`, or zero.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualNumber {
    Zero,
    Element {
        #[serde_as(as = "DisplayFromStr")]
        r: Rational,
        #[serde_as(as = "DisplayFromStr")]
        s: Rational,
    },
}

impl DualNumber {
    pub fn new(r: Rational, s: Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidValue {
                instance: "DualNumbers".into(),
                reason: format!("real part {r} must be > 0"),
            });
        }
        Ok(DualNumber::Element { r, s })
    }

    pub fn one() -> Self {
        DualNumber::Element { r: Rational::one(), s: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, DualNumber::Zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (DualNumber::Zero, b) => b.clone(),
            (a, DualNumber::Zero) => a.clone(),
            (DualNumber::Element { r: r1, s: s1 }, DualNumber::Element { r: r2, s: s2 }) => {
                DualNumber::Element { r: r1 + r2, s: s1 + s2 }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (DualNumber::Element { r: r1, s: s1 }, DualNumber::Element { r: r2, s: s2 }) => {
                DualNumber::Element { r: r1 * r2, s: r1 * s2 + r2 * s1 }
            }
            _ => DualNumber::Zero,
        }
    }

    /// `(r + sX)^{-1} = r^{-2}(r - sX)`.
    pub fn inv(&self) -> Result<Self> {
        match self {
            DualNumber::Zero => Err(Error::InversionOfZero),
            DualNumber::Element { r, s } => {
                let r2 = r * r;
                Ok(DualNumber::Element { r: r / &r2, s: -s / r2 })
            }
        }
    }

    /// Comparable only when the real parts agree.
    pub fn compare(&self, other: &Self) -> crate::order::Comparison {
        use crate::order::Comparison;
        match (self, other) {
            (DualNumber::Zero, DualNumber::Zero) => Comparison::Equivalent,
            (DualNumber::Element { r: r1, s: s1 }, DualNumber::Element { r: r2, s: s2 }) if r1 == r2 => {
                Comparison::from_ordering(s1.cmp(s2))
            }
            _ => Comparison::Incomparable,
        }
    }
}

impl fmt::Display for DualNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualNumber::Zero => f.write_str("0"),
            DualNumber::Element { r, s } => write!(f, "{r} + {s}*X"),
        }
    }
}

/// An element of some [`Instance`](super::Instance).
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Value {
    /// Naturals and nonnegative rationals.
    Scalar(#[serde_as(as = "DisplayFromStr")] Rational),
    Bool(bool),
    Tropical(Tropical),
    Pair(Box<Value>, Box<Value>),
    Leading(LeadingTerm),
    Dual(DualNumber),
}

impl Value {
    pub fn scalar(q: Rational) -> Self {
        Value::Scalar(q)
    }

    pub fn tropical(q: Rational) -> Self {
        Value::Tropical(Tropical::Finite(q))
    }

    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(q) => write!(f, "{q}"),
            Value::Bool(b) => write!(f, "{}", u8::from(*b)),
            Value::Tropical(t) => write!(f, "{t}"),
            Value::Pair(a, b) => write!(f, "({a}, {b})"),
            Value::Leading(l) => write!(f, "{l}"),
            Value::Dual(d) => write!(f, "{d}"),
        }
    }
}
