use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::Comparison;
use crate::rational::{self, Rational};
use crate::semifield::Tropical;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically: by total degree, then
/// lexicographically on the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(vars: usize) -> Self {
        MultiIndex(vec![0; vars])
    }

    /// The exponent of the `i`-th variable alone.
    pub fn unit(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `⟨α, self⟩`.
    pub fn dot(&self, alpha: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(alpha)
            .filter(|(e, _)| **e != 0)
            .fold(Rational::zero(), |acc, (&e, a)| acc + a * Rational::from_integer(e.into()))
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&e| Rational::from_integer(e.into())).collect()
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with nonnegative rational coefficients in `vars`
/// variables, carrying the coefficientwise preorder.
///
/// No zero coefficient is ever stored, so structural equality is equality
/// of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// Constant polynomial. Panics on a negative constant.
    pub fn constant(vars: usize, c: Rational) -> Self {
        assert!(!c.is_negative(), "negative coefficient {c}");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(MultiIndex::zero(vars), c);
        }
        p
    }

    /// The variable `X_{i+1}` (zero-based index `i`).
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(MultiIndex::unit(vars, i), Rational::one());
        p
    }

    pub fn monomial(exp: MultiIndex, coeff: Rational) -> Result<Self> {
        let vars = exp.len();
        Self::from_terms(vars, [(exp, coeff)])
    }

    /// Builds a polynomial from terms, merging repeated exponents.
    pub fn from_terms<I>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (exp, c) in terms {
            if exp.len() != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: exp.len() });
            }
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(c.to_string()));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// Univariate polynomial from a dense coefficient list, lowest degree first.
    pub fn univariate(coeffs: &[Rational]) -> Result<Self> {
        Self::from_terms(1, coeffs.iter().enumerate().map(|(i, c)| (MultiIndex::new(vec![i as u32]), c.clone())))
    }

    /// Univariate polynomial with integer coefficients, lowest degree first.
    pub fn univariate_ints(coeffs: &[u64]) -> Self {
        let qs: Vec<Rational> = coeffs.iter().map(|&c| rational::from_u64(c)).collect();
        Self::univariate(&qs).expect("nonnegative")
    }

    fn add_term(&mut self, exp: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &MultiIndex) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&MultiIndex::zero(self.vars))
    }

    pub fn support(&self) -> Vec<MultiIndex> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// Whether every coefficient is a natural number.
    pub fn has_natural_coefficients(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableCountMismatch { left: self.vars, right: other.vars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same vars");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same vars");
            }
        }
        acc
    }

    /// Multiplication by a nonnegative scalar.
    pub fn scale(&self, c: &Rational) -> Result<Polynomial> {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(c.to_string()));
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.vars));
        }
        Ok(Polynomial { vars: self.vars, terms: self.terms.iter().map(|(e, q)| (e.clone(), q * c)).collect() })
    }

    /// Coefficientwise comparison, absent coefficients read as zero.
    pub fn coeffwise_cmp(&self, other: &Polynomial) -> Result<Comparison> {
        self.check_vars(other)?;
        let (mut le, mut ge) = (true, true);
        let zero = Rational::zero();
        for e in self.terms.keys().chain(other.terms.keys()) {
            let a = self.terms.get(e).unwrap_or(&zero);
            let b = other.terms.get(e).unwrap_or(&zero);
            match a.cmp(b) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
            if !le && !ge {
                break;
            }
        }
        Ok(Comparison::from_relations(le, ge))
    }

    /// `self <= other` coefficientwise.
    pub fn coeffwise_le(&self, other: &Polynomial) -> Result<bool> {
        self.check_vars(other)?;
        let zero = Rational::zero();
        Ok(self.terms.iter().all(|(e, a)| a <= other.terms.get(e).unwrap_or(&zero)))
    }

    /// Exact evaluation at a point of `Q^d`.
    pub fn point_eval(&self, r: &[Rational]) -> Result<Rational> {
        if r.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: r.len() });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (&k, ri) in e.exponents().iter().zip(r) {
                if k > 0 {
                    term *= rational::pow(ri, k);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// `max_{s ∈ supp} ⟨α, s⟩` in the additive tropical picture.
    pub fn tropical_eval(&self, alpha: &[Rational]) -> Result<Tropical> {
        if alpha.len() != self.vars {
            return Err(Error::DimensionMismatch { expected: self.vars, got: alpha.len() });
        }
        Ok(self.terms.keys().map(|e| e.dot(alpha)).max().map(Tropical::Finite).unwrap_or(Tropical::NegInf))
    }

    /// Substitutes the polynomial `x` into the univariate `self`.
    pub fn compose(&self, x: &Polynomial) -> Result<Polynomial> {
        if self.vars != 1 {
            return Err(Error::VariableCountMismatch { left: self.vars, right: 1 });
        }
        let mut out = Polynomial::zero(x.vars);
        for (e, c) in &self.terms {
            out = out.add(&x.pow(e.exponents()[0]).scale(c)?)?;
        }
        Ok(out)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars);
        for (e, c) in &self.terms {
            let k = e.exponents()[i];
            if k == 0 {
                continue;
            }
            let mut ex = e.exponents().to_vec();
            ex[i] -= 1;
            out.add_term(MultiIndex::new(ex), c * Rational::from_integer(k.into()));
        }
        out
    }

    /// Gradient evaluated at `r`.
    pub fn gradient_at(&self, r: &[Rational]) -> Result<Vec<Rational>> {
        (0..self.vars).map(|i| self.derivative(i).point_eval(r)).collect()
    }

    /// Renders with custom variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .exponents()
                    .iter()
                    .zip(names)
                    .filter(|(k, _)| **k > 0)
                    .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
                    .collect();
                let mono = mono.join("*");
                if mono.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    mono
                } else if rational::is_integer(c) {
                    format!("{c}{mono}")
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Default variable names: `X` when univariate, `X1..Xd` otherwise.
    pub fn default_names(vars: usize) -> Vec<String> {
        if vars == 1 {
            vec!["X".to_string()]
        } else {
            (1..=vars).map(|i| format!("X{i}")).collect()
        }
    }

    /// Parses a univariate literal such as `1 + 2X + X^2` or `1/2*X^3 + 3`.
    pub fn parse_univariate(s: &str) -> Result<Polynomial> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        for raw in compact.split('+') {
            if raw.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            terms.push(parse_univariate_term(raw)?);
        }
        Polynomial::from_terms(1, terms.into_iter().map(|(k, c)| (MultiIndex::new(vec![k]), c)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn parse_univariate_term(t: &str) -> Result<(u32, Rational)> {
    let bad = || Error::Parse(format!("malformed term {t:?}"));
    let split = t.find(['X', 'x']);
    let (coeff_part, mono_part) = match split {
        Some(i) => (&t[..i], Some(&t[i + 1..])),
        None => (t, None),
    };
    let coeff_part = coeff_part.strip_suffix('*').unwrap_or(coeff_part);
    let coeff = if coeff_part.is_empty() {
        if mono_part.is_none() {
            return Err(bad());
        }
        Rational::one()
    } else {
        rational::parse_rational(coeff_part)?
    };
    if coeff.is_negative() {
        return Err(Error::NegativeCoefficient(coeff.to_string()));
    }
    let exp = match mono_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let k = rest.strip_prefix('^').ok_or_else(bad)?;
            k.parse::<u32>().map_err(|_| bad())?
        }
    };
    Ok((exp, coeff))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Self::default_names(self.vars)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    vars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.exponents().to_vec(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = rational::parse_rational(&t.coeff).map_err(serde::de::Error::custom)?;
            terms.push((MultiIndex::new(t.exp), c));
        }
        Polynomial::from_terms(raw.vars, terms).map_err(serde::de::Error::custom)
    }
}

/// `2 + X_1 + ... + X_d`.
pub fn power_universal(vars: usize) -> Polynomial {
    let mut u = Polynomial::constant(vars, Rational::from_integer(2.into()));
    for i in 0..vars {
        u = u.add(&Polynomial::variable(vars, i)).expect("same vars");
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn uni(s: &str) -> Polynomial {
        Polynomial::parse_univariate(s).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(uni("1+X").pow(2), uni("1 + 2X + X^2"));
        assert_eq!(uni("2+X").pow(0), Polynomial::one(1));
        let x1 = Polynomial::variable(2, 0);
        let x2 = Polynomial::variable(2, 1);
        let a = Polynomial::constant(2, int(2)).add(&x1).unwrap();
        let b = Polynomial::constant(2, int(3)).add(&x2).unwrap();
        assert_eq!(a.mul(&b).unwrap().to_string(), "6 + 2X2 + 3X1 + X1*X2");
        assert!(matches!(uni("X").add(&x1), Err(Error::VariableCountMismatch { .. })));
    }

    #[test]
    fn coefficientwise_order() {
        assert_eq!(uni("1+X").coeffwise_cmp(&uni("2+X")).unwrap(), Comparison::LessStrict);
        assert_eq!(uni("1+2X").coeffwise_cmp(&uni("2+X")).unwrap(), Comparison::Incomparable);
        assert_eq!(uni("3+X^4").coeffwise_cmp(&uni("3+X^4")).unwrap(), Comparison::Equivalent);
        assert_eq!(uni("3+X^4").coeffwise_cmp(&uni("3")).unwrap(), Comparison::GreaterStrict);
    }

    #[test]
    fn universal_element() {
        assert_eq!(power_universal(1), uni("2+X"));
        assert_eq!(power_universal(2).to_string(), "2 + X2 + X1");
        assert_eq!(power_universal(3).len(), 4);
    }

    #[test]
    fn evaluation() {
        assert_eq!(uni("2+X").point_eval(&[int(3)]).unwrap(), int(5));
        assert_eq!(uni("1+4X+X^2").point_eval(&[int(1)]).unwrap(), int(6));
        assert_eq!(uni("7/2+4X+X^2").point_eval(&[int(0)]).unwrap(), rat(7, 2));
        assert!(uni("X").point_eval(&[]).is_err());
    }

    #[test]
    fn tropical_evaluation() {
        let p = Polynomial::from_terms(
            2,
            [
                (MultiIndex::new(vec![0, 0]), int(2)),
                (MultiIndex::new(vec![1, 0]), int(1)),
                (MultiIndex::new(vec![1, 1]), int(1)),
            ],
        )
        .unwrap();
        assert_eq!(p.tropical_eval(&[int(1), int(1)]).unwrap(), Tropical::Finite(int(2)));
        assert_eq!(p.tropical_eval(&[int(0), int(0)]).unwrap(), Tropical::Finite(int(0)));
        assert_eq!(Polynomial::zero(2).tropical_eval(&[int(1), int(1)]).unwrap(), Tropical::NegInf);
    }

    #[test]
    fn parsing_and_display() {
        let p = uni("X^2 + 1/2*X + 3");
        assert_eq!(p.to_string(), "3 + 1/2*X + X^2");
        assert_eq!(uni("1/2X"), uni("1/2*X"));
        assert_eq!(uni("x + x"), uni("2X"));
        assert!(Polynomial::parse_univariate("1 +").is_err());
        assert!(Polynomial::parse_univariate("-1").is_err());
        assert!(Polynomial::parse_univariate("X^").is_err());
        assert!(Polynomial::parse_univariate("0.5").is_err());
        assert_eq!(uni("0"), Polynomial::zero(1));
    }

    #[test]
    fn json_shape() {
        let p = uni("1 + 3/2X^2");
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"vars":1,"terms":[{"exp":[0],"coeff":"1"},{"exp":[2],"coeff":"3/2"}]}"#);
        let q: Polynomial =
            serde_json::from_str(r#"{"vars":1,"terms":[{"exp":[2],"coeff":"3/2"},{"exp":[0],"coeff":"2/2"}]}"#)
                .unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Polynomial>(r#"{"vars":2,"terms":[{"exp":[1],"coeff":"1"}]}"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"{"vars":1,"terms":[{"exp":[1],"coeff":"-1"}]}"#).is_err());
    }

    #[test]
    fn composition_and_derivative() {
        assert_eq!(uni("1 + X^2").compose(&uni("1 + X")).unwrap(), uni("2 + 2X + X^2"));
        assert_eq!(uni("1 + 3X + X^3").derivative(0), uni("3 + 3X^2"));
    }

    fn arb_uni() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0u32..6, 0i64..20, 1i64..5), 0..5).prop_map(|ts| {
            Polynomial::from_terms(1, ts.into_iter().map(|(e, n, d)| (MultiIndex::new(vec![e]), rat(n, d)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(p in arb_uni()) {
            prop_assert_eq!(Polynomial::parse_univariate(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in arb_uni(), q in arb_uni(), n in 0i64..10, d in 1i64..10) {
            let r = [rat(n, d)];
            let pq = p.mul(&q).unwrap();
            prop_assert_eq!(pq.point_eval(&r).unwrap(), p.point_eval(&r).unwrap() * q.point_eval(&r).unwrap());
        }
    }
}
