use serde_with::{serde_as, DisplayFromStr};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

/// Element of the truncated polynomial ring `R[X]/(X^n)`; index `i` holds
/// the coefficient of `X^i`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Jet(#[serde_as(as = "Vec<DisplayFromStr>")] Vec<Rational>);

impl Jet {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Jet(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        Jet(vec![Rational::zero(); n])
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0, Rational::one())
    }

    /// `c·X^i`, or zero when `i >= n`.
    pub fn monomial(n: usize, i: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); n];
        if i < n {
            v[i] = c;
        }
        Jet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Jet(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Jet(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn neg(&self) -> Self {
        Jet(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Jet(self.0.iter().map(|a| a * c).collect())
    }

    /// Product with all terms of degree `>= n` dropped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.0[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Jet(out))
    }

    /// Power-series inverse, `b_k = -(a_1 b_{k-1} + ... + a_k b_0) / a_0`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.len();
        let a0 = match self.0.first() {
            Some(a0) if !a0.is_zero() => a0,
            _ => return Err(Error::NonInvertible),
        };
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        b.push(a0.recip());
        for k in 1..n {
            let s: Rational = (1..=k).map(|i| &self.0[i] * &b[k - i]).sum();
            b.push(-s / a0);
        }
        Ok(Jet(b))
    }

    /// Parses `c0 + c1*X - c2*X^2` with exact fraction coefficients.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty jet".into()));
        }
        let mut out = Jet::zero(n);
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            let (i, c) = parse_term(term)?;
            if i < n {
                out.0[i] += if neg { -c } else { c };
            }
            rest = tail;
        }
        Ok(out)
    }
}

fn parse_term(t: &str) -> Result<(usize, Rational)> {
    let bad = || Error::Parse(format!("malformed jet term {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (coeff, mono) = match t.find(['X', 'x']) {
        Some(i) => (&t[..i], Some(&t[i + 1..])),
        None => (t, None),
    };
    let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
    let c = match (coeff.is_empty(), mono) {
        (true, None) => return Err(bad()),
        (true, Some(_)) => Rational::one(),
        (false, _) => parse_rational(coeff)?,
    };
    let exp = match mono {
        None => 0,
        Some("") => 1,
        Some(m) => m.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(bad)?,
    };
    Ok((exp, c))
}

impl fmt::Display for Jet {
    /// `1/2 - 3/4*X + X^2`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{}", format_rational(&mag))?,
                (_, true) => write!(f, "{mono}")?,
                _ => write!(f, "{}*{mono}", format_rational(&mag))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, r: &Rational) -> Rational {
        match self {
            Sign::Plus => r.clone(),
            Sign::Minus => -r,
        }
    }

    pub fn as_rational(self) -> Rational {
        self.apply(&Rational::one())
    }
}

/// Signs `(ε_0, ..., ε_{n-1})`, written `+,-,+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignSequence(pub Vec<Sign>);

impl SignSequence {
    pub fn all_plus(n: usize) -> Self {
        SignSequence(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `2^n` sequences, `+` before `-` lexicographically.
    pub fn all(n: usize) -> Vec<Self> {
        (0..1u32 << n)
            .map(|bits| {
                SignSequence(
                    (0..n).map(|i| if bits >> (n - 1 - i) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect(),
                )
            })
            .collect()
    }
}

impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| match t.trim() {
                "+" | "+1" => Ok(Sign::Plus),
                "-" | "-1" => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("bad sign {other:?}"))),
            })
            .collect::<Result<_>>()
            .map(SignSequence)
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|s| if *s == Sign::Plus { "+" } else { "-" }).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Strict membership in the lexicographic cone: the first nonzero `r_j`
/// has `ε_j r_j > 0`. Zero is not strictly positive.
pub fn jet_is_positive(a: &Jet, eps: &SignSequence) -> Result<bool> {
    if a.len() != eps.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: eps.len() });
    }
    Ok(a.0.iter().zip(&eps.0).find(|(r, _)| !r.is_zero()).is_some_and(|(r, e)| e.apply(r).is_positive()))
}

/// Membership in the closed cone, including zero.
pub fn jet_in_cone(a: &Jet, eps: &SignSequence) -> Result<bool> {
    Ok(a.is_zero() || jet_is_positive(a, eps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn j(n: usize, s: &str) -> Jet {
        Jet::parse(n, s).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(j(2, "1+X").mul(&j(2, "1-X")).unwrap(), Jet::one(2));
        assert_eq!(j(3, "1+X").mul(&j(3, "1+X")).unwrap(), j(3, "1+2X+X^2"));
        assert_eq!(j(2, "X").mul(&j(2, "X")).unwrap(), Jet::zero(2));
        assert_eq!(j(2, "1").add(&j(3, "1")), Err(Error::LengthMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn inverse() {
        let i = j(2, "2+3X").inv().unwrap();
        assert_eq!(i, Jet::new(vec![rat(1, 2), rat(-3, 4)]));
        assert_eq!(i.to_string(), "1/2 - 3/4*X");
        assert_eq!(j(3, "1+X").inv().unwrap(), j(3, "1-X+X^2"));
        assert_eq!(Jet::one(4).inv().unwrap(), Jet::one(4));
        assert_eq!(j(2, "X").inv(), Err(Error::NonInvertible));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(j(3, "-1/2 + X - 2*X^2").coeffs(), &[rat(-1, 2), int(1), int(-2)]);
        assert_eq!(j(3, "-1/2 + X - 2*X^2").to_string(), "-1/2 + X - 2*X^2");
        assert_eq!(j(2, "1 + X^5"), Jet::one(2));
        assert_eq!(Jet::zero(3).to_string(), "0");
        assert!(Jet::parse(2, "1 + + X").is_err());
    }

    #[test]
    fn positivity() {
        let pp: SignSequence = "+,+".parse().unwrap();
        let pm: SignSequence = "+,-".parse().unwrap();
        assert!(jet_is_positive(&j(2, "X"), &pp).unwrap());
        assert!(!jet_is_positive(&j(2, "X"), &pm).unwrap());
        assert!(!jet_is_positive(&Jet::zero(2), &pp).unwrap());
        assert!(jet_in_cone(&Jet::zero(2), &pm).unwrap());
        assert!(jet_is_positive(&j(2, "-1"), &pp).is_ok_and(|b| !b));
    }

    #[test]
    fn sign_sequences() {
        let all = SignSequence::all(2);
        let shown: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["+,+", "+,-", "-,+", "-,-"]);
        assert!("+,0".parse::<SignSequence>().is_err());
    }
}
