//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which is always kept in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"7"`, `"-3/4"` or `" 12 / 5 "`. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"3"` for integers, `"-3/4"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn pow(q: &Rational, n: u32) -> Rational {
    num_traits::pow(q.clone(), n as usize)
}

pub fn is_nonneg(q: &Rational) -> bool {
    !q.is_negative()
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Lossy conversion used only for numeric diagnostics.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or_else(|| {
        // fall back on scaled integer division for huge operands
        let (n, d) = (q.numer(), q.denom());
        let shift = (n.bits().max(d.bits()) as i64 - 1000).max(0) as usize;
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// The sum `1 + 1 + ... + 1` (n times) as a rational.
pub fn from_u64(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(format_rational(&rat(3, 2)), "3/2");
        assert_eq!(format_rational(&int(5)), "5");
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn huge_to_f64() {
        let big = pow(&int(10), 400) / pow(&int(10), 399);
        assert!((to_f64(&big) - 10.0).abs() < 1e-9);
    }
}
