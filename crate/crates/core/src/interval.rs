//! Rational interval arithmetic with certified natural logarithms.
//!
//! Endpoints are rationals rounded outward to the dyadic grid `2^-prec`,
//! which keeps their size bounded while preserving enclosure.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Precisions tried in turn by [`log_ratio`].
pub const PRECISIONS: [u32; 4] = [128, 192, 256, 384];

/// Target enclosure width for logarithmic evaluations.
pub fn default_tolerance() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn strictly_below(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, q: &Rational) -> Interval {
        self.mul(&Interval::point(q.clone()))
    }

    /// Division; fails if `other` contains zero.
    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::VerificationFailed("interval division by an interval containing zero".into()));
        }
        let inv = Interval { lo: other.hi.recip(), hi: other.lo.recip() };
        Ok(self.mul(&inv))
    }

    /// Rounds endpoints outward to multiples of `2^-prec`.
    pub fn snap(&self, prec: u32) -> Interval {
        Interval { lo: snap_down(&self.lo, prec), hi: snap_up(&self.hi, prec) }
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.midpoint())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn scale_pow2(prec: u32) -> BigInt {
    BigInt::one() << prec
}

fn snap_down(q: &Rational, prec: u32) -> Rational {
    let s = scale_pow2(prec);
    let n = (q.numer() * &s).div_floor(q.denom());
    Rational::new(n, s)
}

fn snap_up(q: &Rational, prec: u32) -> Rational {
    let s = scale_pow2(prec);
    let n = (q.numer() * &s).div_ceil(q.denom());
    Rational::new(n, s)
}

/// Enclosure of `2·atanh(z) = ln((1+z)/(1-z))` for `|z| <= 1/3`.
fn two_atanh(z: &Rational, prec: u32) -> Interval {
    let z2 = z * z;
    let tol = Rational::new(BigInt::one(), scale_pow2(prec + 4));
    let one = Rational::one();
    let tail_factor = &one / (&one - &z2);
    let mut sum = Rational::zero();
    let mut power = z.clone();
    let mut k: u64 = 0;
    loop {
        let denom = Rational::from_integer(BigInt::from(2 * k + 1));
        sum += &power / &denom * Rational::from_integer(2.into());
        power = snap_toward_zero(&(&power * &z2), prec + 16);
        k += 1;
        // |remaining terms| <= 2|z|^{2k+1}/(2k+1) · 1/(1 - z²). The truncated
        // power is within 9/8 of a grid step of the exact one.
        let grid = Rational::new(BigInt::one(), scale_pow2(prec + 16));
        let bound = (power.abs() + &grid * Rational::from_integer(2.into())) * Rational::from_integer(2.into())
            / Rational::from_integer(BigInt::from(2 * k + 1))
            * &tail_factor;
        if bound < tol {
            // Each summed term is off by at most 9/4 grid steps from power
            // truncation and one more from snapping the partial sum.
            let slack = bound + grid * Rational::from_integer(BigInt::from(4 * k + 4));
            return Interval::new(&sum - &slack, &sum + &slack).snap(prec);
        }
        sum = snap_toward_zero(&sum, prec + 16);
    }
}

fn snap_toward_zero(q: &Rational, prec: u32) -> Rational {
    if q.is_negative() {
        snap_up(q, prec)
    } else {
        snap_down(q, prec)
    }
}

/// Enclosure of `ln 2`.
pub fn ln2(prec: u32) -> Interval {
    two_atanh(&Rational::new(BigInt::one(), BigInt::from(3)), prec)
}

/// Enclosure of `ln q` for `q > 0`, of width roughly `2^-prec` times the
/// binary exponent of `q`.
pub fn ln(q: &Rational, prec: u32) -> Result<Interval> {
    if !q.is_positive() {
        return Err(Error::VerificationFailed(format!("logarithm of nonpositive {q}")));
    }
    if q.is_one() {
        return Ok(Interval::point(Rational::zero()));
    }
    // q = 2^e · m with m in [3/4, 3/2).
    let mut e: i64 = q.numer().bits() as i64 - q.denom().bits() as i64;
    let mut m = if e >= 0 {
        q / Rational::from_integer(BigInt::one() << e as u64)
    } else {
        q * Rational::from_integer(BigInt::one() << (-e) as u64)
    };
    let three_halves = Rational::new(BigInt::from(3), BigInt::from(2));
    let three_quarters = Rational::new(BigInt::from(3), BigInt::from(4));
    let two = Rational::from_integer(2.into());
    while m >= three_halves {
        m /= &two;
        e += 1;
    }
    while m < three_quarters {
        m *= &two;
        e -= 1;
    }
    // ln is monotone, so enclose m by dyadics first to keep sizes bounded.
    let m_lo = snap_down(&m, prec + 8);
    let m_hi = snap_up(&m, prec + 8);
    let one = Rational::one();
    let z_lo = (&m_lo - &one) / (&m_lo + &one);
    let z_hi = (&m_hi - &one) / (&m_hi + &one);
    let lower = two_atanh(&z_lo, prec + 8);
    let upper = two_atanh(&z_hi, prec + 8);
    let ln_m = Interval::new(lower.lo, upper.hi);
    let e_part = ln2(prec + 8 + 64).scale(&Rational::from_integer(e.into()));
    Ok(e_part.add(&ln_m).snap(prec))
}

/// Enclosure of `ln a / ln b`, refined through [`PRECISIONS`] until its
/// width is at most `tol`. Returns the last enclosure even if the target
/// is not met.
pub fn log_ratio(a: &Rational, b: &Rational, tol: &Rational) -> Result<Interval> {
    let mut last = None;
    for &prec in &PRECISIONS {
        let r = ln(a, prec)?.div(&ln(b, prec)?)?;
        if &r.width() <= tol {
            return Ok(r);
        }
        last = Some(r);
    }
    Ok(last.expect("at least one precision"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn f(q: &Rational) -> f64 {
        rational::to_f64(q)
    }

    #[test]
    fn ln2_enclosure() {
        let i = ln2(128);
        assert!(f(i.lo()) <= std::f64::consts::LN_2 + 1e-15);
        assert!(f(i.hi()) >= std::f64::consts::LN_2 - 1e-15);
        assert!(i.width() < rat(1, 1 << 30) * rat(1, 1 << 30));
    }

    #[test]
    fn ln_matches_f64() {
        for q in [rat(1, 1000), rat(3, 7), int(1), int(2), int(5), int(1_000_000), rat(987654321, 123)] {
            let i = ln(&q, 128).unwrap();
            let x = f(&q).ln();
            assert!(f(i.lo()) <= x + 1e-12 && x - 1e-12 <= f(i.hi()), "{q}: {i} vs {x}");
            assert!(f(&i.width()) < 1e-30);
        }
    }

    #[test]
    fn ln_is_additive() {
        let a = ln(&int(6), 160).unwrap();
        let b = ln(&int(2), 160).unwrap().add(&ln(&int(3), 160).unwrap());
        assert!(a.overlaps(&b));
    }

    #[test]
    fn ratio_width() {
        let r = log_ratio(&int(9), &int(3), &default_tolerance()).unwrap();
        assert!(r.contains(&int(2)));
        assert!(r.width() <= default_tolerance());
    }

    #[test]
    fn nonpositive_rejected() {
        assert!(ln(&int(0), 64).is_err());
        assert!(ln(&int(-1), 64).is_err());
    }
}
