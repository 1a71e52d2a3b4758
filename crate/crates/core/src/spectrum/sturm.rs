//! Exact real-root isolation for univariate polynomials with signed
//! rational coefficients, via Sturm sequences.

use num_traits::{Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Dense univariate polynomial with signed coefficients, lowest degree
/// first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPoly(Vec<Rational>);

impl SignedPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SignedPoly(coeffs)
    }

    /// `y - x` for univariate `x`, `y`.
    pub fn difference(y: &Polynomial, x: &Polynomial) -> Self {
        let deg = x.degree().unwrap_or(0).max(y.degree().unwrap_or(0)) as usize;
        let mut c = vec![Rational::zero(); deg + 1];
        for (e, q) in y.terms() {
            c[e.exponents()[0] as usize] += q;
        }
        for (e, q) in x.terms() {
            c[e.exponents()[0] as usize] -= q;
        }
        SignedPoly::new(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, r: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * r + c)
    }

    pub fn derivative(&self) -> Self {
        SignedPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect())
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of 0 as a root.
    pub fn low_order(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `X^m`.
    pub fn shift_down(&self, m: usize) -> Self {
        SignedPoly::new(self.0[m.min(self.0.len())..].to_vec())
    }

    /// Quotient and remainder of polynomial division.
    pub fn div_rem(&self, d: &SignedPoly) -> (SignedPoly, SignedPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.degree().expect("nonzero");
        if rem.len() <= dd {
            return (SignedPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        let lead = d.lead();
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let f = &rem[i] / lead;
            for (j, dc) in d.0.iter().enumerate() {
                rem[i - dd + j] -= &f * dc;
            }
            quot[i - dd] = f;
        }
        rem.truncate(dd);
        (SignedPoly::new(quot), SignedPoly::new(rem))
    }

    pub fn gcd(&self, other: &SignedPoly) -> SignedPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// The squarefree part `p / gcd(p, p')`.
    pub fn squarefree(&self) -> SignedPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Bound `B` with every root `|z| < B`.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.lead().abs();
        let m = self.0[..self.0.len() - 1].iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rational::zero);
        m + Rational::from_integer(1.into())
    }

    /// A positive `ε` below every positive root, for `p(0) != 0`.
    pub fn positive_root_lower_bound(&self) -> Rational {
        let c0 = self.0[0].abs();
        let m = self.0[1..].iter().map(Signed::abs).max().unwrap_or_else(Rational::zero);
        &c0 / ((&c0 + m) * Rational::from_integer(2.into()))
    }
}

/// Sturm sequence `p, p', -rem(p_{k-1}, p_k), ...`.
pub struct Sturm {
    seq: Vec<SignedPoly>,
}

impl Sturm {
    pub fn new(p: &SignedPoly) -> Self {
        let mut seq = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let prev = seq.last().expect("nonempty").clone();
            seq.push(next.clone());
            let (_, r) = prev.div_rem(&next);
            next = SignedPoly::new(r.0.into_iter().map(|c| -c).collect());
        }
        Sturm { seq }
    }

    fn variations(&self, r: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.seq {
            let v = p.eval(r);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Isolating interval `(lo, hi)` with non-root endpoints and exactly one
/// root inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

/// Isolates the distinct positive roots of squarefree `p` with `p(0) != 0`.
/// Intervals are disjoint, sorted, and have endpoints that are not roots.
pub fn isolate_positive_roots(p: &SignedPoly) -> Vec<RootInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sturm = Sturm::new(p);
    let hi = p.cauchy_bound();
    let lo = Rational::zero();
    let mut out = Vec::new();
    let total = sturm.count(&lo, &hi);
    split(p, &sturm, lo, hi, total, &mut out);
    out
}

fn split(p: &SignedPoly, sturm: &Sturm, lo: Rational, hi: Rational, count: usize, out: &mut Vec<RootInterval>) {
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(RootInterval { lo, hi });
        return;
    }
    let mid = non_root_between(p, &lo, &hi);
    let left = sturm.count(&lo, &mid);
    split(p, sturm, lo, mid.clone(), left, out);
    split(p, sturm, mid, hi, count - left, out);
}

/// A point of `(lo, hi)` that is not a root, near the midpoint.
fn non_root_between(p: &SignedPoly, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut k: i64 = 2;
    loop {
        // Tries 1/2, 1/3, 2/3... of the way; finitely many are roots.
        for j in 1..k {
            let t = lo + &width * Rational::new(j.into(), k.into());
            if !p.eval(&t).is_zero() {
                return t;
            }
        }
        k += 1;
    }
}

/// Outcome of bisecting an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refined {
    Exact(Rational),
    Interval(RootInterval),
}

/// Narrows an isolating interval by bisection. Returns the exact root if a
/// rational midpoint hits it.
pub fn refine(p: &SignedPoly, iv: &RootInterval, steps: usize) -> Refined {
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let lo_sign = p.eval(&lo).is_positive();
    for _ in 0..steps {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let v = p.eval(&mid);
        if v.is_zero() {
            return Refined::Exact(mid);
        }
        if v.is_positive() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Refined::Interval(RootInterval { lo, hi })
}
