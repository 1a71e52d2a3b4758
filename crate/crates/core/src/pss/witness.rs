use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial};
use crate::rational::{self, Rational};

/// `u^k·x^n <= u^k·y^n` coefficientwise for every `n` in `verified_range`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerWitness {
    pub k: u32,
    pub n: u32,
    pub verified_range: Vec<u32>,
}

/// A nonzero `a` with `a·x <= a·y`, built from the power witness `(k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalyticWitness {
    pub a: Polynomial,
    pub k: u32,
    pub n: u32,
}

/// `x^n <= p(u)·y^n` with `p = (2+X)^k` and `p(r_0) <= (1+ε)^n`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrassenWitness {
    pub p: Polynomial,
    pub k: u32,
    pub n: u32,
    #[serde_as(as = "DisplayFromStr")]
    pub p_at_r0: Rational,
    #[serde_as(as = "DisplayFromStr")]
    pub bound: Rational,
}

/// Signed sparse polynomial, used for `y^n - x^n`.
type Diff = BTreeMap<MultiIndex, Rational>;

fn difference(y: &Polynomial, x: &Polynomial) -> Diff {
    let mut d: Diff = y.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    for (e, c) in x.terms() {
        *d.entry(e.clone()).or_insert_with(Rational::zero) -= c;
    }
    d.retain(|_, c| !c.is_zero());
    d
}

fn mul_diff(d: &Diff, p: &Polynomial) -> Diff {
    let mut out = Diff::new();
    for (e1, c1) in d {
        for (e2, c2) in p.terms() {
            *out.entry(e1.add(e2)).or_insert_with(Rational::zero) += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn nonnegative(d: &Diff) -> bool {
    d.values().all(|c| !c.is_negative())
}

/// Least `k <= k_max` with `u^k·(y^n - x^n) >= 0`. Once it holds it holds
/// for every larger `k`, since `u` has nonnegative coefficients.
fn least_k(x: &Polynomial, y: &Polynomial, u: &Polynomial, n: u32, k_max: u32) -> Option<u32> {
    let mut d = difference(&y.pow(n), &x.pow(n));
    for k in 0..=k_max {
        if nonnegative(&d) {
            return Some(k);
        }
        if k < k_max {
            d = mul_diff(&d, u);
        }
    }
    None
}

/// `u^k·x^n <= u^k·y^n`, checked by direct multiplication.
pub fn verify_power(x: &Polynomial, y: &Polynomial, u: &Polynomial, k: u32, n: u32) -> Result<bool> {
    let uk = u.pow(k);
    uk.mul(&x.pow(n))?.coeffwise_le(&uk.mul(&y.pow(n))?)
}

/// Searches `(k, n) ∈ [0, k_max] × [1, n_max]` for a power witness.
///
/// A pair counts only if `n + 1` and `n + 2` verify with the same `k`. The
/// result is the least hit ordered by `k + n`, then by `n`. Each exponent is
/// scanned independently and the minimum is taken afterwards, so the answer
/// does not depend on scheduling.
pub fn power_witness_search(
    x: &Polynomial,
    y: &Polynomial,
    u: &Polynomial,
    k_max: u32,
    n_max: u32,
) -> Result<Option<PowerWitness>> {
    if x.vars() != y.vars() || x.vars() != u.vars() {
        return Err(Error::VariableCountMismatch { left: x.vars(), right: y.vars().max(u.vars()) });
    }
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n_max == 0 {
        return Ok(None);
    }
    let ks: Vec<Option<u32>> = (1..=n_max + 2).into_par_iter().map(|n| least_k(x, y, u, n, k_max)).collect();
    let best = (1..=n_max)
        .filter_map(|n| {
            let i = (n - 1) as usize;
            let k = ks[i]?.max(ks[i + 1]?).max(ks[i + 2]?);
            Some((k + n, n, k))
        })
        .min();
    Ok(best.map(|(_, n, k)| PowerWitness { k, n, verified_range: vec![n, n + 1, n + 2] }))
}

/// `a = u^k · Σ_{l=0}^{n-1} x^l y^{n-1-l}`, so that `a·(y - x) = u^k·(y^n - x^n)`.
pub fn catalytic_from_power(
    x: &Polynomial,
    y: &Polynomial,
    u: &Polynomial,
    w: &PowerWitness,
) -> Result<CatalyticWitness> {
    if w.n == 0 {
        return Err(Error::VerificationFailed("witness exponent must be at least 1".into()));
    }
    let mut sum = Polynomial::zero(x.vars());
    for l in 0..w.n {
        sum = sum.add(&x.pow(l).mul(&y.pow(w.n - 1 - l))?)?;
    }
    let a = u.pow(w.k).mul(&sum)?;
    if a.is_zero() || !a.mul(x)?.coeffwise_le(&a.mul(y)?)? {
        return Err(Error::VerificationFailed(format!("a·x <= a·y fails for (k, n) = ({}, {})", w.k, w.n)));
    }
    Ok(CatalyticWitness { a, k: w.k, n: w.n })
}

/// Least `n >= n_0` such that `u^k·x^n <= u^k·y^n` and `(2+r_0)^k <= (1+ε)^n`,
/// where `(k, n_0)` is the power witness found within the budget. Gives up
/// after `n_max` exponents past the first one meeting the bound.
pub fn strassen_witness(
    x: &Polynomial,
    y: &Polynomial,
    u: &Polynomial,
    r0: &Rational,
    eps: &Rational,
    k_max: u32,
    n_max: u32,
) -> Result<Option<StrassenWitness>> {
    if r0.is_negative() || !eps.is_positive() {
        return Err(Error::InvalidValue { instance: "strassen".into(), reason: "need r0 >= 0 and eps > 0".into() });
    }
    let Some(w) = power_witness_search(x, y, u, k_max, n_max)? else { return Ok(None) };
    let p_at_r0 = rational::pow(&(r0 + Rational::from_integer(2.into())), w.k);
    let base = Rational::one() + eps;
    let mut n = w.n;
    let mut bound = rational::pow(&base, n);
    while bound < p_at_r0 {
        n += 1;
        bound *= &base;
    }
    for n in n..=n + n_max {
        if verify_power(x, y, u, w.k, n)? {
            let p = Polynomial::univariate_ints(&[2, 1]).pow(w.k);
            let bound = rational::pow(&base, n);
            return Ok(Some(StrassenWitness { p, k: w.k, n, p_at_r0, bound }));
        }
    }
    Ok(None)
}
