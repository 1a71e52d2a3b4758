use std::ops::Deref;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::order::Comparison;
use crate::pss::{self, Budget, CatalyticWitness};
use crate::spectrum::{self, DominanceVerdict};

/// A polynomial with strictly positive constant term, or zero.
///
/// These form a subsemiring in which every nonzero element is positive at
/// every real evaluation and finite at every tropical direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Polynomial", into = "Polynomial")]
pub struct PositiveConstantPolynomial(Polynomial);

impl PositiveConstantPolynomial {
    pub fn new(p: Polynomial) -> Result<Self> {
        if !p.is_zero() && !p.constant_term().is_positive() {
            return Err(Error::NonPositiveConstant);
        }
        Ok(PositiveConstantPolynomial(p))
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_inner(self) -> Polynomial {
        self.0
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(PositiveConstantPolynomial(self.0.mul(&other.0)?))
    }
}

impl Deref for PositiveConstantPolynomial {
    type Target = Polynomial;

    fn deref(&self) -> &Polynomial {
        &self.0
    }
}

impl TryFrom<Polynomial> for PositiveConstantPolynomial {
    type Error = Error;

    fn try_from(p: Polynomial) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PositiveConstantPolynomial> for Polynomial {
    fn from(p: PositiveConstantPolynomial) -> Polynomial {
        p.0
    }
}

/// `numerator / denominator` with both parts nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedFraction {
    numerator: PositiveConstantPolynomial,
    denominator: PositiveConstantPolynomial,
}

impl OrderedFraction {
    pub fn new(numerator: PositiveConstantPolynomial, denominator: PositiveConstantPolynomial) -> Result<Self> {
        if numerator.is_zero() || denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if numerator.vars() != denominator.vars() {
            return Err(Error::VariableCountMismatch { left: numerator.vars(), right: denominator.vars() });
        }
        Ok(OrderedFraction { numerator, denominator })
    }

    pub fn numerator(&self) -> &PositiveConstantPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &PositiveConstantPolynomial {
        &self.denominator
    }

    /// Equality of fractions by cross-multiplication.
    pub fn same_value(&self, other: &Self) -> Result<bool> {
        let l = self.numerator.mul(&other.denominator)?;
        let r = other.numerator.mul(&self.denominator)?;
        Ok(l == r)
    }
}

/// Result of [`frac_leq`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionComparison {
    pub comparison: Comparison,
    /// `r` certifying `x·b·r <= y·a·r`, for `f = x/a`, `g = y/b`.
    pub forward: Option<CatalyticWitness>,
    /// `r` certifying the reverse inequality.
    pub reverse: Option<CatalyticWitness>,
}

enum Side {
    Witness(CatalyticWitness),
    Refuted,
    Open,
}

fn probe(x: &PositiveConstantPolynomial, y: &PositiveConstantPolynomial, budget: &Budget) -> Result<Side> {
    if let DominanceVerdict::RefutedAt { .. } = spectrum::strict_dominance_check(x, y, budget.seed, budget.samples)? {
        return Ok(Side::Refuted);
    }
    let u = super::power_universal(x.vars());
    match pss::power_witness_search(x, y, &u, budget.k_max, budget.n_max)? {
        Some(w) => Ok(Side::Witness(pss::catalytic_from_power(x, y, &u, &w)?)),
        None => Ok(Side::Open),
    }
}

/// Semi-decides `f <= g` in the fraction semifield, where `x/a <= y/b` iff
/// `x·b·r <= y·a·r` for some nonzero `r`.
///
/// Each direction either finds a catalytic `r` from a power witness, is
/// refuted by a spectral point (which rules out every `r` with positive
/// constant term), or stays open. Open directions make the result
/// [`Comparison::Unknown`].
pub fn frac_leq(f: &OrderedFraction, g: &OrderedFraction, budget: &Budget) -> Result<FractionComparison> {
    let xb = f.numerator.mul(&g.denominator)?;
    let ya = g.numerator.mul(&f.denominator)?;
    let fwd = probe(&xb, &ya, budget)?;
    let rev = probe(&ya, &xb, budget)?;
    let comparison = match (&fwd, &rev) {
        (Side::Witness(_), Side::Witness(_)) => Comparison::Equivalent,
        (Side::Witness(_), Side::Refuted) => Comparison::LessStrict,
        (Side::Refuted, Side::Witness(_)) => Comparison::GreaterStrict,
        (Side::Refuted, Side::Refuted) => Comparison::Incomparable,
        _ => Comparison::Unknown,
    };
    let take = |s: Side| match s {
        Side::Witness(w) => Some(w),
        _ => None,
    };
    Ok(FractionComparison { comparison, forward: take(fwd), reverse: take(rev) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(s: &str) -> PositiveConstantPolynomial {
        PositiveConstantPolynomial::new(Polynomial::parse_univariate(s).unwrap()).unwrap()
    }

    fn frac(n: &str, d: &str) -> OrderedFraction {
        OrderedFraction::new(pc(n), pc(d)).unwrap()
    }

    #[test]
    fn positive_constant_required() {
        assert_eq!(
            PositiveConstantPolynomial::new(Polynomial::parse_univariate("X").unwrap()),
            Err(Error::NonPositiveConstant)
        );
        assert!(PositiveConstantPolynomial::new(Polynomial::zero(1)).is_ok());
        assert_eq!(OrderedFraction::new(pc("1"), pc("0")), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn comparable_numerators() {
        let r = frac_leq(&frac("1+X", "1"), &frac("2+X", "1"), &Budget::default()).unwrap();
        assert_eq!(r.comparison, Comparison::LessStrict);
        assert_eq!(r.forward.unwrap().a, Polynomial::one(1));
    }

    #[test]
    fn equal_fractions() {
        let f = frac("1+X", "2+X");
        let r = frac_leq(&f, &f, &Budget::default()).unwrap();
        assert_eq!(r.comparison, Comparison::Equivalent);
        let g = frac("2+2X", "4+2X");
        assert!(f.same_value(&g).unwrap());
        assert_eq!(frac_leq(&f, &g, &Budget::default()).unwrap().comparison, Comparison::Equivalent);
    }

    #[test]
    fn needs_a_catalyst() {
        let r = frac_leq(&frac("1+2X", "1"), &frac("2+X+X^2", "1"), &Budget::default()).unwrap();
        assert_eq!(r.comparison, Comparison::LessStrict);
        let w = r.forward.unwrap();
        let x = Polynomial::parse_univariate("1+2X").unwrap();
        let y = Polynomial::parse_univariate("2+X+X^2").unwrap();
        assert!(w.a.mul(&x).unwrap().coeffwise_le(&w.a.mul(&y).unwrap()).unwrap());
    }

    #[test]
    fn crossing_fractions_are_incomparable() {
        // 1 + 3X against 2 + X: larger at r = 0 on one side, larger degree
        // coefficient on the other.
        let r = frac_leq(&frac("1+3X", "1"), &frac("2+X", "1"), &Budget::default()).unwrap();
        assert_eq!(r.comparison, Comparison::Incomparable);
    }

    #[test]
    fn unknown_without_budget() {
        let tiny = Budget { k_max: 0, n_max: 1, ..Budget::default() };
        let r = frac_leq(&frac("1+2X", "1"), &frac("2+X+X^2", "1"), &tiny).unwrap();
        assert_eq!(r.comparison, Comparison::Unknown);
    }
}
