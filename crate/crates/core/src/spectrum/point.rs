use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point of the 1-test spectrum of `Q_+[X_1..X_d]`.
///
/// In projective coordinates `[r_0 : r_1 : ... : r_d]`, real evaluations
/// have `r_0 = 1` and tropical directions have `r_0 = 0`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectrumPoint {
    /// Evaluation at a point of `Q_+^d`.
    RealEval(#[serde_as(as = "Vec<DisplayFromStr>")] Vec<Rational>),
    /// Tropical evaluation along a nonzero direction `α >= 0`.
    TropicalDir(#[serde_as(as = "Vec<DisplayFromStr>")] Vec<Rational>),
}

impl SpectrumPoint {
    pub fn real(point: Vec<Rational>) -> Result<Self> {
        if point.iter().any(Signed::is_negative) {
            return Err(Error::Parse("evaluation point must be nonnegative".into()));
        }
        Ok(SpectrumPoint::RealEval(point))
    }

    pub fn tropical(direction: Vec<Rational>) -> Result<Self> {
        if direction.iter().any(Signed::is_negative) || direction.iter().all(Zero::is_zero) {
            return Err(Error::Parse("direction must be nonnegative and nonzero".into()));
        }
        Ok(SpectrumPoint::TropicalDir(direction))
    }

    pub fn dim(&self) -> usize {
        match self {
            SpectrumPoint::RealEval(v) | SpectrumPoint::TropicalDir(v) => v.len(),
        }
    }

    /// `[1 : r]` or `[0 : α / Σα]`.
    pub fn projective(&self) -> Vec<Rational> {
        match self {
            SpectrumPoint::RealEval(r) => {
                let mut v = vec![Rational::from_integer(1.into())];
                v.extend(r.iter().cloned());
                v
            }
            SpectrumPoint::TropicalDir(a) => {
                let s: Rational = a.iter().sum();
                let mut v = vec![Rational::zero()];
                v.extend(a.iter().map(|x| x / &s));
                v
            }
        }
    }

    /// Reads projective coordinates; `r_0 > 0` gives a real evaluation.
    pub fn from_projective(coords: &[Rational]) -> Result<Self> {
        let (r0, rest) = coords.split_first().ok_or_else(|| Error::Parse("empty projective point".into()))?;
        if r0.is_negative() {
            return Err(Error::Parse("projective coordinates must be nonnegative".into()));
        }
        if r0.is_zero() {
            Self::tropical(rest.to_vec())
        } else {
            Self::real(rest.iter().map(|x| x / r0).collect())
        }
    }
}

impl fmt::Display for SpectrumPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.projective().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", coords.join(":"))
    }
}

/// A monotone derivation at the evaluation `‖·‖` at `base`.
///
/// `D(p) = ⟨direction, ∇p(base)⟩` with the direction rescaled so that
/// `D(u) = 1` for `u = 2 + ΣX_i`.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DerivationPoint {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    base: Vec<Rational>,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    direction: Vec<Rational>,
}

impl DerivationPoint {
    pub fn new(base: Vec<Rational>, direction: Vec<Rational>) -> Result<Self> {
        if base.len() != direction.len() {
            return Err(Error::LengthMismatch { left: base.len(), right: direction.len() });
        }
        if base.iter().any(|b| !b.is_positive()) {
            return Err(Error::Parse("base point must be strictly positive".into()));
        }
        if direction.iter().any(Signed::is_negative) || direction.iter().all(Zero::is_zero) {
            return Err(Error::Parse("direction must be nonnegative and nonzero".into()));
        }
        // ∇u = (1, ..., 1), so D(u) = Σ direction.
        let s: Rational = direction.iter().sum();
        let direction = direction.into_iter().map(|x| x / &s).collect();
        Ok(DerivationPoint { base, direction })
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    /// Normalised direction, summing to 1.
    pub fn direction(&self) -> &[Rational] {
        &self.direction
    }
}
