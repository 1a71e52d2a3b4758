use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

use super::point::DerivationPoint;

/// `D(p) = ⟨direction, ∇p(base)⟩`.
pub fn derivation_value(p: &Polynomial, d: &DerivationPoint) -> Result<Rational> {
    if p.vars() != d.base().len() {
        return Err(Error::DimensionMismatch { expected: p.vars(), got: d.base().len() });
    }
    let grad = p.gradient_at(d.base())?;
    Ok(grad.iter().zip(d.direction()).map(|(g, a)| g * a).sum())
}

/// `D(y) - D(x)`, defined when `x` and `y` agree at the base point.
pub fn derivation_gap(x: &Polynomial, y: &Polynomial, d: &DerivationPoint) -> Result<Rational> {
    let nx = x.point_eval(d.base())?;
    let ny = y.point_eval(d.base())?;
    if nx != ny {
        return Err(Error::NormMismatch { x: nx.to_string(), y: ny.to_string() });
    }
    Ok(derivation_value(y, d)? - derivation_value(x, d)?)
}
