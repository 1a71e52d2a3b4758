//! Finite-dimensional test algebras: truncated polynomial rings
//! `R[X]/(X^n)` and coordinate algebras `R^n` with lexicographic cones,
//! plus the dual-number semifield.

mod cone;
mod jet;

pub use cone::{
    check_quasiorder_axioms, classify_dim2, in_positivator, jet_in_positivator, Algebra, Dim2Class, LexCone,
    QuasiorderReport, SpanningMember,
};
pub use jet::{jet_in_cone, jet_is_positive, Jet, Sign, SignSequence};

use crate::error::Result;
use crate::order::Comparison;
use crate::semifield::DualNumber;

/// Comparable only when the real parts agree, then by the `X` coefficient.
pub fn dual_compare(a: &DualNumber, b: &DualNumber) -> Comparison {
    a.compare(b)
}

/// `(r + sX)^{-1} = r^{-2}(r - sX)`.
pub fn dual_inv(a: &DualNumber) -> Result<DualNumber> {
    a.inv()
}
