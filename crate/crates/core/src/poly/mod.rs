//! Sparse polynomials over the nonnegative rationals.
//!
//! The ambient object is the semiring `Q_+[X_1..X_d]` with the
//! coefficientwise preorder. Natural-coefficient polynomials are the same
//! type; [`Polynomial::has_natural_coefficients`] tests the restriction.

mod fraction;
mod identity;
pub mod laws;
pub mod newton;
mod polynomial;

pub use fraction::{frac_leq, FractionComparison, OrderedFraction, PositiveConstantPolynomial};
pub use identity::{closed_form, verify_curious_identity, IdentityReport, IdentityVars};
pub use newton::{newton_dominates, newton_dominates_strict, tropical_verdict, TropicalVerdict};
pub use polynomial::{power_universal, MultiIndex, Polynomial};
