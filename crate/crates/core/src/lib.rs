//! Exact arithmetic for preordered semirings and semifields, spectra of
//! polynomial semirings, and constructive Positivstellensatz witness search.
//!
//! The crate is organised bottom-up:
//!
//! * [`semifield`]: concrete (pre)ordered semiring instances, comparisons,
//!   the five-type classification, ambient preorders and height.
//! * [`laws`]: executable forms of the inequality lemmas that hold in every
//!   preordered semifield.
//! * [`poly`]: sparse polynomials over the nonnegative rationals with the
//!   coefficientwise preorder, Newton polytope queries and the
//!   polynomial identity used by the abstract Positivstellensatz.
//! * [`spectrum`]: real evaluations, tropical directions and derivations,
//!   with the strict-dominance check that drives refutation.
//! * [`jets`]: finite-dimensional test algebras (truncated polynomial rings
//!   and coordinate algebras) with lexicographic cones.
//! * [`pss`]: power, catalytic and Strassen-form witnesses and the decision
//!   procedure combining them with spectral refutation.

pub mod error;
pub mod interval;
pub mod jets;
pub mod laws;
pub mod lp;
pub mod order;
pub mod poly;
pub mod pss;
pub mod rational;
pub mod sample;
pub mod semifield;
pub mod spectrum;

pub use error::{Error, Result};
pub use order::Comparison;
pub use poly::{MultiIndex, Polynomial, PositiveConstantPolynomial};
pub use rational::Rational;
pub use semifield::{FiveType, Height, Instance, LeadingTerm, Value};
