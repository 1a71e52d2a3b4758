//! The 1-test spectrum of polynomial semirings and 2-test derivations.
//!
//! For `Q_+[X_1..X_d]` with the coefficientwise preorder, the monotone
//! homomorphisms to the reals are evaluations at points of `Q_+^d` and
//! those to the tropical reals are support functions of Newton polytopes
//! along directions `α >= 0`. Together they form the projective orthant
//! `RP^d_+`.

mod derivation;
mod dominance;
mod lev;
mod point;
pub mod sturm;
mod sweep;

pub use derivation::{derivation_gap, derivation_value};
pub use dominance::{compare_values, strict_dominance_check, DominanceVerdict, HeuristicReport, TieLocus};
pub use lev::{evaluate, lev, lev2_real, maslov2_gaps, maslov_check, LevValue, MaslovReport, MaslovRow};
pub use point::{DerivationPoint, SpectrumPoint};
pub use sweep::{enumerate_spectrum_boundary, SweepRecord};
