use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::value::LeadingTerm;
use crate::error::{Error, Result};

/// Height of an element: a natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Height {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(n) => write!(f, "{n}"),
            Height::Infinite => f.write_str("inf"),
        }
    }
}

/// Height in the leading-term semifield.
///
/// Elements with nonzero exponent bound everything by their powers, so they
/// have height 0. Constants other than 1 bound every other constant, so
/// they have height 1. The unit has height infinity.
pub fn height(x: &LeadingTerm) -> Result<Height> {
    match x {
        LeadingTerm::Zero => Err(Error::HeightOfZero),
        LeadingTerm::Term { exponent, .. } if *exponent != 0 => Ok(Height::Finite(0)),
        LeadingTerm::Term { coefficient, .. } if !coefficient.is_one() => Ok(Height::Finite(1)),
        LeadingTerm::Term { .. } => Ok(Height::Infinite),
    }
}

/// The truncated preorder `x <=_n y` on leading terms.
///
/// For nonzero elements this holds iff `h(x/y) > n`, or `h(x/y) = n` and
/// `x <= y`. Zero is only related to itself, apart from `0 <=_0 y`.
pub fn truncated_le(n: u32, x: &LeadingTerm, y: &LeadingTerm) -> bool {
    match (x, y) {
        (LeadingTerm::Zero, LeadingTerm::Zero) => true,
        (LeadingTerm::Zero, _) => n == 0,
        (_, LeadingTerm::Zero) => false,
        _ => {
            let ratio = x.mul(&y.inv().expect("nonzero"));
            match height(&ratio).expect("nonzero") {
                Height::Infinite => true,
                Height::Finite(h) if h > n => true,
                Height::Finite(h) if h == n => x <= y,
                Height::Finite(_) => false,
            }
        }
    }
}
