//! Concrete (pre)ordered semiring and semifield instances.
//!
//! An [`Instance`] describes the algebraic structure and preorder; a
//! [`Value`] is an element. All operations are pure functions of the
//! instance and its arguments, and every value is validated against the
//! instance before it is used.
//!
//! The tropical reals are represented in the additive picture
//! `(Q ∪ {-∞}, max, +)`, and the real semifield by its exact rational
//! subsemifield.

mod height;
mod instance;
mod types;
mod value;

pub use height::{height, truncated_le, Height};
pub use instance::Instance;
pub use types::FiveType;
pub use value::{DualNumber, LeadingTerm, Tropical, Value};
