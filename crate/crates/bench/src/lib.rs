//! Inputs shared by the benchmarks.

use semiring_pss::{Polynomial, PositiveConstantPolynomial};

/// Univariate pairs `(x, y)` with `x <= y` after a catalyst, of growing size.
pub const PAIRS: &[(&str, &str)] =
    &[("1+X", "2+X"), ("1+2X", "2+X+X^2"), ("1+3X+X^3", "3+X+2X^2+X^3"), ("1+4X+X^4", "2+2X+3X^2+X^3+X^4")];

pub fn pair(i: usize) -> (PositiveConstantPolynomial, PositiveConstantPolynomial) {
    let p =
        |s: &str| PositiveConstantPolynomial::new(Polynomial::parse_univariate(s).expect("literal")).expect("literal");
    (p(PAIRS[i].0), p(PAIRS[i].1))
}
