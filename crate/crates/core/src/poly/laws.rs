//! Chaining laws checked in the coefficientwise preorder on polynomials.

use super::polynomial::Polynomial;
use crate::error::Result;
use crate::laws::LawOutcome;

fn outcome(ok: bool) -> LawOutcome {
    if ok {
        LawOutcome::Holds
    } else {
        LawOutcome::Violated
    }
}

/// `a + x <= a + y` gives `a + n·x <= a + n·y`.
pub fn sharpen_add(a: &Polynomial, x: &Polynomial, y: &Polynomial, n: u64) -> Result<LawOutcome> {
    if !a.add(x)?.coeffwise_le(&a.add(y)?)? {
        return Ok(LawOutcome::Vacuous);
    }
    let n = crate::rational::from_u64(n);
    let lhs = a.add(&x.scale(&n)?)?;
    let rhs = a.add(&y.scale(&n)?)?;
    Ok(outcome(lhs.coeffwise_le(&rhs)?))
}

/// For univariate `p` over `N` with every coefficient up to its degree
/// nonzero: `x + 1 <= y + 1` gives `p(x) <= p(y)`.
pub fn add_to_mult(p: &Polynomial, x: &Polynomial, y: &Polynomial) -> Result<LawOutcome> {
    let full = p.vars() == 1 && p.has_natural_coefficients() && p.degree().is_some_and(|d| p.len() as u64 == d + 1);
    if !full {
        return Ok(LawOutcome::Vacuous);
    }
    let one = Polynomial::one(x.vars());
    if !x.add(&one)?.coeffwise_le(&y.add(&one)?)? {
        return Ok(LawOutcome::Vacuous);
    }
    Ok(outcome(p.compose(x)?.coeffwise_le(&p.compose(y)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(s: &str) -> Polynomial {
        Polynomial::parse_univariate(s).unwrap()
    }

    #[test]
    fn chaining() {
        assert_eq!(sharpen_add(&uni("1+X"), &uni("X^2"), &uni("2X^2"), 7).unwrap(), LawOutcome::Holds);
        assert_eq!(sharpen_add(&uni("1"), &uni("X"), &uni("1"), 3).unwrap(), LawOutcome::Vacuous);
    }

    #[test]
    fn substitution() {
        let p = uni("1 + 2X + X^2");
        assert_eq!(add_to_mult(&p, &uni("X"), &uni("X + X^3")).unwrap(), LawOutcome::Holds);
        // Missing the linear coefficient: not a valid p.
        assert_eq!(add_to_mult(&uni("1 + X^2"), &uni("X"), &uni("2X")).unwrap(), LawOutcome::Vacuous);
    }
}
