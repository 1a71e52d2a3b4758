use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use semiring_pss::{Polynomial, PositiveConstantPolynomial};

/// Reads a polynomial from a file or an inline argument.
///
/// Text starting with `{` is the JSON form `{"vars": d, "terms": [...]}`;
/// anything else is a univariate literal such as `1+2X+X^2`.
pub fn polynomial(arg: &str) -> Result<Polynomial> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    let text = text.trim();
    if text.starts_with('{') {
        serde_json::from_str(text).with_context(|| format!("parsing polynomial JSON from {arg}"))
    } else {
        Polynomial::parse_univariate(text).with_context(|| format!("parsing polynomial {text:?}"))
    }
}

pub fn positive_constant(arg: &str) -> Result<PositiveConstantPolynomial> {
    let p = polynomial(arg)?;
    if p.is_zero() {
        bail!("{arg}: polynomial must be nonzero");
    }
    PositiveConstantPolynomial::new(p).with_context(|| format!("{arg}: constant term must be positive"))
}

pub fn pair(x: &str, y: &str) -> Result<(PositiveConstantPolynomial, PositiveConstantPolynomial)> {
    let (x, y) = (positive_constant(x)?, positive_constant(y)?);
    if x.vars() != y.vars() {
        bail!("variable counts differ: {} vs {}", x.vars(), y.vars());
    }
    Ok((x, y))
}
