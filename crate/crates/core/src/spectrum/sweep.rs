use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use super::lev::{compare_at, lev, LevValue};
use super::point::SpectrumPoint;
use crate::error::{Error, Result};
use crate::poly::{power_universal, Polynomial};
use crate::rational::Rational;

/// One sampled point of the compactified spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRecord {
    pub point: SpectrumPoint,
    pub lev_x: LevValue,
    pub lev_y: LevValue,
    /// Exact comparison of `lev_x` with `lev_y`.
    pub order: Ordering,
}

#[derive(Serialize)]
struct RecordJson {
    point: Vec<String>,
    lev_x: String,
    lev_y: String,
}

impl SweepRecord {
    /// `{"point": [...], "lev_x": "...", "lev_y": "..."}` on one line.
    pub fn to_ndjson(&self) -> String {
        serde_json::to_string(&RecordJson {
            point: self.point.projective().iter().map(ToString::to_string).collect(),
            lev_x: self.lev_x.render(),
            lev_y: self.lev_y.render(),
        })
        .expect("serializable")
    }
}

/// Integer compositions of `total` into `parts` nonnegative parts, in
/// lexicographically decreasing order of the first coordinate.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Samples the projective simplex `r_0 + ... + r_d = 1` on the grid with
/// step `1 / (2·resolution)` and reports both logarithmic evaluations at
/// each point. Output order is deterministic.
pub fn enumerate_spectrum_boundary(x: &Polynomial, y: &Polynomial, resolution: u32) -> Result<Vec<SweepRecord>> {
    if x.vars() != y.vars() {
        return Err(Error::VariableCountMismatch { left: x.vars(), right: y.vars() });
    }
    if resolution == 0 {
        return Err(Error::Parse("resolution must be at least 1".into()));
    }
    let d = x.vars();
    let u = power_universal(d);
    let grid = compositions(2 * resolution, d + 1);
    grid.par_iter()
        .map(|c| {
            let coords: Vec<Rational> = c.iter().map(|&k| Rational::from_integer(k.into())).collect();
            let point = SpectrumPoint::from_projective(&coords)?;
            Ok(SweepRecord {
                lev_x: lev(x, &point, &u)?,
                lev_y: lev(y, &point, &u)?,
                order: compare_at(x, y, &point)?,
                point,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn uni(s: &str) -> Polynomial {
        Polynomial::parse_univariate(s).unwrap()
    }

    #[test]
    fn resolution_one() {
        let recs = enumerate_spectrum_boundary(&uni("1+X"), &uni("2+X"), 1).unwrap();
        let pts: Vec<String> = recs.iter().map(|r| r.point.to_string()).collect();
        assert_eq!(pts, ["[1:0]", "[1:1]", "[0:1]"]);
        assert_eq!(recs[0].to_ndjson(), r#"{"point":["1","0"],"lev_x":"0","lev_y":"1"}"#);
    }

    #[test]
    fn equal_inputs() {
        let p = uni("3+X+X^3");
        for r in enumerate_spectrum_boundary(&p, &p, 4).unwrap() {
            assert_eq!(r.lev_x, r.lev_y);
            assert_eq!(r.order, Ordering::Equal);
        }
    }

    #[test]
    fn grid_size() {
        let x = Polynomial::one(2);
        assert_eq!(enumerate_spectrum_boundary(&x, &x, 2).unwrap().len(), 15);
        assert_eq!(enumerate_spectrum_boundary(&uni("1"), &uni("1"), 10).unwrap().len(), 21);
        let recs = enumerate_spectrum_boundary(&uni("1+2X"), &uni("2+X+X^2"), 10).unwrap();
        assert!(recs.iter().all(|r| r.order == Ordering::Less));
        assert_eq!(recs.last().unwrap().lev_y, LevValue::Exact(int(2)));
    }
}
