use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use super::lev::evaluate;
use super::point::SpectrumPoint;
use super::sturm::{isolate_positive_roots, refine, Refined, SignedPoly};
use crate::error::{Error, Result};
use crate::poly::{tropical_verdict, Polynomial, PositiveConstantPolynomial, TropicalVerdict};
use crate::rational::{int, rat, Rational};
use crate::sample::Sampler;

/// Where `φ(x) = φ(y)` was found.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TieLocus {
    Exact(SpectrumPoint),
    /// A real evaluation at an irrational root of `y - x` inside `(lo, hi)`.
    RealRootInterval {
        #[serde_as(as = "DisplayFromStr")]
        lo: Rational,
        #[serde_as(as = "DisplayFromStr")]
        hi: Rational,
    },
}

/// Diagnostics for an inconclusive multivariate check.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeuristicReport {
    pub grid_points: usize,
    pub random_points: usize,
    /// Smallest sampled `φ(y) - φ(x)` over real evaluations.
    #[serde_as(as = "DisplayFromStr")]
    pub min_real_gap: Rational,
}

/// Outcome of checking `φ(x) < φ(y)` over the whole spectrum.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DominanceVerdict {
    /// Strict everywhere: exact for one variable.
    StrictEverywhere,
    /// `φ(x) > φ(y)` at `point`, with the exact values. For tropical
    /// directions the values are the additive-picture exponents.
    RefutedAt {
        point: SpectrumPoint,
        #[serde_as(as = "DisplayFromStr")]
        x_value: Rational,
        #[serde_as(as = "DisplayFromStr")]
        y_value: Rational,
    },
    /// `φ(x) <= φ(y)` wherever checked, with equality at `locus`.
    TieAt { locus: TieLocus },
    /// No refutation or tie found, but the real part was only sampled.
    UnknownHeuristic(HeuristicReport),
}

impl DominanceVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, DominanceVerdict::RefutedAt { .. })
    }
}

enum RealPart {
    Refuted(SpectrumPoint),
    Tie(TieLocus),
    Strict,
    Unknown(HeuristicReport),
}

fn refuted(point: SpectrumPoint, x: &Polynomial, y: &Polynomial) -> Result<DominanceVerdict> {
    let x_value = evaluate(x, &point)?;
    let y_value = evaluate(y, &point)?;
    debug_assert!(x_value > y_value);
    Ok(DominanceVerdict::RefutedAt { point, x_value, y_value })
}

/// Exact decision of `x(r) < y(r)` for all `r >= 0` in one variable.
fn univariate_real(x: &Polynomial, y: &Polynomial) -> RealPart {
    let real = |r: Rational| SpectrumPoint::RealEval(vec![r]);
    let g = SignedPoly::difference(y, x);
    if g.is_zero() {
        return RealPart::Tie(TieLocus::Exact(real(Rational::zero())));
    }
    let g0 = g.eval(&Rational::zero());
    if g0.is_negative() {
        return RealPart::Refuted(real(Rational::zero()));
    }
    // On (0, ∞), g has the sign of h = g / X^m.
    let h = g.shift_down(g.low_order());
    let s = h.squarefree();
    let roots = isolate_positive_roots(&s);

    // One sample in every gap between consecutive positive roots.
    let mut samples = vec![s.positive_root_lower_bound()];
    for iv in &roots {
        if iv.lo.is_positive() {
            samples.push(iv.lo.clone());
        }
        samples.push(iv.hi.clone());
    }
    if roots.is_empty() {
        samples.push(int(1));
    }
    samples.sort();
    samples.dedup();
    if let Some(r) = samples.into_iter().find(|r| h.eval(r).is_negative()) {
        return RealPart::Refuted(real(r));
    }
    if g0.is_zero() {
        return RealPart::Tie(TieLocus::Exact(real(Rational::zero())));
    }
    if let Some(iv) = roots.first() {
        return RealPart::Tie(match refine(&s, iv, 64) {
            Refined::Exact(root) => TieLocus::Exact(real(root)),
            Refined::Interval(iv) => TieLocus::RealRootInterval { lo: iv.lo, hi: iv.hi },
        });
    }
    RealPart::Strict
}

/// Grid `{0, 1/2, 1, 2, 5}^d` plus seeded random points in `[0, 10]^d`.
fn sampled_real(x: &Polynomial, y: &Polynomial, seed: u64, samples: usize) -> Result<RealPart> {
    let d = x.vars();
    let axis = [int(0), rat(1, 2), int(1), int(2), int(5)];
    let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 0..d {
        points = points
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |a| {
                    let mut q = p.clone();
                    q.push(a.clone());
                    q
                })
            })
            .collect();
    }
    let grid_points = points.len();
    let mut sampler = Sampler::new(seed);
    for _ in 0..samples {
        points.push((0..d).map(|_| rat(sampler.range_i64(0, 1000), 100)).collect());
    }
    let mut min_gap: Option<Rational> = None;
    let mut tie = None;
    for r in points {
        let gap = y.point_eval(&r)? - x.point_eval(&r)?;
        if gap.is_negative() {
            return Ok(RealPart::Refuted(SpectrumPoint::RealEval(r)));
        }
        if gap.is_zero() && tie.is_none() {
            tie = Some(r.clone());
        }
        if min_gap.as_ref().is_none_or(|m| &gap < m) {
            min_gap = Some(gap);
        }
    }
    if let Some(r) = tie {
        return Ok(RealPart::Tie(TieLocus::Exact(SpectrumPoint::RealEval(r))));
    }
    Ok(RealPart::Unknown(HeuristicReport {
        grid_points,
        random_points: samples,
        min_real_gap: min_gap.unwrap_or_else(Rational::zero),
    }))
}

/// Checks `φ(x) < φ(y)` at every point of the 1-test spectrum.
///
/// The tropical part is decided exactly by linear programming. The real
/// part is decided exactly in one variable by root isolation of `y - x`
/// on `[0, ∞)`, and sampled (grid plus `samples` seeded random points)
/// otherwise. Refutations take precedence over ties, and real points over
/// tropical ones; the evaluation at the origin is checked first.
pub fn strict_dominance_check(
    x: &PositiveConstantPolynomial,
    y: &PositiveConstantPolynomial,
    seed: u64,
    samples: usize,
) -> Result<DominanceVerdict> {
    if x.vars() != y.vars() {
        return Err(Error::VariableCountMismatch { left: x.vars(), right: y.vars() });
    }
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (x, y) = (x.as_polynomial(), y.as_polynomial());
    let real = if x.vars() == 1 { univariate_real(x, y) } else { sampled_real(x, y, seed, samples)? };
    if let RealPart::Refuted(point) = real {
        return refuted(point, x, y);
    }
    let trop = tropical_verdict(x, y)?;
    if let TropicalVerdict::Refuted { direction } = trop {
        return refuted(SpectrumPoint::TropicalDir(direction), x, y);
    }
    match (real, trop) {
        (RealPart::Tie(locus), _) => Ok(DominanceVerdict::TieAt { locus }),
        (_, TropicalVerdict::Tie { direction }) => {
            Ok(DominanceVerdict::TieAt { locus: TieLocus::Exact(SpectrumPoint::TropicalDir(direction)) })
        }
        (RealPart::Unknown(report), _) => Ok(DominanceVerdict::UnknownHeuristic(report)),
        _ => Ok(DominanceVerdict::StrictEverywhere),
    }
}

/// Exact comparison of `φ(x)` and `φ(y)` at a point.
pub fn compare_values(x: &Polynomial, y: &Polynomial, phi: &SpectrumPoint) -> Result<Ordering> {
    Ok(evaluate(x, phi)?.cmp(&evaluate(y, phi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiIndex;

    fn pc(s: &str) -> PositiveConstantPolynomial {
        PositiveConstantPolynomial::new(Polynomial::parse_univariate(s).unwrap()).unwrap()
    }

    fn check(x: &str, y: &str) -> DominanceVerdict {
        strict_dominance_check(&pc(x), &pc(y), 1, 16).unwrap()
    }

    #[test]
    fn corpus_examples() {
        assert_eq!(check("1+2X", "2+X+X^2"), DominanceVerdict::StrictEverywhere);
        assert_eq!(
            check("1+X", "2+X"),
            DominanceVerdict::TieAt { locus: TieLocus::Exact(SpectrumPoint::TropicalDir(vec![int(1)])) }
        );
        assert_eq!(
            check("2+X", "1+X"),
            DominanceVerdict::RefutedAt {
                point: SpectrumPoint::RealEval(vec![int(0)]),
                x_value: int(2),
                y_value: int(1)
            }
        );
    }

    #[test]
    fn interior_refutation() {
        // y - x = 1 - 3X + X^2 is negative on ((3-√5)/2, (3+√5)/2).
        match check("1+3X", "2+X^2") {
            DominanceVerdict::RefutedAt { point: SpectrumPoint::RealEval(r), x_value, y_value } => {
                assert!(x_value > y_value);
                assert!(r[0] > rat(38, 100) && r[0] < rat(262, 100));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn double_root_is_a_tie() {
        // y - x = 1 - 2X + X^2 = (1 - X)^2.
        assert_eq!(
            check("1+2X+X^3", "2+X^2+X^3"),
            DominanceVerdict::TieAt { locus: TieLocus::Exact(SpectrumPoint::RealEval(vec![int(1)])) }
        );
        // y - x = (X^2 - 2)^2 = 4 - 4X^2 + X^4 touches zero at √2.
        match check("1+4X^2", "5+X^4") {
            DominanceVerdict::TieAt { locus: TieLocus::RealRootInterval { lo, hi } } => {
                assert!(lo < rat(1415, 1000) && hi > rat(1414, 1000));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identical_inputs_tie() {
        assert!(matches!(check("3+X", "3+X"), DominanceVerdict::TieAt { .. }));
    }

    #[test]
    fn multivariate_is_heuristic() {
        let p = |terms: &[(&[u32], i64)]| {
            PositiveConstantPolynomial::new(
                Polynomial::from_terms(2, terms.iter().map(|(e, c)| (MultiIndex::new(e.to_vec()), int(*c)))).unwrap(),
            )
            .unwrap()
        };
        let x = p(&[(&[0, 0], 1), (&[1, 0], 1)]);
        let y = p(&[(&[0, 0], 2), (&[1, 0], 1), (&[2, 0], 1), (&[0, 1], 1)]);
        assert!(matches!(strict_dominance_check(&x, &y, 3, 20).unwrap(), DominanceVerdict::UnknownHeuristic(_)));
        assert!(strict_dominance_check(&y, &x, 3, 20).unwrap().is_refuted());
    }
}
