//! Newton polytope queries, decided exactly by rational linear programming.
//!
//! Tropical evaluation at a direction `α >= 0` is the support function of
//! the Newton polytope. `p` is dominated by `q` at every direction iff each
//! support point of `p` lies in `conv(supp q) - R_+^d`.

use num_traits::{One, Signed, Zero};

use super::polynomial::{MultiIndex, Polynomial};
use crate::error::{Error, Result};
use crate::lp::{LinearProgram, LpOutcome, Relation, Sense};
use crate::rational::Rational;

fn check_pair(p: &Polynomial, q: &Polynomial) -> Result<()> {
    if p.vars() != q.vars() {
        return Err(Error::VariableCountMismatch { left: p.vars(), right: q.vars() });
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(())
}

/// Whether `v <= Σ λⱼ βⱼ` for some convex combination of `points`.
pub fn below_hull(v: &MultiIndex, points: &[MultiIndex]) -> bool {
    let d = v.len();
    let mut lp = LinearProgram::new(points.len());
    for i in 0..d {
        let row: Vec<Rational> = points.iter().map(|b| Rational::from_integer(b.exponents()[i].into())).collect();
        lp.add_constraint(row, Relation::Ge, Rational::from_integer(v.exponents()[i].into())).expect("row length");
    }
    lp.add_constraint(vec![Rational::one(); points.len()], Relation::Eq, Rational::one()).expect("row length");
    lp.solve().is_feasible()
}

/// The worst direction for a single support point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionalGap {
    /// `min_α (max_j ⟨α, βⱼ⟩ - ⟨α, v⟩)` over the simplex `Σα = 1, α >= 0`.
    pub value: Rational,
    /// A direction attaining the minimum.
    pub direction: Vec<Rational>,
}

/// Minimises the support-function gap between `points` and `v` over
/// normalised nonnegative directions.
///
/// Variables are `α_1..α_d, t`; the program is
/// `min t - ⟨α, v⟩` subject to `⟨α, βⱼ⟩ <= t` and `Σα = 1`.
pub fn support_gap(v: &MultiIndex, points: &[MultiIndex]) -> DirectionalGap {
    let d = v.len();
    let mut lp = LinearProgram::new(d + 1);
    let mut objective: Vec<Rational> = v.as_rationals().into_iter().map(|x| -x).collect();
    objective.push(Rational::one());
    lp.set_objective(Sense::Minimize, objective).expect("length");
    for b in points {
        let mut row = b.as_rationals();
        row.push(-Rational::one());
        lp.add_constraint(row, Relation::Le, Rational::zero()).expect("length");
    }
    let mut norm = vec![Rational::one(); d];
    norm.push(Rational::zero());
    lp.add_constraint(norm, Relation::Eq, Rational::one()).expect("length");
    match lp.solve() {
        LpOutcome::Optimal { value, mut point } => {
            point.truncate(d);
            DirectionalGap { value, direction: point }
        }
        other => unreachable!("support gap program is feasible and bounded, got {other:?}"),
    }
}

/// `tropical_eval(p, α) <= tropical_eval(q, α)` for every `α >= 0`.
pub fn newton_dominates(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    check_pair(p, q)?;
    let points = q.support();
    Ok(p.support().iter().all(|v| below_hull(v, &points)))
}

/// Gaps for every support point of `p`, in canonical order.
pub fn dominance_gaps(p: &Polynomial, q: &Polynomial) -> Result<Vec<(MultiIndex, DirectionalGap)>> {
    check_pair(p, q)?;
    let points = q.support();
    Ok(p.support()
        .into_iter()
        .map(|v| {
            let g = support_gap(&v, &points);
            (v, g)
        })
        .collect())
}

/// Outcome of the strict tropical comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TropicalVerdict {
    /// Strict inequality at every nonzero direction.
    Strict,
    /// Weak inequality everywhere, equality at `direction`.
    Tie { direction: Vec<Rational> },
    /// `p` exceeds `q` at `direction`.
    Refuted { direction: Vec<Rational> },
}

/// Compares `p` against `q` at all nonzero directions `α >= 0`.
///
/// The support function is positively homogeneous, so restricting to the
/// simplex loses nothing. The minimal gap over all support points of `p`
/// decides: negative refutes, zero is a tie, positive is strict.
pub fn tropical_verdict(p: &Polynomial, q: &Polynomial) -> Result<TropicalVerdict> {
    let gaps = dominance_gaps(p, q)?;
    let worst = gaps.into_iter().map(|(_, g)| g).min_by(|a, b| a.value.cmp(&b.value)).expect("p is nonzero");
    Ok(if worst.value.is_negative() {
        TropicalVerdict::Refuted { direction: worst.direction }
    } else if worst.value.is_zero() {
        TropicalVerdict::Tie { direction: worst.direction }
    } else {
        TropicalVerdict::Strict
    })
}

/// `tropical_eval(p, α) < tropical_eval(q, α)` for every nonzero `α >= 0`.
pub fn newton_dominates_strict(p: &Polynomial, q: &Polynomial) -> Result<bool> {
    Ok(tropical_verdict(p, q)? == TropicalVerdict::Strict)
}
