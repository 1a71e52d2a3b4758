use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::point::SpectrumPoint;
use crate::error::{Error, Result};
use crate::interval::{self, Interval};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::semifield::Tropical;

/// A logarithmic evaluation: exact when possible, otherwise a certified
/// enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevValue {
    Exact(Rational),
    Enclosure(Interval),
}

impl LevValue {
    pub fn lo(&self) -> Rational {
        match self {
            LevValue::Exact(q) => q.clone(),
            LevValue::Enclosure(i) => i.lo().clone(),
        }
    }

    pub fn hi(&self) -> Rational {
        match self {
            LevValue::Exact(q) => q.clone(),
            LevValue::Enclosure(i) => i.hi().clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            LevValue::Exact(q) => rational::to_f64(q),
            LevValue::Enclosure(i) => i.to_f64(),
        }
    }

    pub fn as_interval(&self) -> Interval {
        match self {
            LevValue::Exact(q) => Interval::point(q.clone()),
            LevValue::Enclosure(i) => i.clone(),
        }
    }

    /// Certainly `self <= other`: upper end of `self` below lower end of `other`.
    pub fn certainly_le(&self, other: &LevValue) -> bool {
        self.hi() <= other.lo()
    }

    /// The enclosures intersect.
    pub fn overlaps(&self, other: &LevValue) -> bool {
        self.as_interval().overlaps(&other.as_interval())
    }

    /// Text form: the exact rational, or the midpoint to 12 decimals.
    pub fn render(&self) -> String {
        match self {
            LevValue::Exact(q) => q.to_string(),
            LevValue::Enclosure(i) => format!("{:.12}", i.to_f64()),
        }
    }
}

impl fmt::Display for LevValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for LevValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

fn finite(t: Tropical) -> Result<Rational> {
    match t {
        Tropical::Finite(q) => Ok(q),
        Tropical::NegInf => Err(Error::ZeroPolynomial),
    }
}

/// Exact values `(φ(p), φ(u))`: numbers for real points, and the
/// additive-picture exponents for tropical ones.
pub fn evaluate(p: &Polynomial, phi: &SpectrumPoint) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match phi {
        SpectrumPoint::RealEval(r) => p.point_eval(r),
        SpectrumPoint::TropicalDir(a) => finite(p.tropical_eval(a)?),
    }
}

/// `lev_p(φ) = log φ(p) / log φ(u)`.
///
/// Real points give an enclosure of width at most `1e-9`; tropical
/// directions give the exact ratio `trop(p, α) / trop(u, α)`.
pub fn lev(p: &Polynomial, phi: &SpectrumPoint, u: &Polynomial) -> Result<LevValue> {
    if p.vars() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: p.vars(), got: phi.dim() });
    }
    let pv = evaluate(p, phi)?;
    let uv = evaluate(u, phi)?;
    match phi {
        SpectrumPoint::TropicalDir(_) => Ok(LevValue::Exact(pv / uv)),
        SpectrumPoint::RealEval(_) => {
            if pv.is_zero() {
                return Err(Error::ZeroEvaluation);
            }
            if pv.is_one() {
                return Ok(LevValue::Exact(Rational::zero()));
            }
            if pv == uv {
                return Ok(LevValue::Exact(Rational::one()));
            }
            Ok(LevValue::Enclosure(interval::log_ratio(&pv, &uv, &interval::default_tolerance())?))
        }
    }
}

/// Exact comparison of `lev_x(φ)` with `lev_y(φ)`.
///
/// Both share the positive denominator `log φ(u)`, so this is the
/// comparison of `φ(x)` with `φ(y)`.
pub fn compare_at(x: &Polynomial, y: &Polynomial, phi: &SpectrumPoint) -> Result<Ordering> {
    Ok(evaluate(x, phi)?.cmp(&evaluate(y, phi)?))
}

/// 2-test logarithmic evaluation at a real point `r`, relative to the
/// norm `‖·‖ = evaluation at base`: `‖p‖ · log(p(r)/‖p‖) / log u(r)`.
pub fn lev2_real(p: &Polynomial, base: &[Rational], r: &[Rational], u: &Polynomial) -> Result<LevValue> {
    let norm = p.point_eval(base)?;
    let pv = p.point_eval(r)?;
    if norm.is_zero() || pv.is_zero() {
        return Err(Error::ZeroEvaluation);
    }
    let ratio = &pv / &norm;
    if ratio.is_one() {
        return Ok(LevValue::Exact(Rational::zero()));
    }
    let uv = u.point_eval(r)?;
    if uv.is_one() {
        return Err(Error::ZeroEvaluation);
    }
    let enc = interval::log_ratio(&ratio, &uv, &(interval::default_tolerance() / &norm))?;
    Ok(LevValue::Enclosure(enc.scale(&norm)))
}

/// One row of a dequantization report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaslovRow {
    pub r: f64,
    /// `log (p(e^{rα}))^{1/r}`.
    pub value: f64,
    /// `|value - trop(p, α)|`.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaslovReport {
    pub tropical: f64,
    pub rows: Vec<MaslovRow>,
}

impl MaslovReport {
    pub fn final_gap(&self) -> Option<f64> {
        self.rows.last().map(|r| r.gap)
    }

    /// Gaps never increase along the (increasing) `r` values.
    pub fn is_monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].gap <= w[0].gap)
    }
}

/// `log-sum-exp` of the given exponents.
fn lse(xs: &[f64]) -> f64 {
    let m = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}

/// Numeric dequantization check: `(1/r) log Σ c_s e^{r⟨α, s⟩}` against
/// `max_s ⟨α, s⟩`, evaluated stably in the log domain.
pub fn maslov_check(p: &Polynomial, alpha: &[Rational], r_values: &[f64]) -> Result<MaslovReport> {
    let trop = rational::to_f64(&finite(p.tropical_eval(alpha)?)?);
    let terms: Vec<(f64, f64)> =
        p.terms().map(|(e, c)| (rational::to_f64(c).ln(), rational::to_f64(&e.dot(alpha)))).collect();
    let rows = r_values
        .iter()
        .map(|&r| {
            let exps: Vec<f64> = terms.iter().map(|(lc, a)| lc + r * a).collect();
            let value = lse(&exps) / r;
            MaslovRow { r, value, gap: (value - trop).abs() }
        })
        .collect();
    Ok(MaslovReport { tropical: trop, rows })
}

/// Gaps for the two limits of the two-term dequantization: as `r → ∞`,
/// `(1/r) log(γe^{rα/γ} + δe^{rβ/δ})` against `max(α/γ, β/δ)`; as `r → 0`,
/// `(γe^{rα/γ} + δe^{rβ/δ} - γ - δ)/r` against `α + β`.
pub fn maslov2_gaps(
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
    large: &[f64],
    small: &[f64],
) -> (Vec<f64>, Vec<f64>) {
    let target = (alpha / gamma).max(beta / delta);
    let at_infinity = large
        .iter()
        .map(|&r| {
            let v = lse(&[gamma.ln() + r * alpha / gamma, delta.ln() + r * beta / delta]) / r;
            (v - target).abs()
        })
        .collect();
    let at_zero = small
        .iter()
        .map(|&r| {
            let v = (gamma * (r * alpha / gamma).exp_m1() + delta * (r * beta / delta).exp_m1()) / r;
            (v - (alpha + beta)).abs()
        })
        .collect();
    (at_infinity, at_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::power_universal;
    use crate::rational::{int, rat};

    fn uni(s: &str) -> Polynomial {
        Polynomial::parse_univariate(s).unwrap()
    }

    #[test]
    fn lev_of_u_and_constants() {
        let u = power_universal(1);
        for phi in [
            SpectrumPoint::RealEval(vec![int(0)]),
            SpectrumPoint::RealEval(vec![rat(7, 3)]),
            SpectrumPoint::TropicalDir(vec![int(1)]),
        ] {
            assert_eq!(lev(&u, &phi, &u).unwrap(), LevValue::Exact(int(1)));
            assert_eq!(lev(&uni("1"), &phi, &u).unwrap(), LevValue::Exact(int(0)));
        }
    }

    #[test]
    fn tropical_lev_is_degree_ratio() {
        let u = power_universal(1);
        let v = lev(&uni("2+X+X^2"), &SpectrumPoint::TropicalDir(vec![int(1)]), &u).unwrap();
        assert_eq!(v, LevValue::Exact(int(2)));
    }

    #[test]
    fn real_lev_enclosure() {
        let u = power_universal(1);
        let v = lev(&uni("1+X"), &SpectrumPoint::RealEval(vec![int(1)]), &u).unwrap();
        let expected = 2f64.ln() / 3f64.ln();
        assert!((v.to_f64() - expected).abs() < 1e-12);
        assert!(v.hi() - v.lo() <= crate::interval::default_tolerance());
    }

    #[test]
    fn maslov_univariate() {
        let rep = maslov_check(&uni("1+X"), &[int(1)], &[5.0, 10.0, 20.0]).unwrap();
        assert!(rep.is_monotone());
        assert!(rep.final_gap().unwrap() < 1e-8);
        let c = maslov_check(&uni("1"), &[int(1)], &[5.0, 10.0]).unwrap();
        assert!(c.rows.iter().all(|r| r.gap == 0.0));
    }

    #[test]
    fn two_test_lev() {
        let u = power_universal(1);
        let base = [int(1)];
        assert_eq!(lev2_real(&uni("1+X"), &base, &[int(1)], &u).unwrap(), LevValue::Exact(int(0)));
        // 2·log(3/2)/log 4 at r = 2 for ‖1+X‖ = 2.
        let v = lev2_real(&uni("1+X"), &base, &[int(2)], &u).unwrap();
        assert!((v.to_f64() - 2.0 * 1.5f64.ln() / 4f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn two_term_limits() {
        let (inf, zero) = maslov2_gaps(1.0, 2.0, 1.5, 3.0, &[10.0, 100.0], &[1e-2, 1e-5]);
        assert!(inf[1] < inf[0] && inf[1] < 0.02);
        assert!(zero[1] < zero[0] && zero[1] < 1e-4);
    }
}
