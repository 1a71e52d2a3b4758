//! Inequality laws valid in every preordered semifield, as executable checks.
//!
//! Each check evaluates its hypotheses in the given instance first. If they
//! fail the outcome is [`LawOutcome::Vacuous`]; otherwise the conclusion is
//! evaluated exactly and reported as [`LawOutcome::Holds`] or
//! [`LawOutcome::Violated`]. A violation in a lawful instance is a bug.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::order::Comparison;
use crate::semifield::{Instance, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LawOutcome {
    Holds,
    Vacuous,
    Violated,
}

impl LawOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            LawOutcome::Holds
        } else {
            LawOutcome::Violated
        }
    }

    pub fn is_violated(self) -> bool {
        self == LawOutcome::Violated
    }
}

fn le(f: &Instance, a: &Value, b: &Value) -> Result<bool> {
    Ok(f.compare(a, b)?.is_le())
}

fn equiv(f: &Instance, a: &Value, b: &Value) -> Result<bool> {
    Ok(f.compare(a, b)? == Comparison::Equivalent)
}

fn nat(f: &Instance, n: u64) -> Value {
    f.from_natural(n)
}

fn add(f: &Instance, a: &Value, b: &Value) -> Result<Value> {
    f.add(a, b)
}

fn mul(f: &Instance, a: &Value, b: &Value) -> Result<Value> {
    f.mul(a, b)
}

fn pow(f: &Instance, x: &Value, k: i64) -> Result<Value> {
    f.pow(x, k)
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `x + x⁻¹`.
fn sym(f: &Instance, x: &Value) -> Result<Value> {
    add(f, x, &f.inv(x)?)
}

/// `x + x⁻¹ >= 2`, the standing hypothesis of the power lemmas.
fn sym_at_least_two(f: &Instance, x: &Value) -> Result<bool> {
    if f.is_zero(x) {
        return Ok(false);
    }
    le(f, &nat(f, 2), &sym(f, x)?)
}

/// `m·xⁿ + n·x⁻ᵐ >= m + n`.
pub fn power_lemma_i(f: &Instance, x: &Value, m: u64, n: u64) -> Result<LawOutcome> {
    if !sym_at_least_two(f, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let lhs = add(f, &mul(f, &nat(f, m), &pow(f, x, n as i64)?)?, &mul(f, &nat(f, n), &pow(f, x, -(m as i64))?)?)?;
    Ok(LawOutcome::from_bool(le(f, &nat(f, m + n), &lhs)?))
}

/// `2ⁿ⁻¹(xⁿ + x⁻ⁿ) >= (x + x⁻¹)ⁿ`.
pub fn power_lemma_ii(f: &Instance, x: &Value, n: u64) -> Result<LawOutcome> {
    if !sym_at_least_two(f, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let n = n as i64;
    let scale = pow(f, &nat(f, 2), n - 1)?;
    let lhs = mul(f, &scale, &add(f, &pow(f, x, n)?, &pow(f, x, -n)?)?)?;
    let rhs = pow(f, &sym(f, x)?, n)?;
    Ok(LawOutcome::from_bool(le(f, &rhs, &lhs)?))
}

/// `xᵐ + xⁿ <= xᵐ⁺ⁿ + 1`.
pub fn power_lemma_iii(f: &Instance, x: &Value, m: u64, n: u64) -> Result<LawOutcome> {
    if !sym_at_least_two(f, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let lhs = add(f, &pow(f, x, m as i64)?, &pow(f, x, n as i64)?)?;
    let rhs = add(f, &pow(f, x, (m + n) as i64)?, &f.one())?;
    Ok(LawOutcome::from_bool(le(f, &lhs, &rhs)?))
}

/// `C(n+2, 2)·xⁿ <= C(n+1, 2)·xⁿ⁺¹ + Σ_{j<=n} xʲ`.
pub fn power_skew3(f: &Instance, x: &Value, n: u64) -> Result<LawOutcome> {
    if !sym_at_least_two(f, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let lhs = mul(f, &nat(f, binom2(n + 2)), &pow(f, x, n as i64)?)?;
    let mut rhs = mul(f, &nat(f, binom2(n + 1)), &pow(f, x, n as i64 + 1)?)?;
    for j in 0..=n {
        rhs = add(f, &rhs, &pow(f, x, j as i64)?)?;
    }
    Ok(LawOutcome::from_bool(le(f, &lhs, &rhs)?))
}

/// `x + x⁻¹ >= 2` gives `xⁿ + x⁻ⁿ >= 2`, and strictly so when the
/// hypothesis is strict and `n >= 1`.
pub fn norder(f: &Instance, x: &Value, n: u64) -> Result<LawOutcome> {
    if !sym_at_least_two(f, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let two = nat(f, 2);
    let n = n as i64;
    let s_n = add(f, &pow(f, x, n)?, &pow(f, x, -n)?)?;
    let c = f.compare(&two, &s_n)?;
    if !c.is_le() {
        return Ok(LawOutcome::Violated);
    }
    let strict_hyp = f.compare(&two, &sym(f, x)?)?.is_lt();
    Ok(LawOutcome::from_bool(!(strict_hyp && n >= 1) || c.is_lt()))
}

/// If `x >= 1` and `xⁿ⁺¹ + 1 <= xⁿ + 1`, then `(x + 1)ᵐ <= 2ᵐ·xⁿ`.
pub fn other_power_lemma(f: &Instance, x: &Value, n: u64, m: u64) -> Result<LawOutcome> {
    let one = f.one();
    if f.is_zero(x) || !le(f, &one, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let n = n as i64;
    let hyp_l = add(f, &pow(f, x, n + 1)?, &one)?;
    let hyp_r = add(f, &pow(f, x, n)?, &one)?;
    if !le(f, &hyp_l, &hyp_r)? {
        return Ok(LawOutcome::Vacuous);
    }
    let lhs = pow(f, &add(f, x, &one)?, m as i64)?;
    let rhs = mul(f, &pow(f, &nat(f, 2), m as i64)?, &pow(f, x, n)?)?;
    Ok(LawOutcome::from_bool(le(f, &lhs, &rhs)?))
}

/// If `x >= 1` and `x² + 2 >= 3x`, then `xⁿ⁺¹ + 1 >= 2xⁿ`.
pub fn nonarctic_bound(f: &Instance, x: &Value, n: u64) -> Result<LawOutcome> {
    let one = f.one();
    if f.is_zero(x) || !le(f, &one, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let hyp_l = add(f, &pow(f, x, 2)?, &nat(f, 2))?;
    let hyp_r = mul(f, &nat(f, 3), x)?;
    if !le(f, &hyp_r, &hyp_l)? {
        return Ok(LawOutcome::Vacuous);
    }
    let n = n as i64;
    let lhs = add(f, &pow(f, x, n + 1)?, &one)?;
    let rhs = mul(f, &nat(f, 2), &pow(f, x, n)?)?;
    Ok(LawOutcome::from_bool(le(f, &rhs, &lhs)?))
}

/// If `x + x⁻¹ = 2` exactly, then `xⁿ + x⁻ⁿ = 2`, `m·xⁿ + n·x⁻ᵐ = m + n`
/// and `xᵐ + xⁿ = xᵐ⁺ⁿ + 1`, all as equalities of values.
pub fn power_square(f: &Instance, x: &Value, m: u64, n: u64) -> Result<LawOutcome> {
    if f.is_zero(x) || sym(f, x)? != nat(f, 2) {
        return Ok(LawOutcome::Vacuous);
    }
    let (mi, ni) = (m as i64, n as i64);
    let first = add(f, &pow(f, x, ni)?, &pow(f, x, -ni)?)? == nat(f, 2);
    let second =
        add(f, &mul(f, &nat(f, m), &pow(f, x, ni)?)?, &mul(f, &nat(f, n), &pow(f, x, -mi)?)?)? == nat(f, m + n);
    let third = add(f, &pow(f, x, mi)?, &pow(f, x, ni)?)? == add(f, &pow(f, x, mi + ni)?, &f.one())?;
    Ok(LawOutcome::from_bool(first && second && third))
}

/// `(a + xˡ⁺ᵐ⁺ⁿ)(a + xˡ) >= (a + xˡ⁺ᵐ)(a + xˡ⁺ⁿ)`, with `≈` when
/// `x + x⁻¹ ≈ 2`.
pub fn super_general(f: &Instance, a: &Value, x: &Value, l: i64, m: u64, n: u64) -> Result<LawOutcome> {
    if !sym_at_least_two(f, x)? {
        return Ok(LawOutcome::Vacuous);
    }
    let (m, n) = (m as i64, n as i64);
    let term = |e: i64| -> Result<Value> { add(f, a, &pow(f, x, e)?) };
    let big = mul(f, &term(l + m + n)?, &term(l)?)?;
    let small = mul(f, &term(l + m)?, &term(l + n)?)?;
    let c = f.compare(&small, &big)?;
    if !c.is_le() {
        return Ok(LawOutcome::Violated);
    }
    let arctic_like = equiv(f, &sym(f, x)?, &nat(f, 2))?;
    Ok(LawOutcome::from_bool(!arctic_like || c == Comparison::Equivalent))
}

/// `(a + xⁿ) + xⁿ(a + x⁻ⁿ) = (a + 1)(1 + xⁿ)` as an equality of values.
pub fn fformula(f: &Instance, a: &Value, x: &Value, n: i64) -> Result<LawOutcome> {
    if f.is_zero(x) {
        return Ok(LawOutcome::Vacuous);
    }
    let one = f.one();
    let xn = pow(f, x, n)?;
    let lhs = add(f, &add(f, a, &xn)?, &mul(f, &xn, &add(f, a, &pow(f, x, -n)?)?)?)?;
    let rhs = mul(f, &add(f, a, &one)?, &add(f, &one, &xn)?)?;
    Ok(LawOutcome::from_bool(lhs == rhs))
}

/// With `x + x⁻¹ >= 2` and `y >= 1`: `x + 1 <= y + 1` gives `xⁿ <= yⁿ⁺¹`.
pub fn cancel1(f: &Instance, x: &Value, y: &Value, n: u64) -> Result<LawOutcome> {
    let one = f.one();
    if !sym_at_least_two(f, x)? || f.is_zero(y) || !le(f, &one, y)? {
        return Ok(LawOutcome::Vacuous);
    }
    if !le(f, &add(f, x, &one)?, &add(f, y, &one)?)? {
        return Ok(LawOutcome::Vacuous);
    }
    let n = n as i64;
    Ok(LawOutcome::from_bool(le(f, &pow(f, x, n)?, &pow(f, y, n + 1)?)?))
}

/// With `x + x⁻¹ >= 2`, `y >= 1`, `a + x <= a + y` and `a⁻¹ + x <= a⁻¹ + y`:
/// `xⁿ <= yⁿ⁺¹`.
pub fn cancel2(f: &Instance, a: &Value, x: &Value, y: &Value, n: u64) -> Result<LawOutcome> {
    let one = f.one();
    if f.is_zero(a) || !sym_at_least_two(f, x)? || f.is_zero(y) || !le(f, &one, y)? {
        return Ok(LawOutcome::Vacuous);
    }
    let ai = f.inv(a)?;
    if !le(f, &add(f, a, x)?, &add(f, a, y)?)? || !le(f, &add(f, &ai, x)?, &add(f, &ai, y)?)? {
        return Ok(LawOutcome::Vacuous);
    }
    let n = n as i64;
    Ok(LawOutcome::from_bool(le(f, &pow(f, x, n)?, &pow(f, y, n + 1)?)?))
}

/// `Σ rᵢxⁱ <= Σ rᵢyⁱ` (sums from `i = 1`, some `rᵢ` nonzero) gives `x <= y`.
pub fn fourier(f: &Instance, r: &[Value], x: &Value, y: &Value) -> Result<LawOutcome> {
    if r.iter().all(|ri| f.is_zero(ri)) {
        return Ok(LawOutcome::Vacuous);
    }
    let mut sx = f.zero();
    let mut sy = f.zero();
    for (i, ri) in r.iter().enumerate() {
        let e = i as i64 + 1;
        sx = add(f, &sx, &mul(f, ri, &pow(f, x, e)?)?)?;
        sy = add(f, &sy, &mul(f, ri, &pow(f, y, e)?)?)?;
    }
    if !le(f, &sx, &sy)? {
        return Ok(LawOutcome::Vacuous);
    }
    Ok(LawOutcome::from_bool(le(f, x, y)?))
}

/// `x <= y` iff `xⁿ <= yⁿ`, for `n >= 1`; checked in both directions.
pub fn geom_fourier(f: &Instance, x: &Value, y: &Value, n: u64) -> Result<LawOutcome> {
    if n == 0 {
        return Ok(LawOutcome::Vacuous);
    }
    let c = f.compare(x, y)?;
    let cn = f.compare(&pow(f, x, n as i64)?, &pow(f, y, n as i64)?)?;
    Ok(LawOutcome::from_bool(c.is_le() == cn.is_le() && c.is_ge() == cn.is_ge()))
}

/// In a max-tropical instance, comparable nonzero `x, y` satisfy
/// `x + y ≈ 2·max(x, y)`.
pub fn tropical_add_full(f: &Instance, x: &Value, y: &Value) -> Result<LawOutcome> {
    if f.is_zero(x) || f.is_zero(y) {
        return Ok(LawOutcome::Vacuous);
    }
    let c = f.compare(x, y)?;
    let top = match c {
        Comparison::LessStrict => y,
        Comparison::GreaterStrict | Comparison::Equivalent => x,
        _ => return Ok(LawOutcome::Vacuous),
    };
    let lhs = add(f, x, y)?;
    let rhs = mul(f, &nat(f, 2), top)?;
    Ok(LawOutcome::from_bool(equiv(f, &lhs, &rhs)?))
}

/// In an arctic instance, `x, y` comparable with 1 satisfy `x + y ≈ xy + 1`.
pub fn arctic_main(f: &Instance, x: &Value, y: &Value) -> Result<LawOutcome> {
    let one = f.one();
    if f.is_zero(x) || f.is_zero(y) {
        return Ok(LawOutcome::Vacuous);
    }
    if f.compare(x, &one)? == Comparison::Incomparable || f.compare(y, &one)? == Comparison::Incomparable {
        return Ok(LawOutcome::Vacuous);
    }
    let lhs = add(f, x, y)?;
    let rhs = add(f, &mul(f, x, y)?, &one)?;
    Ok(LawOutcome::from_bool(equiv(f, &lhs, &rhs)?))
}

/// `a + x <= a + y` gives `a + n·x <= a + n·y`.
pub fn sharpen_add(f: &Instance, a: &Value, x: &Value, y: &Value, n: u64) -> Result<LawOutcome> {
    if !le(f, &add(f, a, x)?, &add(f, a, y)?)? {
        return Ok(LawOutcome::Vacuous);
    }
    let lhs = add(f, a, &f.scale(n, x)?)?;
    let rhs = add(f, a, &f.scale(n, y)?)?;
    Ok(LawOutcome::from_bool(le(f, &lhs, &rhs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::semifield::DualNumber;

    fn q(n: i64, d: i64) -> Value {
        Value::Scalar(rat(n, d))
    }

    #[test]
    fn rational_power_lemmas() {
        let f = Instance::RatPlus;
        let x = q(3, 2);
        assert_eq!(power_lemma_i(&f, &x, 3, 5).unwrap(), LawOutcome::Holds);
        assert_eq!(power_lemma_ii(&f, &x, 4).unwrap(), LawOutcome::Holds);
        assert_eq!(power_lemma_iii(&f, &x, 2, 7).unwrap(), LawOutcome::Holds);
        assert_eq!(power_skew3(&f, &x, 6).unwrap(), LawOutcome::Holds);
        assert_eq!(norder(&f, &x, 3).unwrap(), LawOutcome::Holds);
    }

    #[test]
    fn hypothesis_failure_is_vacuous() {
        let f = Instance::opposite(Instance::RatPlus);
        // In the opposite order x + x⁻¹ >= 2 fails for x != 1.
        assert_eq!(power_lemma_i(&f, &q(3, 1), 2, 2).unwrap(), LawOutcome::Vacuous);
        assert_eq!(fourier(&Instance::RatPlus, &[q(0, 1)], &q(1, 1), &q(2, 1)).unwrap(), LawOutcome::Vacuous);
    }

    #[test]
    fn fformula_is_exact() {
        let f = Instance::TropicalRat;
        let a = Value::tropical(int(-2));
        let x = Value::tropical(rat(3, 2));
        assert_eq!(fformula(&f, &a, &x, 3).unwrap(), LawOutcome::Holds);
        assert_eq!(fformula(&f, &a, &x, -2).unwrap(), LawOutcome::Holds);
    }

    #[test]
    fn arctic_laws_in_dual_numbers() {
        let f = Instance::DualNumbers;
        let x = Value::Dual(DualNumber::new(int(1), rat(2, 3)).unwrap());
        let y = Value::Dual(DualNumber::new(int(1), int(-5)).unwrap());
        assert_eq!(power_square(&f, &x, 3, 4).unwrap(), LawOutcome::Holds);
        assert_eq!(arctic_main(&f, &x, &y).unwrap(), LawOutcome::Holds);
        assert_eq!(super_general(&f, &y, &x, -2, 3, 1).unwrap(), LawOutcome::Holds);
        let z = Value::Dual(DualNumber::new(int(2), int(1)).unwrap());
        assert_eq!(arctic_main(&f, &x, &z).unwrap(), LawOutcome::Vacuous);
    }

    #[test]
    fn tropical_addition() {
        let f = Instance::TropicalRat;
        let r = tropical_add_full(&f, &Value::tropical(int(4)), &Value::tropical(int(-1))).unwrap();
        assert_eq!(r, LawOutcome::Holds);
        // Rationals are not max-tropical: the law must fail there.
        let r = tropical_add_full(&Instance::RatPlus, &q(4, 1), &q(1, 1)).unwrap();
        assert_eq!(r, LawOutcome::Violated);
    }

    #[test]
    fn cancellation_laws() {
        let f = Instance::RatPlus;
        assert_eq!(cancel1(&f, &q(3, 2), &q(2, 1), 5).unwrap(), LawOutcome::Holds);
        assert_eq!(cancel2(&f, &q(1, 3), &q(3, 2), &q(2, 1), 5).unwrap(), LawOutcome::Holds);
        assert_eq!(sharpen_add(&f, &q(1, 1), &q(1, 2), &q(1, 1), 7).unwrap(), LawOutcome::Holds);
        assert_eq!(geom_fourier(&f, &q(1, 2), &q(2, 3), 5).unwrap(), LawOutcome::Holds);
    }

    #[test]
    fn bounds_with_hypotheses() {
        let f = Instance::RatPlus;
        assert_eq!(nonarctic_bound(&f, &q(3, 1), 4).unwrap(), LawOutcome::Holds);
        // x = 3/2 gives x² + 2 = 17/4 < 9/2 = 3x.
        assert_eq!(nonarctic_bound(&f, &q(3, 2), 4).unwrap(), LawOutcome::Vacuous);
        let t = Instance::TropicalRat;
        assert_eq!(other_power_lemma(&t, &Value::tropical(int(0)), 2, 3).unwrap(), LawOutcome::Holds);
    }
}
