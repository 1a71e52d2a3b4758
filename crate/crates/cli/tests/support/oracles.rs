//! Reference computations written independently of the library algorithms.
//! Only the scalar type and input containers are shared.

use num_traits::{One, Signed, Zero};
use semiring_pss::{MultiIndex, Polynomial, Rational};

/// Dense coefficient vector of a univariate polynomial, lowest degree first.
pub fn dense(p: &Polynomial) -> Vec<Rational> {
    assert_eq!(p.vars(), 1);
    let deg = p.degree().unwrap_or(0) as usize;
    let mut v = vec![Rational::zero(); deg + 1];
    for (e, c) in p.terms() {
        v[e.exponents()[0] as usize] = c.clone();
    }
    v
}

pub fn dense_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn dense_pow(a: &[Rational], n: u32) -> Vec<Rational> {
    (0..n).fold(vec![Rational::one()], |acc, _| dense_mul(&acc, a))
}

pub fn dense_le(a: &[Rational], b: &[Rational]) -> bool {
    let zero = Rational::zero();
    (0..a.len().max(b.len())).all(|i| a.get(i).unwrap_or(&zero) <= b.get(i).unwrap_or(&zero))
}

/// `u^k x^n <= u^k y^n` with `u = 2 + X`, by dense convolution.
pub fn power_holds(x: &[Rational], y: &[Rational], k: u32, n: u32) -> bool {
    let uk = dense_pow(&[Rational::from_integer(2.into()), Rational::one()], k);
    dense_le(&dense_mul(&uk, &dense_pow(x, n)), &dense_mul(&uk, &dense_pow(y, n)))
}

/// All `(k, n)` in `[0, k_max] × [1, n_max]` with `u^k x^n <= u^k y^n`.
pub fn all_power_witnesses(x: &[Rational], y: &[Rational], k_max: u32, n_max: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 0..=k_max {
            if power_holds(x, y, k, n) {
                out.push((k, n));
            }
        }
    }
    out
}

/// Both sides of the identity evaluated at a scalar point.
pub fn identity_sides(a: &[Rational], b: &[Rational], x: &Rational, y: &Rational) -> (Rational, Rational) {
    let n = a.len() - 1;
    let pw = |base: &Rational, e: usize| num_traits::pow(base.clone(), e);
    let sum = |c: &[Rational], v: &Rational| -> Rational { (0..=n).map(|j| &c[j] * pw(v, j)).sum() };
    let geo = |i: usize| -> Rational { (1..=i).map(|k| pw(x, i - k) * pw(y, k - 1)).sum() };
    let lhs = (0..=n).map(|i| (&a[i] * sum(b, y) + &b[i] * sum(a, x)) * geo(i)).sum();
    let rhs = (0..=n).map(|i| (&a[i] * sum(b, x) + &b[i] * sum(a, y)) * geo(i)).sum();
    (lhs, rhs)
}

fn dot(a: &[Rational], e: &MultiIndex) -> Rational {
    a.iter().zip(e.exponents()).map(|(x, &k)| x * Rational::from_integer(k.into())).sum()
}

fn support_max(points: &[MultiIndex], alpha: &[Rational]) -> Rational {
    points.iter().map(|p| dot(alpha, p)).max().expect("nonempty support")
}

/// Unique solution of a square system, by Gaussian elimination.
fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rows.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !rows[r][c].is_zero())?;
        rows.swap(c, p);
        rhs.swap(c, p);
        for r in 0..n {
            if r != c && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &rows[c][c];
                let pivot = rows[c].clone();
                rows[r].iter_mut().zip(&pivot).for_each(|(x, y)| *x -= &f * y);
                let t = &f * &rhs[c];
                rhs[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &rows[i][i]).collect())
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut c in choose(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Candidate directions on the simplex `Σα = 1, α >= 0`.
///
/// The gap `max_q⟨α,·⟩ - max_p⟨α,·⟩` is linear on each cell of the
/// arrangement cut out by the hyperplanes `⟨α, β - β'⟩ = 0` for pairs of
/// support points and the facets `α_i = 0`, so its minimum over the
/// simplex is attained at a vertex of that arrangement. The vertices are
/// enumerated by solving every choice of `d - 1` hyperplanes together with
/// `Σα = 1`; a dense grid is added on top.
pub fn candidate_directions(p: &[MultiIndex], q: &[MultiIndex], d: usize, grid: u32) -> Vec<Vec<Rational>> {
    let mut planes: Vec<Vec<Rational>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for pts in [p, q] {
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                planes.push(
                    a.exponents()
                        .iter()
                        .zip(b.exponents())
                        .map(|(&x, &y)| Rational::from_integer((i64::from(x) - i64::from(y)).into()))
                        .collect(),
                );
            }
        }
    }
    let mut out = Vec::new();
    for pick in choose(planes.len(), d - 1) {
        let mut rows: Vec<Vec<Rational>> = pick.iter().map(|&i| planes[i].clone()).collect();
        let mut rhs = vec![Rational::zero(); d - 1];
        rows.push(vec![Rational::one(); d]);
        rhs.push(Rational::one());
        if let Some(a) = solve(rows, rhs) {
            if a.iter().all(|x| !x.is_negative()) {
                out.push(a);
            }
        }
    }
    let mut stack = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        let used: u32 = prefix.iter().sum();
        if prefix.len() == d - 1 {
            let mut full: Vec<u32> = prefix.clone();
            full.push(grid - used);
            out.push(full.iter().map(|&k| Rational::new(k.into(), grid.into())).collect());
            continue;
        }
        for k in 0..=grid - used {
            let mut next = prefix.clone();
            next.push(k);
            stack.push(next);
        }
    }
    out
}

/// Brute-force `tropical(p, α) <= tropical(q, α)` over the candidate set.
pub fn newton_oracle(p: &[MultiIndex], q: &[MultiIndex], d: usize) -> bool {
    candidate_directions(p, q, d, 12).iter().all(|a| support_max(p, a) <= support_max(q, a))
}
