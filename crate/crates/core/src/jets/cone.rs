use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_with::{serde_as, DisplayFromStr};

use super::jet::{Jet, Sign, SignSequence};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sample::{Sampler, DEFAULT_SEED};

type Matrix = Vec<Vec<Rational>>;

/// Finite-dimensional real algebras with a fixed vector-space basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Algebra {
    /// `R[X]/(X^n)` on the basis `1, X, ..., X^{n-1}`.
    Jet(usize),
    /// `R^n` with pointwise multiplication on the standard basis.
    Coordinates(usize),
    /// `R[X]/(X^2 + 1)` on the basis `1, X`.
    Complex,
}

impl Algebra {
    pub fn dim(&self) -> usize {
        match *self {
            Algebra::Jet(n) | Algebra::Coordinates(n) => n,
            Algebra::Complex => 2,
        }
    }

    pub fn one(&self) -> Vec<Rational> {
        let n = self.dim();
        match self {
            Algebra::Coordinates(_) => vec![Rational::one(); n],
            _ => Jet::one(n).coeffs().to_vec(),
        }
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        Jet::monomial(self.dim(), i, Rational::one()).coeffs().to_vec()
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        if a.len() != n || b.len() != n {
            return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
        }
        Ok(match self {
            Algebra::Jet(_) => Jet::new(a.to_vec()).mul(&Jet::new(b.to_vec()))?.coeffs().to_vec(),
            Algebra::Coordinates(_) => a.iter().zip(b).map(|(x, y)| x * y).collect(),
            Algebra::Complex => vec![&a[0] * &b[0] - &a[1] * &b[1], &a[0] * &b[1] + &a[1] * &b[0]],
        })
    }
}

/// Cone `{0} ∪ {v : the first nonzero ℓ_j(v) is positive}` for linear
/// functionals `ℓ_1, ..., ℓ_n` given as rows.
#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LexCone {
    #[serde_as(as = "Vec<Vec<DisplayFromStr>>")]
    rows: Matrix,
}

impl LexCone {
    pub fn new(rows: Matrix) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
        Ok(LexCone { rows })
    }

    /// `ℓ_j = ε_j e_j`, the cone of [`super::jet_is_positive`].
    pub fn jet(eps: &SignSequence) -> Self {
        let id: Vec<usize> = (0..eps.len()).collect();
        Self::lex(eps, &id).expect("identity permutation")
    }

    /// `ℓ_j = ε_j e_{σ(j)}`.
    pub fn lex(eps: &SignSequence, sigma: &[usize]) -> Result<Self> {
        let n = eps.len();
        let mut seen = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
            return Err(Error::InvalidInstance(format!("{sigma:?} is not a permutation of 0..{n}")));
        }
        let rows = eps
            .0
            .iter()
            .zip(sigma)
            .map(|(e, &s)| (0..n).map(|k| if k == s { e.as_rational() } else { Rational::zero() }).collect())
            .collect();
        Ok(LexCone { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn coords(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn is_positive(&self, v: &[Rational]) -> bool {
        lex_positive(&self.coords(v))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero) || self.is_positive(v)
    }

    fn inverse(&self) -> Option<Matrix> {
        invert(&self.rows)
    }
}

fn lex_positive(c: &[Rational]) -> bool {
    c.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_positive)
}

fn leading(c: &[Rational]) -> Option<usize> {
    c.iter().position(|x| !x.is_zero())
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect()).collect()
}

/// Gauss-Jordan inverse; `None` when singular.
fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        a[c].iter_mut().for_each(|x| *x /= &piv);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                a[r].iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= &f * y);
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            let f = &a[i][c] / &a[r][c];
            let pivot_row = a[r].clone();
            a[i].iter_mut().zip(&pivot_row).for_each(|(x, y)| *x -= &f * y);
        }
        r += 1;
    }
    r
}

/// Whether multiplication by `a` maps the closed cone into itself.
///
/// In cone coordinates multiplication by `a` is `T = L·M_a·L^{-1}`, and `T`
/// preserves the standard lexicographic cone iff its nonzero columns are
/// lexicographically positive with strictly increasing leading indices and
/// every column after a zero column is zero.
pub fn in_positivator(alg: &Algebra, cone: &LexCone, a: &[Rational]) -> Result<bool> {
    let n = alg.dim();
    if cone.dim() != n || a.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: if cone.dim() != n { cone.dim() } else { a.len() } });
    }
    let linv =
        cone.inverse().ok_or_else(|| Error::InvalidInstance("cone functionals are linearly dependent".into()))?;
    let cols: Matrix = (0..n).map(|i| alg.mul(a, &alg.basis(i))).collect::<Result<_>>()?;
    let m: Matrix = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let t = mat_mul(&mat_mul(&cone.rows, &m), &linv);
    let mut prev: Option<usize> = None;
    let mut seen_zero = false;
    for j in 0..n {
        let col: Vec<Rational> = t.iter().map(|r| r[j].clone()).collect();
        match leading(&col) {
            None => seen_zero = true,
            Some(l) => {
                if seen_zero || !col[l].is_positive() || prev.is_some_and(|p| l <= p) {
                    return Ok(false);
                }
                prev = Some(l);
            }
        }
    }
    Ok(true)
}

/// Positivator membership in `R[X]/(X^n)` with the cone of `eps`.
///
/// A positive constant term always suffices and a negative one always
/// fails (it flips the sign of `ε_0·1`); the remaining case `a_0 = 0` is
/// decided by [`in_positivator`].
pub fn jet_in_positivator(a: &Jet, eps: &SignSequence) -> Result<bool> {
    if a.len() != eps.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: eps.len() });
    }
    match a.coeffs().first() {
        None => Ok(true),
        Some(a0) if a0.is_positive() => Ok(true),
        Some(a0) if a0.is_negative() => Ok(false),
        Some(_) => in_positivator(&Algebra::Jet(a.len()), &LexCone::jet(eps), a.coeffs()),
    }
}

#[serde_as]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanningMember {
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub element: Vec<Rational>,
    pub in_positivator: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiorderReport {
    /// Sampled pairs of cone elements have their sum in the cone.
    pub additive_closure: bool,
    /// `A_+ ∩ (-A_+) = {0}`, equivalently the functionals are independent.
    pub antisymmetric: bool,
    /// The family `{1} ∪ {1 + b_i}` lies in the positivator and spans.
    pub spanning: bool,
    pub family: Vec<SpanningMember>,
}

impl QuasiorderReport {
    pub fn passes(&self) -> bool {
        self.additive_closure && self.antisymmetric && self.spanning
    }
}

const CLOSURE_SAMPLES: usize = 200;

/// Checks the axioms of a totally quasiordered algebra for `cone` on `alg`.
///
/// Spanning `A = Pos - Pos` is certified only through the fixed family
/// `{1} ∪ {1 + b_i}` over the basis vectors `b_i ≠ 1`; if some member is not
/// in the positivator the axiom is reported as failed.
pub fn check_quasiorder_axioms(alg: &Algebra, cone: &LexCone) -> Result<QuasiorderReport> {
    let n = alg.dim();
    if cone.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: cone.dim() });
    }
    let antisymmetric = rank(cone.rows()) == n;

    let mut sampler = Sampler::new(DEFAULT_SEED);
    let draw = |s: &mut Sampler| -> Vec<Rational> {
        let v: Vec<Rational> = (0..n).map(|_| s.signed_or_zero(0.4)).collect();
        if cone.contains(&v) {
            v
        } else {
            v.iter().map(|x| -x).collect()
        }
    };
    let additive_closure = (0..CLOSURE_SAMPLES).all(|_| {
        let (a, b) = (draw(&mut sampler), draw(&mut sampler));
        let s: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        !cone.contains(&a) || !cone.contains(&b) || cone.contains(&s)
    });

    let one = alg.one();
    let mut elements = vec![one.clone()];
    for i in 0..n {
        let b = alg.basis(i);
        if b != one {
            elements.push(one.iter().zip(&b).map(|(x, y)| x + y).collect());
        }
    }
    let family: Vec<SpanningMember> = if antisymmetric {
        elements
            .into_iter()
            .map(|e| Ok(SpanningMember { in_positivator: in_positivator(alg, cone, &e)?, element: e }))
            .collect::<Result<_>>()?
    } else {
        elements.into_iter().map(|element| SpanningMember { element, in_positivator: false }).collect()
    };
    let diffs: Vec<Vec<Rational>> = std::iter::once(one.clone())
        .chain(family[1..].iter().map(|m| m.element.iter().zip(&one).map(|(x, y)| x - y).collect()))
        .collect();
    let spanning = family.iter().all(|m| m.in_positivator) && rank(&diffs) == n;

    Ok(QuasiorderReport { additive_closure, antisymmetric, spanning, family })
}

/// The totally quasiordered algebras of dimension at most two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Dim2Class {
    /// `R` with cone `R_+` or `-R_+`.
    Reals {
        sign: Sign,
    },
    /// `R^2` with the lexicographic order reading coordinate `perm[0]` first.
    Split {
        signs: SignSequence,
        perm: [usize; 2],
    },
    /// `R[X]/(X^2)` with the jet order of `signs`.
    Dual {
        signs: SignSequence,
    },
    NotATestAlgebra,
}

fn sign_of(r: &Rational) -> Sign {
    if r.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Only the coordinate `k` of `row` is nonzero.
fn axis(row: &[Rational]) -> Option<usize> {
    let nz: Vec<usize> = (0..row.len()).filter(|&i| !row[i].is_zero()).collect();
    (nz.len() == 1).then(|| nz[0])
}

/// Identifies `(alg, cone)` among the test algebras of dimension `<= 2`.
pub fn classify_dim2(alg: &Algebra, cone: &LexCone) -> Result<Dim2Class> {
    if alg.dim() == 0 || alg.dim() > 2 || cone.dim() != alg.dim() {
        return Ok(Dim2Class::NotATestAlgebra);
    }
    if !check_quasiorder_axioms(alg, cone)?.passes() {
        return Ok(Dim2Class::NotATestAlgebra);
    }
    let rows = cone.rows();
    Ok(match (alg, alg.dim()) {
        (_, 1) => Dim2Class::Reals { sign: sign_of(&rows[0][0]) },
        (Algebra::Coordinates(_), _) => match axis(&rows[0]) {
            Some(k) => Dim2Class::Split {
                signs: SignSequence(vec![sign_of(&rows[0][k]), sign_of(&rows[1][1 - k])]),
                perm: [k, 1 - k],
            },
            None => Dim2Class::NotATestAlgebra,
        },
        (Algebra::Jet(_), _) if axis(&rows[0]) == Some(0) => {
            Dim2Class::Dual { signs: SignSequence(vec![sign_of(&rows[0][0]), sign_of(&rows[1][1])]) }
        }
        _ => Dim2Class::NotATestAlgebra,
    })
}
