//! A polynomial identity in `N[A_0..A_n, B_0..B_n, X, Y]`:
//!
//! ```text
//! Σ_i (A_i Σ_j B_j Y^j + B_i Σ_j A_j X^j) · Σ_{k=1}^{i} X^{i-k} Y^{k-1}
//!   = Σ_i (A_i Σ_j B_j X^j + B_i Σ_j A_j Y^j) · Σ_{k=1}^{i} X^{i-k} Y^{k-1}
//! ```
//!
//! Both sides are expanded independently and compared as canonical forms.

use serde::Serialize;

use super::polynomial::{MultiIndex, Polynomial};

/// Variable layout: `A_0..A_n`, then `B_0..B_n`, then `X`, `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityVars {
    pub n: usize,
}

impl IdentityVars {
    pub fn count(self) -> usize {
        2 * self.n + 4
    }

    pub fn a(self, i: usize) -> usize {
        i
    }

    pub fn b(self, j: usize) -> usize {
        self.n + 1 + j
    }

    pub fn x(self) -> usize {
        2 * self.n + 2
    }

    pub fn y(self) -> usize {
        2 * self.n + 3
    }

    pub fn names(self) -> Vec<String> {
        let mut names: Vec<String> = (0..=self.n).map(|i| format!("A{i}")).collect();
        names.extend((0..=self.n).map(|j| format!("B{j}")));
        names.push("X".into());
        names.push("Y".into());
        names
    }

    fn var(self, i: usize) -> Polynomial {
        Polynomial::variable(self.count(), i)
    }

    fn pow(self, i: usize, e: usize) -> Polynomial {
        self.var(i).pow(e as u32)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub equal: bool,
    /// Shared canonical form of both sides (the left side if they differ).
    pub normal_form: Polynomial,
    /// Whether the normal form equals `Σ A_i B_j Σ_{l+m=i+j-1} X^l Y^m`.
    pub matches_closed_form: bool,
}

impl IdentityReport {
    pub fn term_count(&self) -> usize {
        self.normal_form.len()
    }
}

fn side(v: IdentityVars, swap: bool) -> Polynomial {
    let vars = v.count();
    let (first, second) = if swap { (v.x(), v.y()) } else { (v.y(), v.x()) };
    let mut b_sum = Polynomial::zero(vars);
    let mut a_sum = Polynomial::zero(vars);
    for j in 0..=v.n {
        b_sum = b_sum.add(&v.var(v.b(j)).mul(&v.pow(first, j)).unwrap()).unwrap();
        a_sum = a_sum.add(&v.var(v.a(j)).mul(&v.pow(second, j)).unwrap()).unwrap();
    }
    let mut total = Polynomial::zero(vars);
    for i in 0..=v.n {
        let left = v.var(v.a(i)).mul(&b_sum).unwrap().add(&v.var(v.b(i)).mul(&a_sum).unwrap()).unwrap();
        let mut geo = Polynomial::zero(vars);
        for k in 1..=i {
            geo = geo.add(&v.pow(v.x(), i - k).mul(&v.pow(v.y(), k - 1)).unwrap()).unwrap();
        }
        total = total.add(&left.mul(&geo).unwrap()).unwrap();
    }
    total
}

/// `Σ_{i,j} A_i B_j Σ_{l+m=i+j-1} X^l Y^m`, built term by term.
pub fn closed_form(n: usize) -> Polynomial {
    let v = IdentityVars { n };
    let one = crate::rational::one();
    let mut terms = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            let Some(total) = (i + j).checked_sub(1) else { continue };
            for l in 0..=total {
                let mut e = vec![0u32; v.count()];
                e[v.a(i)] += 1;
                e[v.b(j)] += 1;
                e[v.x()] = l as u32;
                e[v.y()] = (total - l) as u32;
                terms.push((MultiIndex::new(e), one.clone()));
            }
        }
    }
    Polynomial::from_terms(v.count(), terms).expect("valid terms")
}

pub fn verify_curious_identity(n: usize) -> IdentityReport {
    let v = IdentityVars { n };
    let lhs = side(v, false);
    let rhs = side(v, true);
    let equal = lhs == rhs;
    let matches_closed_form = lhs == closed_form(n);
    IdentityReport { n, equal, normal_form: lhs, matches_closed_form }
}
