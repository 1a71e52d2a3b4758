//! Exact rational linear programming.
//!
//! A dense two-phase tableau simplex with Bland's pivoting rule, which
//! guarantees termination. All variables are nonnegative. Problem sizes in
//! this crate are small (tens of rows and columns), so no sparsity or
//! numerical tricks are needed.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// `optimize c·x` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    n_vars: usize,
    sense: Sense,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    /// A feasibility problem (zero objective) in `n_vars` variables.
    pub fn new(n_vars: usize) -> Self {
        LinearProgram {
            n_vars,
            sense: Sense::Minimize,
            objective: vec![Rational::zero(); n_vars],
            constraints: Vec::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn set_objective(&mut self, sense: Sense, objective: Vec<Rational>) -> Result<()> {
        if objective.len() != self.n_vars {
            return Err(Error::DimensionMismatch { expected: self.n_vars, got: objective.len() });
        }
        self.sense = sense;
        self.objective = objective;
        Ok(())
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.n_vars {
            return Err(Error::DimensionMismatch { expected: self.n_vars, got: coeffs.len() });
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(())
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    n_cols: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();
        // Normalise to nonnegative right-hand sides.
        let normalised: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let n_slack = normalised.iter().filter(|c| c.1 != Relation::Eq).count();
        let n_art = normalised.iter().filter(|c| c.1 != Relation::Le).count();
        let first_slack = lp.n_vars;
        let first_artificial = first_slack + n_slack;
        let n_cols = first_artificial + n_art;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut s, mut a) = (first_slack, first_artificial);
        for (coeffs, rel, b) in normalised {
            let mut row = vec![Rational::zero(); n_cols];
            row[..lp.n_vars].clone_from_slice(&coeffs);
            match rel {
                Relation::Le => {
                    row[s] = Rational::from_integer(1.into());
                    basis.push(s);
                    s += 1;
                }
                Relation::Ge => {
                    row[s] = Rational::from_integer((-1).into());
                    row[a] = Rational::from_integer(1.into());
                    basis.push(a);
                    s += 1;
                    a += 1;
                }
                Relation::Eq => {
                    row[a] = Rational::from_integer(1.into());
                    basis.push(a);
                    a += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        Tableau { rows, rhs, basis, n_cols, first_artificial }
    }

    /// Reduced costs and objective value for cost vector `c`.
    fn reduced(&self, c: &[Rational]) -> (Vec<Rational>, Rational) {
        let mut r = c.to_vec();
        let mut value = Rational::zero();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &c[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (rj, aij) in r.iter_mut().zip(row) {
                if !aij.is_zero() {
                    *rj -= cb * aij;
                }
            }
            value += cb * &self.rhs[i];
        }
        (r, value)
    }

    fn pivot(&mut self, row: usize, col: usize, cost: &mut [Rational], value: &mut Rational) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &p;
        }
        self.rhs[row] /= &p;
        let prow = self.rows[row].clone();
        let prhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.rhs[i] -= &factor * &prhs;
        }
        let factor = cost[col].clone();
        if !factor.is_zero() {
            for (v, pv) in cost.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            *value += &factor * &prhs;
        }
        self.basis[row] = col;
    }

    /// Minimises over columns `< limit`. Returns false when unbounded.
    fn run(&mut self, cost: &mut [Rational], value: &mut Rational, limit: usize) -> bool {
        loop {
            let Some(col) = (0..limit).find(|&j| cost[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((row, _)) = best else {
                return false;
            };
            self.pivot(row, col, cost, value);
        }
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        // Phase 1: minimise the sum of artificial variables.
        if self.first_artificial < self.n_cols {
            let mut c1 = vec![Rational::zero(); self.n_cols];
            for c in c1.iter_mut().skip(self.first_artificial) {
                *c = Rational::from_integer(1.into());
            }
            let (mut cost, mut value) = self.reduced(&c1);
            let bounded = self.run(&mut cost, &mut value, self.n_cols);
            debug_assert!(bounded, "phase 1 is bounded below by zero");
            let (_, infeas) = self.reduced(&c1);
            if infeas.is_positive() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }

        // Phase 2.
        let mut c2 = vec![Rational::zero(); self.n_cols];
        for (j, cj) in lp.objective.iter().enumerate() {
            c2[j] = match lp.sense {
                Sense::Minimize => cj.clone(),
                Sense::Maximize => -cj,
            };
        }
        let (mut cost, mut value) = self.reduced(&c2);
        if !self.run(&mut cost, &mut value, self.first_artificial) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); lp.n_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < lp.n_vars {
                point[b] = self.rhs[i].clone();
            }
        }
        let value = point.iter().zip(&lp.objective).fold(Rational::zero(), |acc, (x, c)| acc + x * c);
        LpOutcome::Optimal { value, point }
    }

    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                Some(col) => {
                    let mut dummy_cost = vec![Rational::zero(); self.n_cols];
                    let mut dummy_value = Rational::zero();
                    self.pivot(i, col, &mut dummy_cost, &mut dummy_value);
                    i += 1;
                }
                None => {
                    // Redundant constraint.
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_maximisation() {
        // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18.
        let mut lp = LinearProgram::new(2);
        lp.set_objective(Sense::Maximize, v(&[3, 5])).unwrap();
        lp.add_constraint(v(&[1, 0]), Relation::Le, int(4)).unwrap();
        lp.add_constraint(v(&[0, 2]), Relation::Le, int(12)).unwrap();
        lp.add_constraint(v(&[3, 2]), Relation::Le, int(18)).unwrap();
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, int(36));
                assert_eq!(point, v(&[2, 6]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equality_and_ge() {
        // min x + y s.t. x + 2y = 3, x >= 1/2.
        let mut lp = LinearProgram::new(2);
        lp.set_objective(Sense::Minimize, v(&[1, 1])).unwrap();
        lp.add_constraint(v(&[1, 2]), Relation::Eq, int(3)).unwrap();
        lp.add_constraint(v(&[1, 0]), Relation::Ge, rat(1, 2)).unwrap();
        match lp.solve() {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(7, 4));
                assert_eq!(point, vec![rat(1, 2), rat(5, 4)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(v(&[1]), Relation::Le, int(1)).unwrap();
        lp.add_constraint(v(&[1]), Relation::Ge, int(2)).unwrap();
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(Sense::Maximize, v(&[1, 0])).unwrap();
        lp.add_constraint(v(&[1, -1]), Relation::Le, int(1)).unwrap();
        assert_eq!(lp.solve(), LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_and_redundant_rows() {
        let mut lp = LinearProgram::new(2);
        lp.set_objective(Sense::Minimize, v(&[1, 0])).unwrap();
        lp.add_constraint(v(&[-1, -1]), Relation::Le, int(-2)).unwrap();
        lp.add_constraint(v(&[1, 1]), Relation::Eq, int(2)).unwrap();
        lp.add_constraint(v(&[2, 2]), Relation::Eq, int(4)).unwrap();
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(0)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the textbook rule; Bland terminates.
        let mut lp = LinearProgram::new(4);
        lp.set_objective(Sense::Minimize, vec![rat(-3, 4), int(150), rat(-1, 50), int(6)]).unwrap();
        lp.add_constraint(vec![rat(1, 4), int(-60), rat(-1, 25), int(9)], Relation::Le, int(0)).unwrap();
        lp.add_constraint(vec![rat(1, 2), int(-90), rat(-1, 50), int(3)], Relation::Le, int(0)).unwrap();
        lp.add_constraint(v(&[0, 0, 1, 0]), Relation::Le, int(1)).unwrap();
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(-1, 20)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
