use serde::Serialize;

use super::witness::{catalytic_from_power, power_witness_search, CatalyticWitness, PowerWitness, StrassenWitness};
use crate::error::Result;
use crate::poly::{Polynomial, PositiveConstantPolynomial};
use crate::sample::DEFAULT_SEED;
use crate::spectrum::{strict_dominance_check, DominanceVerdict};

/// Search bounds and sampling parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub k_max: u32,
    pub n_max: u32,
    pub seed: u64,
    /// Random points used by multivariate real-spectrum sampling.
    pub samples: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { k_max: 24, n_max: 24, seed: DEFAULT_SEED, samples: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionOutcome {
    WitnessFound {
        power: PowerWitness,
        catalytic: CatalyticWitness,
    },
    /// A spectral point with `φ(x) > φ(y)` rules out every witness.
    ImpossibleForever {
        refutation: DominanceVerdict,
    },
    /// No witness within the budget; the verdict explains what is known.
    BudgetExhausted {
        verdict: DominanceVerdict,
        k_max: u32,
        n_max: u32,
    },
}

/// Decides `x <= y` up to a catalyst: spectral refutation first, then the
/// power-witness search regardless of ties.
pub fn dominance_decide(
    x: &PositiveConstantPolynomial,
    y: &PositiveConstantPolynomial,
    u: &Polynomial,
    budget: &Budget,
) -> Result<DecisionOutcome> {
    let verdict = strict_dominance_check(x, y, budget.seed, budget.samples)?;
    if verdict.is_refuted() {
        return Ok(DecisionOutcome::ImpossibleForever { refutation: verdict });
    }
    match power_witness_search(x, y, u, budget.k_max, budget.n_max)? {
        Some(power) => {
            let catalytic = catalytic_from_power(x, y, u, &power)?;
            Ok(DecisionOutcome::WitnessFound { power, catalytic })
        }
        None => Ok(DecisionOutcome::BudgetExhausted { verdict, k_max: budget.k_max, n_max: budget.n_max }),
    }
}

/// Witness certificate; fields serialize in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: &'static str,
    pub k: u32,
    pub n: u32,
    /// The multiplier: `u^k`, the catalyst `a`, or `p`.
    pub a: Polynomial,
    pub verified: bool,
}

impl Certificate {
    pub fn power(w: &PowerWitness, u: &Polynomial) -> Self {
        Certificate { kind: "power", k: w.k, n: w.n, a: u.pow(w.k), verified: true }
    }

    pub fn catalytic(w: &CatalyticWitness) -> Self {
        Certificate { kind: "catalytic", k: w.k, n: w.n, a: w.a.clone(), verified: true }
    }

    pub fn strassen(w: &StrassenWitness) -> Self {
        Certificate { kind: "strassen", k: w.k, n: w.n, a: w.p.clone(), verified: true }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::power_universal;

    fn pc(s: &str) -> PositiveConstantPolynomial {
        PositiveConstantPolynomial::new(Polynomial::parse_univariate(s).unwrap()).unwrap()
    }

    fn decide(x: &str, y: &str) -> DecisionOutcome {
        dominance_decide(&pc(x), &pc(y), &power_universal(1), &Budget::default()).unwrap()
    }

    #[test]
    fn outcomes() {
        assert!(matches!(decide("2+X", "1+X"), DecisionOutcome::ImpossibleForever { .. }));
        match decide("1+X", "2+X") {
            DecisionOutcome::WitnessFound { power, .. } => assert_eq!((power.k, power.n), (0, 1)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(decide("1+2X", "2+X+X^2"), DecisionOutcome::WitnessFound { .. }));
    }

    #[test]
    fn tie_without_witness() {
        match decide("1+2X+X^3", "2+X^2+X^3") {
            DecisionOutcome::BudgetExhausted { verdict: DominanceVerdict::TieAt { .. }, .. } => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn certificate_field_order() {
        let u = power_universal(1);
        let w = PowerWitness { k: 0, n: 1, verified_range: vec![1, 2, 3] };
        assert_eq!(
            Certificate::power(&w, &u).to_json(),
            r#"{"kind":"power","k":0,"n":1,"a":{"vars":1,"terms":[{"exp":[0],"coeff":"1"}]},"verified":true}"#
        );
    }
}
