//! Witness search for `x <= y` in `Q_+[X_1..X_d]`: power witnesses
//! `u^k x^n <= u^k y^n`, catalysts `a` with `a x <= a y`, Strassen-form
//! witnesses, and a decision procedure that pairs them with spectral
//! refutation.

mod decide;
mod witness;

pub use decide::{dominance_decide, Budget, Certificate, DecisionOutcome};
pub use witness::{
    catalytic_from_power, power_witness_search, strassen_witness, verify_power, CatalyticWitness, PowerWitness,
    StrassenWitness,
};
