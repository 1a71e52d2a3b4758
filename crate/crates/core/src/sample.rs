//! Seeded samplers for property checks and heuristic sweeps.
//!
//! Rationals are drawn with numerator and denominator in `[1, 100]`. All
//! samplers are deterministic functions of their seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{rat, Rational};
use crate::semifield::{DualNumber, Instance, LeadingTerm, Value};

/// Environment variable that overrides the default seed.
pub const SEED_ENV: &str = "SEMIRING_PSS_SEED";

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

/// Seed from [`SEED_ENV`] if set and parseable, otherwise [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.random_range(0..n)
    }

    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    /// Strictly positive rational.
    pub fn positive(&mut self) -> Rational {
        let n = self.rng.random_range(1..=100);
        let d = self.rng.random_range(1..=100);
        rat(n, d)
    }

    /// Nonzero rational of either sign.
    pub fn signed(&mut self) -> Rational {
        let q = self.positive();
        if self.rng.random_bool(0.5) {
            -q
        } else {
            q
        }
    }

    /// Rational of either sign, zero with probability `p_zero`.
    pub fn signed_or_zero(&mut self, p_zero: f64) -> Rational {
        if self.rng.random_bool(p_zero) {
            Rational::from_integer(0.into())
        } else {
            self.signed()
        }
    }

    /// Nonzero element of `f`.
    pub fn nonzero(&mut self, f: &Instance) -> Value {
        match f {
            Instance::Naturals => Value::Scalar(Rational::from_integer(self.rng.random_range(1..=100).into())),
            Instance::RatPlus => Value::Scalar(self.positive()),
            Instance::Boolean => Value::Bool(true),
            Instance::TropicalRat => Value::tropical(self.signed_or_zero(0.1)),
            Instance::TropicalInt => Value::tropical(Rational::from_integer(self.rng.random_range(-100..=100).into())),
            Instance::Opposite(inner) => self.nonzero(inner),
            Instance::Product(a, b) | Instance::Lexicographic(a, b) => {
                let x = self.nonzero(a);
                let y = self.nonzero(b);
                Value::pair(x, y)
            }
            Instance::LeadingTerm => {
                let e = self.rng.random_range(-5..=5);
                Value::Leading(LeadingTerm::new(self.positive(), e).expect("positive coefficient"))
            }
            Instance::DualNumbers => {
                let r = self.positive();
                let s = self.signed_or_zero(0.1);
                Value::Dual(DualNumber::new(r, s).expect("positive real part"))
            }
        }
    }

    /// Element of `f`, zero with probability `p_zero`.
    pub fn element(&mut self, f: &Instance, p_zero: f64) -> Value {
        if self.rng.random_bool(p_zero) {
            f.zero()
        } else {
            self.nonzero(f)
        }
    }

    /// Dual number with real part 1.
    pub fn dual_unit(&mut self) -> Value {
        let s = self.signed_or_zero(0.1);
        Value::Dual(DualNumber::new(Rational::from_integer(1.into()), s).expect("positive real part"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.positive(), b.positive());
        }
    }

    #[test]
    fn samples_are_valid() {
        let mut s = Sampler::new(1);
        let instances = [
            Instance::Naturals,
            Instance::RatPlus,
            Instance::TropicalInt,
            Instance::product(Instance::RatPlus, Instance::TropicalRat).unwrap(),
            Instance::LeadingTerm,
            Instance::DualNumbers,
        ];
        for f in &instances {
            for _ in 0..50 {
                let v = s.element(f, 0.2);
                f.validate(&v).unwrap();
            }
        }
    }
}
