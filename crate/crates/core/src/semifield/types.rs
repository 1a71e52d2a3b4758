use std::fmt;

use serde::{Deserialize, Serialize};

use super::instance::Instance;
use super::value::Value;
use crate::error::{Error, Result};
use crate::order::Comparison;

/// Where `x + x⁻¹` sits relative to `2x⁻¹ <= 2 <= 2x` for an element `x > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FiveType {
    /// `x + x⁻¹ ≈ 2x`.
    MaxTropical,
    /// `2 < x + x⁻¹ < 2x`.
    MaxTemperate,
    /// `x + x⁻¹ ≈ 2`.
    Arctic,
    /// `2x⁻¹ < x + x⁻¹ < 2`.
    MinTemperate,
    /// `x + x⁻¹ ≈ 2x⁻¹`.
    MinTropical,
}

impl fmt::Display for FiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FiveType::MaxTropical => "max-tropical",
            FiveType::MaxTemperate => "max-temperate",
            FiveType::Arctic => "arctic",
            FiveType::MinTemperate => "min-temperate",
            FiveType::MinTropical => "min-tropical",
        };
        f.write_str(s)
    }
}

impl Instance {
    /// Classifies `x > 1` by comparing `x + x⁻¹` with `2x⁻¹`, `2` and `2x`.
    ///
    /// Fails with [`Error::Untyped`] when none of the five patterns applies,
    /// which can only happen in a non-total instance.
    pub fn type_of_element(&self, x: &Value) -> Result<FiveType> {
        if !self.compare(&self.one(), x)?.is_lt() {
            return Err(Error::NotStrictlyAboveOne);
        }
        let xi = self.inv(x)?;
        let s = self.add(x, &xi)?;
        let two = self.from_natural(2);
        let two_x = self.mul(&two, x)?;
        let two_xi = self.mul(&two, &xi)?;

        if self.compare(&s, &two_x)? == Comparison::Equivalent {
            return Ok(FiveType::MaxTropical);
        }
        if self.compare(&s, &two_xi)? == Comparison::Equivalent {
            return Ok(FiveType::MinTropical);
        }
        let vs_two = self.compare(&s, &two)?;
        if vs_two == Comparison::Equivalent {
            return Ok(FiveType::Arctic);
        }
        if vs_two.is_gt() && self.compare(&s, &two_x)?.is_lt() {
            return Ok(FiveType::MaxTemperate);
        }
        if vs_two.is_lt() && self.compare(&two_xi, &s)?.is_lt() {
            return Ok(FiveType::MinTemperate);
        }
        Err(Error::Untyped)
    }
}
