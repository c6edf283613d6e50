//! Exact powers of a square root.
//!
//! Modulus characters evaluate to integer powers of `q^{1/2}`. Rather than
//! work in a quadratic extension we keep the base `Q = q^{1/2}` as an exact
//! rational (the engine requires `q` to be a perfect square of a rational)
//! and track the exponent separately, so intermediate half-integral powers
//! stay exact.

use num::traits::One;
use num::Signed;

use crate::error::{Error, Result};
use crate::rational::{rat_pow, Rat};

/// A value `Q^exp` with `Q = q^{1/2}` a fixed positive rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPowerScalar {
    q_half: Rat,
    exp: i64,
}

impl HalfPowerScalar {
    /// `Q^exp` for a positive rational base `Q`.
    pub fn new(q_half: Rat, exp: i64) -> Result<Self> {
        if !q_half.is_positive() {
            return Err(Error::Config(format!(
                "square-root base must be positive, got {}",
                q_half
            )));
        }
        Ok(HalfPowerScalar { q_half, exp })
    }

    pub fn one(q_half: Rat) -> Result<Self> {
        Self::new(q_half, 0)
    }

    pub fn base(&self) -> &Rat {
        &self.q_half
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Multiply two powers of the same base; exponents add.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.q_half != other.q_half {
            return Err(Error::Config(format!(
                "mismatched square-root bases {} and {}",
                self.q_half, other.q_half
            )));
        }
        Ok(HalfPowerScalar {
            q_half: self.q_half.clone(),
            exp: self.exp + other.exp,
        })
    }

    pub fn shift(&self, delta: i64) -> Self {
        HalfPowerScalar {
            q_half: self.q_half.clone(),
            exp: self.exp + delta,
        }
    }

    /// Collapse to an exact rational.
    pub fn value(&self) -> Rat {
        // base is positive, so negative exponents are fine
        rat_pow(&self.q_half, self.exp).expect("positive base")
    }
}

impl std::fmt::Display for HalfPowerScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q_half.is_one() || self.exp == 0 {
            write!(f, "{}", self.value())
        } else {
            write!(f, "({})^{}", self.q_half, self.exp)
        }
    }
}
