//! Exact values of the Gamma function at positive integer and half-integer
//! arguments, kept as `rational × (√π)^k`.
//!
//! `Γ(m) = (m−1)!` and `Γ(m + 1/2) = ((2m)!/(4^m m!))·√π`, so products and
//! quotients of such values stay in this form; a value converts back to a
//! rational only when the √π exponents have cancelled.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::util::factorial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaHalf {
    coeff: BigRational,
    sqrt_pi_exp: i64,
}

impl GammaHalf {
    pub fn one() -> Self {
        Self {
            coeff: BigRational::one(),
            sqrt_pi_exp: 0,
        }
    }

    pub fn from_rational(coeff: BigRational) -> Self {
        Self {
            coeff,
            sqrt_pi_exp: 0,
        }
    }

    pub fn from_integer(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }

    /// Γ at a positive integer or half-integer argument.
    pub fn gamma(arg: &BigRational) -> Result<Self> {
        if !arg.is_positive() {
            return Err(Error::OutOfDomain(format!(
                "Gamma pole or sign change at argument {arg}"
            )));
        }
        if arg.is_integer() {
            let m = arg
                .to_integer()
                .to_usize()
                .ok_or_else(|| Error::OutOfDomain("Gamma argument too large".into()))?;
            return Ok(Self::from_integer(factorial(m - 1)));
        }
        let doubled = arg * BigRational::from_integer(BigInt::from(2));
        if !doubled.is_integer() {
            return Err(Error::OutOfDomain(format!(
                "Gamma argument {arg} is neither an integer nor a half-integer"
            )));
        }
        // arg = m + 1/2 with m ≥ 0
        let m = ((doubled - BigRational::one()) / BigRational::from_integer(BigInt::from(2)))
            .to_integer()
            .to_usize()
            .ok_or_else(|| Error::OutOfDomain("Gamma argument too large".into()))?;
        let coeff = BigRational::new(factorial(2 * m), BigInt::from(4).pow(m as u32) * factorial(m));
        Ok(Self {
            coeff,
            sqrt_pi_exp: 1,
        })
    }

    pub fn sqrt_pi_exponent(&self) -> i64 {
        self.sqrt_pi_exp
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coeff
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            coeff: &self.coeff * &other.coeff,
            sqrt_pi_exp: self.sqrt_pi_exp + other.sqrt_pi_exp,
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.coeff.is_zero() {
            return Err(Error::OutOfDomain("division by zero GammaHalf".into()));
        }
        Ok(Self {
            coeff: &self.coeff / &other.coeff,
            sqrt_pi_exp: self.sqrt_pi_exp - other.sqrt_pi_exp,
        })
    }

    /// The exact rational value; errs while a √π power remains.
    pub fn to_rational(&self) -> Result<BigRational> {
        if self.sqrt_pi_exp != 0 {
            return Err(Error::Internal(format!(
                "residual sqrt(pi) exponent {}",
                self.sqrt_pi_exp
            )));
        }
        Ok(self.coeff.clone())
    }
}
