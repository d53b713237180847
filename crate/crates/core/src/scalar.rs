//! Scalar abstraction for probabilities and bounds.
//!
//! Counting code paths produce integers; everything downstream of them is
//! generic over [`Scalar`], so the same formula can be evaluated in `f32`,
//! `f64` or exactly as a big rational. Quantities that need logarithms
//! require [`RealScalar`].

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};
use std::fmt::Debug;

/// A number type that probabilities can be expressed in.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Send + Sync {
    fn from_u128(n: u128) -> Self;

    fn from_biguint(n: &BigUint) -> Self;

    /// `num / den`, exact where the type allows.
    fn ratio(num: u128, den: u128) -> Self {
        Self::from_u128(num) / Self::from_u128(den)
    }

    fn to_f64(&self) -> f64;

    /// `self^exp` by repeated squaring (keeps rationals exact).
    fn powu(&self, exp: u32) -> Self {
        num_traits::pow(self.clone(), exp as usize)
    }
}

/// Scalars with a logarithm, used for entropies and the GV exponent.
pub trait RealScalar: Scalar + Float + FromPrimitive {}

impl Scalar for f64 {
    fn from_u128(n: u128) -> Self {
        n as f64
    }
    fn from_biguint(n: &BigUint) -> Self {
        n.to_f64().unwrap_or(f64::INFINITY)
    }
    fn ratio(num: u128, den: u128) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_u128(n: u128) -> Self {
        n as f32
    }
    fn from_biguint(n: &BigUint) -> Self {
        n.to_f32().unwrap_or(f32::INFINITY)
    }
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl Scalar for BigRational {
    fn from_u128(n: u128) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_biguint(n: &BigUint) -> Self {
        BigRational::from_integer(BigInt::from(n.clone()))
    }
    fn ratio(num: u128, den: u128) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl RealScalar for f64 {}
impl RealScalar for f32 {}
