//! Scalar abstraction for the parameter-dependent parts of the engine.
//!
//! Content products, Pochhammer symbols and truncated series only need field
//! operations, so they are written against [`Scalar`]. The exact instance
//! (`BigRational`) is the one every identity in this crate is checked with;
//! the float instances exist for quick numeric evaluation.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// A field element usable as a coefficient or parameter value.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {
    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// Integer power, negative exponents allowed for nonzero `self`.
    fn ipow(&self, exp: i64) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * self.clone();
        }
        if exp < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    // Panics if `v` does not fit in i64.
    fn from_bigint(v: &BigInt) -> Self {
        Ratio::from_integer(v.to_i64().expect("integer overflows i64"))
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f32().unwrap_or(f32::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_powers() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(half.ipow(-3), BigRational::from_i64(8));
        assert_eq!(Scalar::ipow(&2.0f64, -2), 0.25);
        assert_eq!(Ratio::<i64>::from_i64(3).ipow(0), Ratio::from_integer(1));
    }
}
