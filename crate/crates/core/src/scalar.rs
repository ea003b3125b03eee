//! Coefficient types.
//!
//! Series arithmetic only needs a field with small-integer embedding, so the
//! engine is written against [`Scalar`]. Exact work uses [`Rational`]; `f64`
//! and `f32` are accepted for quick numeric experiments.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

/// Field elements usable as series coefficients.
pub trait Scalar: Num + Neg<Output = Self> + FromPrimitive + Clone + PartialEq + Debug {
    /// Embeds a (possibly negative) machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent a small integer")
    }
}

impl<T> Scalar for T where T: Num + Neg<Output = T> + FromPrimitive + Clone + PartialEq + Debug {}

/// Exact reduced fraction with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Builds `num/den` as an exact rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
