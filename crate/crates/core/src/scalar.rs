//! Numeric abstraction shared by the index engine and the bound checks.
//!
//! Root-free quantities only need a field ([`Scalar`]); anything involving a
//! square root needs [`RealScalar`]. Exact types report a zero tolerance so
//! comparisons on them are strict.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, Num, ToPrimitive};

pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync + 'static {
    /// Whether arithmetic on this type is exact.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self;

    /// Absolute tolerance for `<=`/`==` style comparisons.
    fn tolerance() -> Self;

    fn to_f64(&self) -> f64;

    fn approx_le(&self, other: &Self) -> bool {
        self.clone() <= other.clone() + Self::tolerance()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self.approx_le(other) && other.approx_le(self)
    }
}

/// A scalar with square roots.
pub trait RealScalar: Scalar + Float {}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_frac(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn tolerance() -> Self {
        1e-9
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f32
    }

    fn from_frac(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }

    fn tolerance() -> Self {
        1e-4
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

impl RealScalar for f64 {}
impl RealScalar for f32 {}

macro_rules! impl_small_ratio {
    ($($int:ty),*) => {$(
        impl Scalar for Ratio<$int> {
            const EXACT: bool = true;

            fn from_int(v: i64) -> Self {
                Ratio::from_integer(v as $int)
            }

            fn from_frac(num: i64, den: i64) -> Self {
                Ratio::new(num as $int, den as $int)
            }

            fn tolerance() -> Self {
                Ratio::from_integer(0)
            }

            fn to_f64(&self) -> f64 {
                ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
            }
        }
    )*};
}

impl_small_ratio!(i64, i128);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn tolerance() -> Self {
        BigRational::from_integer(BigInt::from(0))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}
