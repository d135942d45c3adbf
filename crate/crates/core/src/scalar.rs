//! Scalar abstraction for the polynomial and matrix layers.
//!
//! The symbolic core instantiates everything at [`crate::Q`] (exact
//! rationals); the numeric layer reuses the same containers at `f64`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field-like scalar: enough structure for polynomial arithmetic and
/// Gaussian elimination. Zero testing is exact for rational scalars and
/// bitwise for floats; the exact-linear-algebra entry points are only
/// instantiated at exact scalars.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Lossy conversion used when handing symbolic data to the numeric layer.
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigRational {
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

/// Convert a big rational to the nearest f64 without overflowing on large
/// numerator/denominator pairs.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Fall back to a scaled division for extreme magnitudes.
    let bits = x.numer().bits().max(x.denom().bits()) as i64;
    let shift = (bits - 500).max(0) as u64;
    let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}
