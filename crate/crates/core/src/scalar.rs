//! Scalar abstractions.
//!
//! Energies, amplitudes and probabilities are computed in a [`Real`] type
//! (`f32` or `f64`). Linear solves that can be carried out exactly, such as
//! the stationary distribution of a DFA under uniform input, are generic over
//! [`Field`], which is also implemented for [`BigRational`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, Num, NumCast, Signed, ToPrimitive, Zero};

/// Floating point scalar used for bit counts and quantum amplitudes.
pub trait Real: Float + FloatConst + Debug + Display + Sum + Send + Sync + 'static {
    /// Absolute tolerance appropriate for the precision.
    fn tolerance() -> Self;

    fn cast(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("f64 literal representable")
    }

    fn from_count(n: usize) -> Self {
        <Self as NumCast>::from(n).expect("count representable")
    }

    /// `log2(n)` of a positive count; `0` for counts of 0 or 1.
    fn log2_count(n: usize) -> Self {
        if n <= 1 {
            Self::zero()
        } else {
            Self::from_count(n).log2()
        }
    }
}

impl Real for f64 {
    fn tolerance() -> Self {
        1e-9
    }
}

impl Real for f32 {
    fn tolerance() -> Self {
        1e-4
    }
}

/// Ordered field with enough structure for Gaussian elimination with partial
/// pivoting.
pub trait Field: Clone + Num + Signed + PartialOrd + Debug + Send + Sync {
    fn ratio(num: u64, den: u64) -> Self;

    /// Whether a pivot candidate should be treated as zero.
    fn is_negligible(&self) -> bool;

    fn approx_f64(&self) -> f64;
}

impl Field for f64 {
    fn ratio(num: u64, den: u64) -> Self {
        num as f64 / den as f64
    }

    fn is_negligible(&self) -> bool {
        Signed::abs(self) < 1e-13
    }

    fn approx_f64(&self) -> f64 {
        *self
    }
}

impl Field for f32 {
    fn ratio(num: u64, den: u64) -> Self {
        (num as f64 / den as f64) as f32
    }

    fn is_negligible(&self) -> bool {
        Signed::abs(self) < 1e-6
    }

    fn approx_f64(&self) -> f64 {
        *self as f64
    }
}

impl Field for BigRational {
    fn ratio(num: u64, den: u64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}
