//! Scalar abstraction: every floating-point kernel in this crate is written
//! against [`Scalar`] so the same code instantiates at `f32` or `f64`.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Shorthand for lossy conversion from `f64` literals.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal converts to scalar")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
