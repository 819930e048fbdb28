use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar used for amplitudes: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    fn from_int(x: i64) -> Self {
        <Self as FromPrimitive>::from_i64(x).expect("integer representable as float")
    }

    fn from_real(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 representable as scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}
