//! Scalar abstraction: the numerical core is generic over `f32`/`f64`.

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable by every routine in this crate.
///
/// Implemented for `f32` and `f64`. Precomputed constants are stored as
/// `f64` and converted through [`Real::lit`]; for `f32` this is a lossy but
/// well-defined rounding.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + core::iter::Sum
    + core::ops::AddAssign
    + core::ops::SubAssign
    + core::ops::MulAssign
    + core::fmt::Debug
    + core::fmt::Display
    + core::fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into the scalar type.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal")
    }

    /// Converts a small unsigned index.
    #[inline]
    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
