//! Real scalar abstraction shared by the numeric modules.
//!
//! Amplitudes are `Complex<T>` for a real type `T: Real`. Each precision
//! carries its own tolerance set, so the same algorithms run in `f32` with
//! thresholds that make sense for single precision.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point type usable as the real part of an amplitude.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Norm at or below which a vector counts as zero.
    const EPS_ZERO: Self;
    /// Residual norm at or below which Gram-Schmidt drops a vector as dependent.
    const EPS_RANK: Self;
    /// Tolerance for orthonormality checks and projector identities.
    const EPS_ORTHO: Self;
    /// Frobenius commutator norm at or below which two projectors commute.
    const EPS_COMMUTE: Self;
    /// Allowed deviation from unit norm for a state vector.
    const EPS_UNIT: Self;
    /// Allowed deviation of a joint table from summing to one.
    const EPS_JOINT: Self;
    /// Pre-clamp excursion tolerated outside `[0, 1]` for a probability.
    const EPS_CLAMP: Self;

    /// Converts an `f64` literal. Every `Real` can represent (or round) any
    /// finite `f64`, so this never fails for finite input.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal")
    }
}

impl Real for f64 {
    const EPS_ZERO: f64 = 1e-12;
    const EPS_RANK: f64 = 1e-10;
    const EPS_ORTHO: f64 = 1e-10;
    const EPS_COMMUTE: f64 = 1e-9;
    const EPS_UNIT: f64 = 1e-9;
    const EPS_JOINT: f64 = 1e-9;
    const EPS_CLAMP: f64 = 1e-12;
}

impl Real for f32 {
    const EPS_ZERO: f32 = 1e-6;
    const EPS_RANK: f32 = 1e-5;
    const EPS_ORTHO: f32 = 1e-5;
    const EPS_COMMUTE: f32 = 1e-4;
    const EPS_UNIT: f32 = 1e-5;
    const EPS_JOINT: f32 = 1e-4;
    const EPS_CLAMP: f32 = 1e-6;
}

/// Clamps a probability into `[0, 1]`.
pub(crate) fn clamp_unit<T: Real>(p: T) -> T {
    p.max(T::zero()).min(T::one())
}

pub(crate) fn is_finite<T: Real>(c: &Complex<T>) -> bool {
    c.re.is_finite() && c.im.is_finite()
}
