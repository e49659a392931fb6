use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the spectral and bound code is generic over (`f32` or `f64`).
///
/// Exact quantities (degree-derived rationals, floors) are carried as
/// [`BigRational`] and converted through [`Scalar::from_rational`] only at the
/// point where a square root or exponential is taken.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Relative off-diagonal Frobenius threshold for the Jacobi sweep.
    fn jacobi_tol() -> Self;
    /// Accuracy bound attached to a computed spectrum.
    fn spectrum_tol() -> Self;
    /// Slack used for spectral invariant and soundness checks.
    fn check_tol() -> Self;
    /// Slack applied to formula guards (`alpha >= n/(n-1)` and friends).
    fn guard_slack() -> Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable")
    }

    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).expect("usize representable")
    }

    fn from_rational(r: &BigRational) -> Self {
        // to_f64 on big ratios is correctly rounded for f64; f32 goes through it
        Self::lit(r.to_f64().unwrap_or(f64::NAN))
    }
}

impl Scalar for f64 {
    fn jacobi_tol() -> Self {
        1e-12
    }
    fn spectrum_tol() -> Self {
        1e-9
    }
    fn check_tol() -> Self {
        1e-8
    }
    fn guard_slack() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn jacobi_tol() -> Self {
        1e-6
    }
    fn spectrum_tol() -> Self {
        1e-4
    }
    fn check_tol() -> Self {
        1e-3
    }
    fn guard_slack() -> Self {
        1e-5
    }
}
