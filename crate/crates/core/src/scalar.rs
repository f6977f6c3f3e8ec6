//! Scalar field abstraction.
//!
//! Every algebraic routine in the crate is written against [`Scalar`], so the
//! same code runs over `f32` and `f64`. Blade tables are built in integer
//! arithmetic and never depend on the scalar type.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive};

/// Floating point scalar usable as a multivector coefficient.
pub trait Scalar: Float + FromPrimitive + Debug + Display + FromStr + Default + Sum + Send + Sync + 'static {
    /// Tolerance for identities that are exact in real arithmetic and only
    /// pick up rounding error.
    fn tight_tol() -> Self;

    /// Tolerance for geometric predicates (incidence, normalization checks).
    fn loose_tol() -> Self;

    /// Converts an `f64` literal. Total for the implemented types.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a table sign (−1, 0, +1).
    #[inline]
    fn from_sign(s: i8) -> Self {
        match s {
            1 => Self::one(),
            -1 => -Self::one(),
            _ => Self::zero(),
        }
    }
}

impl Scalar for f64 {
    fn tight_tol() -> Self {
        1e-12
    }
    fn loose_tol() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn tight_tol() -> Self {
        1e-5
    }
    fn loose_tol() -> Self {
        1e-3
    }
}
