//! Real scalar abstraction used by the dense linear algebra layer.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// A real floating-point type (`f32` or `f64`) together with the numerical
/// tolerances the linear algebra routines use for it.
pub trait Scalar:
    Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Off-diagonal Frobenius norm at which the Jacobi sweeps stop.
    fn jacobi_tolerance() -> Self;
    /// Largest allowed `|M[i][j] - conj(M[j][i])|` for a Hermitian matrix.
    fn hermitian_tolerance() -> Self;
    /// Eigenvalues closer than this are treated as degenerate.
    fn degeneracy_gap() -> Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn jacobi_tolerance() -> Self {
        1e-13
    }
    fn hermitian_tolerance() -> Self {
        1e-12
    }
    fn degeneracy_gap() -> Self {
        1e-10
    }
}

impl Scalar for f32 {
    fn jacobi_tolerance() -> Self {
        1e-5
    }
    fn hermitian_tolerance() -> Self {
        1e-5
    }
    fn degeneracy_gap() -> Self {
        1e-4
    }
}
