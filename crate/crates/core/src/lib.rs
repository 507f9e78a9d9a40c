//! Two-qubit entanglement detection, optimal singlet fraction and
//! teleportation fidelity computed through the structural physical
//! approximation of the partial transpose (SPA-PT).
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: dense complex matrices and a Jacobi Hermitian eigensolver,
//!   generic over the real scalar type.
//! * [`states`]: validated density matrices and state generators.
//! * [`spa`]: linear maps, channels, the SPA combinator and the SPA-PT
//!   channel with its local decomposition.
//! * [`witness`]: witness operators, the approximated witness and the
//!   entanglement verdict.
//! * [`singlet`]: singlet fraction, filter operators and teleportation
//!   fidelity.
//! * [`homsim`]: the two-detector shot simulator for the overlap estimate.
//! * [`hybrid`]: qubit / binary-coherent-state hybrid resource under
//!   amplitude damping.
//!
//! Everything above `linalg` works in `f64`; the aliases below name the
//! concrete types.

// Range checks are written as `!(x <= tol)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod homsim;
pub mod hybrid;
pub mod linalg;
pub mod scalar;
pub mod singlet;
pub mod spa;
pub mod states;
pub mod witness;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Double-precision complex number.
pub type C64 = num_complex::Complex<f64>;
/// Double-precision complex matrix.
pub type CMatrix = linalg::Matrix<f64>;
/// Double-precision eigensystem.
pub type EigenSystem64 = linalg::EigenSystem<f64>;

pub use homsim::{ShotBudget, ShotEstimate};
pub use spa::{LinearMap, QuantumChannel};
pub use states::{Bell, DensityMatrix, StateVector};
pub use witness::{Verdict, WitnessKind, WitnessOperator};

pub(crate) fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
