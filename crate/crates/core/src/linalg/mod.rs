//! Dense complex linear algebra over a generic real scalar.

mod eigen;
mod matrix;

pub use eigen::{hermitian_eigensystem, EigenSystem, MAX_SWEEPS};
pub use matrix::{choi_matrix, pauli, Matrix, Subsystem};
