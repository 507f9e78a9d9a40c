use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix has {found} entries but dimension {dim} needs {expected}")]
    MalformedMatrix {
        dim: usize,
        expected: usize,
        found: usize,
    },

    #[error(
        "matrix is not Hermitian: entries ({row},{col}) and ({col},{row}) differ by {deviation:e}"
    )]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
    },

    #[error("dimension {dim} is not supported (expected 2 or 4)")]
    UnsupportedDimension { dim: usize },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not positive semidefinite: minimum eigenvalue {min_eigenvalue:e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("state vector has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },

    #[error("{name} = {value} is outside {allowed}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        allowed: &'static str,
    },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("Kraus operators are not trace preserving: |sum K^dag K - I| = {deviation:e}")]
    NotTracePreserving { deviation: f64 },

    #[error("map is not completely positive: minimum Choi eigenvalue {min_eigenvalue:e}")]
    NotCompletelyPositive { min_eigenvalue: f64 },

    #[error("expected a {expected} witness, got {found}")]
    WrongWitnessKind {
        expected: &'static str,
        found: &'static str,
    },

    #[error("{what}: routes disagree by {difference:e}")]
    RouteDisagreement { what: &'static str, difference: f64 },

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("scan grid is empty")]
    EmptyGrid,
}

pub type Result<T> = std::result::Result<T, Error>;
