//! Validated qubit and two-qubit states, and the generators used throughout
//! the crate. Basis order is `|00>, |01>, |10>, |11>`.

use std::f64::consts::FRAC_1_SQRT_2;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigensystem, Matrix};
use crate::{c64, CMatrix, C64};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;
pub const NORM_TOL: f64 = 1e-12;

fn check_supported(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        _ => Err(Error::UnsupportedDimension { dim }),
    }
}

/// A Hermitian, unit-trace, positive-semidefinite matrix on one or two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: CMatrix,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn purity(&self) -> f64 {
        self.matrix.overlap(&self.matrix).expect("same dimension")
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigensystem(&self.matrix)
            .expect("validated state is Hermitian")
            .values
    }

    /// Fidelity-like overlap `Tr(ρσ)`.
    pub fn overlap(&self, other: &DensityMatrix) -> Result<f64> {
        self.matrix.overlap(&other.matrix)
    }
}

/// Checks Hermiticity, unit trace and positivity, in that order.
pub fn validate(m: CMatrix) -> Result<DensityMatrix> {
    check_supported(m.dim())?;
    let (dev, row, col) = m.hermiticity_defect();
    if !(dev <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian {
            row,
            col,
            deviation: dev,
        });
    }
    let trace = m.trace();
    if !((trace.re - 1.0).abs() <= TRACE_TOL && trace.im.abs() <= TRACE_TOL) {
        return Err(Error::TraceNotOne { trace: trace.re });
    }
    let min_eigenvalue = hermitian_eigensystem(&m)?.min_value();
    if min_eigenvalue < -PSD_TOL {
        return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
    }
    Ok(DensityMatrix { matrix: m })
}

/// A normalized pure state on one or two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<C64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        check_supported(amplitudes.len())?;
        let norm = norm(&amplitudes);
        if !((norm - 1.0).abs() <= NORM_TOL) {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales any non-zero vector to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        check_supported(amplitudes.len())?;
        let n = norm(&amplitudes);
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(Self {
            amplitudes: amplitudes.into_iter().map(|z| z / n).collect(),
        })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::new(amplitudes.iter().map(|&x| c64(x, 0.0)).collect())
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn projector(&self) -> CMatrix {
        Matrix::projector(&self.amplitudes)
    }
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// The four Bell states. `PsiPlus` is `(|00> + |11>)/√2`, the state the
/// partial-transpose channel and the filter operators are built from.
///
/// | variant     | vector                |
/// |-------------|-----------------------|
/// | `PsiPlus`   | `(|00> + |11>)/√2`    |
/// | `PsiMinus`  | `(|01> - |10>)/√2`    |
/// | `PhiPlus`   | `(|01> + |10>)/√2`    |
/// | `PhiMinus`  | `(|00> - |11>)/√2`    |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl Bell {
    pub const ALL: [Bell; 4] = [Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus];

    /// Amplitudes times √2.
    fn signs(self) -> [f64; 4] {
        match self {
            Bell::PsiPlus => [1.0, 0.0, 0.0, 1.0],
            Bell::PsiMinus => [0.0, 1.0, -1.0, 0.0],
            Bell::PhiPlus => [0.0, 1.0, 1.0, 0.0],
            Bell::PhiMinus => [1.0, 0.0, 0.0, -1.0],
        }
    }

    fn real_amplitudes(self) -> [f64; 4] {
        self.signs().map(|x| x * FRAC_1_SQRT_2)
    }
}

/// `|B><B|` with entries exactly `0` or `±1/2`.
pub fn bell_density(which: Bell) -> DensityMatrix {
    let s = which.signs();
    DensityMatrix {
        matrix: CMatrix::from_fn(4, |i, j| c64(s[i] * s[j] / 2.0 + 0.0, 0.0)),
    }
}

pub fn make_bell(which: Bell) -> StateVector {
    StateVector {
        amplitudes: which
            .real_amplitudes()
            .iter()
            .map(|&x| c64(x, 0.0))
            .collect(),
    }
}

pub fn pure_to_density(v: &StateVector) -> DensityMatrix {
    DensityMatrix {
        matrix: v.projector(),
    }
}

/// `w |ψ⁻><ψ⁻| + (1 - w) I/4`.
pub fn make_werner(w: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::OutOfRange {
            name: "w",
            value: w,
            allowed: "[0, 1]",
        });
    }
    let singlet = bell_density(Bell::PsiMinus).into_matrix();
    let mixed = CMatrix::identity(4).scale(0.25);
    validate(&singlet.scale(w) + &mixed.scale(1.0 - w))
}

/// `Σ p_k |B_k><B_k|` over `Bell::ALL`.
pub fn bell_diagonal(weights: [f64; 4]) -> Result<DensityMatrix> {
    let mut m = CMatrix::zeros(4);
    for (b, p) in Bell::ALL.iter().zip(weights) {
        m = &m + &bell_density(*b).into_matrix().scale(p);
    }
    validate(m)
}

/// `a ⊗ b` for two single-qubit states.
pub fn product_state(a: &DensityMatrix, b: &DensityMatrix) -> Result<DensityMatrix> {
    if a.dim() != 2 || b.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: if a.dim() != 2 { a.dim() } else { b.dim() },
        });
    }
    validate(a.matrix.kron(&b.matrix))
}

fn gaussian(rng: &mut ChaCha8Rng) -> C64 {
    c64(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Ginibre state `G G† / Tr(G G†)` with `G` a `dim × rank` matrix of
/// complex Gaussians drawn from a ChaCha8 stream seeded by `seed`.
pub fn random_density_of_dim(dim: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    check_supported(dim)?;
    if rank == 0 || rank > dim {
        return Err(Error::OutOfRange {
            name: "rank",
            value: rank as f64,
            allowed: "1..=dim",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g: Vec<C64> = (0..dim * rank).map(|_| gaussian(&mut rng)).collect();
    let mut m = CMatrix::from_fn(dim, |i, j| {
        (0..rank)
            .map(|k| g[i * rank + k] * g[j * rank + k].conj())
            .sum()
    });
    let tr = m.trace().re;
    m = m.scale(1.0 / tr);
    validate(m)
}

/// Random two-qubit Ginibre state of the given rank (1..=4).
pub fn random_density(seed: u64, rank: usize) -> Result<DensityMatrix> {
    random_density_of_dim(4, rank, seed)
}

/// Random product of two single-qubit Ginibre states with seed-chosen ranks.
pub fn random_product(seed: u64) -> DensityMatrix {
    let rank_a = 1 + (seed % 2) as usize;
    let rank_b = 1 + ((seed / 2) % 2) as usize;
    let a = random_density_of_dim(2, rank_a, seed.wrapping_mul(2).wrapping_add(1))
        .expect("generator output is valid");
    let b = random_density_of_dim(2, rank_b, seed.wrapping_mul(2).wrapping_add(2))
        .expect("generator output is valid");
    product_state(&a, &b).expect("product of valid qubit states")
}
