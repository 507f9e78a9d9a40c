//! Witness operators read through the SPA-PT output.
//!
//! With `ρ̃ = spa_pt(ρ)` and `|φ>` the eigenvector of its least eigenvalue
//! `λ_min`, the following all coincide:
//!
//! ```text
//! Tr(W_opt ρ) = Tr(V ρ̃) = λ_min - 2/9,   W_opt = |φ><φ|^{T_B}/9,  V = |φ><φ| - 2I/9
//! ```
//!
//! `V` has a negative eigenvalue, so it cannot be prepared as a state. The
//! shifted operator `Ṽ = (8/15) V + (7/15) I` is positive and turns the
//! witness value into an overlap: `Tr(V ρ̃) = (15/8) Tr(Ṽ ρ̃) - 7/8`.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigensystem, pauli, Matrix};
use crate::singlet::{f_opt_from_lambda, teleportation_fidelity};
use crate::spa::spa_pt;
use crate::states::{validate, DensityMatrix, StateVector};
use crate::CMatrix;

/// `λ_min(ρ̃)` below this certifies entanglement.
pub const SEPARABILITY_THRESHOLD: f64 = 2.0 / 9.0;
/// Slack applied to every strict comparison against a threshold.
pub const VERDICT_TOL: f64 = 1e-12;
/// Weight of `V` in `Ṽ = p V + (1 - p) I`.
pub const V_TILDE_WEIGHT: f64 = 8.0 / 15.0;
/// `Tr(Ṽ) = (8/15)(1/9) + (7/15)·4`.
pub const V_TILDE_TRACE: f64 = 52.0 / 27.0;
/// Agreement required between the `W_opt` and `V` routes.
pub const ROUTE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    WOpt,
    V,
    VTilde,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::WOpt => "W_opt",
            WitnessKind::V => "V",
            WitnessKind::VTilde => "V_tilde",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WitnessOperator {
    pub matrix: CMatrix,
    /// The vector `|φ>` the operator was built from.
    pub source: StateVector,
    pub kind: WitnessKind,
}

impl WitnessOperator {
    /// `Tr(W X)`.
    pub fn expectation(&self, x: &CMatrix) -> Result<f64> {
        self.matrix.overlap(x)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigensystem(&self.matrix)
            .expect("witness operators are Hermitian")
            .values
    }

    /// `Ṽ / Tr(Ṽ)` as a density matrix.
    pub fn normalized_state(&self) -> Result<DensityMatrix> {
        self.expect_kind(WitnessKind::VTilde)?;
        let tr = self.matrix.trace().re;
        validate(self.matrix.scale(1.0 / tr))
    }

    fn expect_kind(&self, kind: WitnessKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongWitnessKind {
                expected: kind.name(),
                found: self.kind.name(),
            });
        }
        Ok(())
    }
}

fn two_qubit(phi: &StateVector) -> Result<()> {
    if phi.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: phi.dim(),
        });
    }
    Ok(())
}

/// Least eigenvalue of `spa_pt(ρ)` and its canonical eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaMinimum {
    pub lambda_min: f64,
    pub vector: StateVector,
    pub spa: DensityMatrix,
}

pub fn min_eig_spa(rho: &DensityMatrix) -> Result<SpaMinimum> {
    let spa = spa_pt(rho)?;
    let es = hermitian_eigensystem(spa.matrix())?;
    Ok(SpaMinimum {
        lambda_min: es.min_value(),
        vector: StateVector::normalized(es.min_vector().to_vec())?,
        spa,
    })
}

/// `W_opt = |φ><φ|^{T_B} / 9`.
pub fn build_w_opt(phi: &StateVector) -> Result<WitnessOperator> {
    two_qubit(phi)?;
    Ok(WitnessOperator {
        matrix: phi.projector().partial_transpose_b()?.scale(1.0 / 9.0),
        source: phi.clone(),
        kind: WitnessKind::WOpt,
    })
}

/// `V = |φ><φ| - (2/9) I`.
pub fn build_v(phi: &StateVector) -> Result<WitnessOperator> {
    two_qubit(phi)?;
    Ok(WitnessOperator {
        matrix: &phi.projector() - &CMatrix::identity(4).scale(SEPARABILITY_THRESHOLD),
        source: phi.clone(),
        kind: WitnessKind::V,
    })
}

/// `Ṽ = (8/15) V + (7/15) I`, left unnormalized (trace 52/27).
pub fn build_v_tilde(v: &WitnessOperator) -> Result<WitnessOperator> {
    v.expect_kind(WitnessKind::V)?;
    let p = V_TILDE_WEIGHT;
    Ok(WitnessOperator {
        matrix: &v.matrix.scale(p) + &CMatrix::identity(4).scale(1.0 - p),
        source: v.source.clone(),
        kind: WitnessKind::VTilde,
    })
}

/// Largest `p` for which `p V + (1 - p) I` stays positive semidefinite.
pub fn v_tilde_psd_limit(v: &WitnessOperator) -> Result<f64> {
    v.expect_kind(WitnessKind::V)?;
    let mu = hermitian_eigensystem(&v.matrix)?.min_value();
    Ok(if mu >= 0.0 { 1.0 } else { 1.0 / (1.0 - mu) })
}

/// `λ_min = (15/8) F_avg - 47/72`.
pub fn lambda_from_favg(f_avg: f64) -> f64 {
    15.0 / 8.0 * f_avg - 47.0 / 72.0
}

pub fn favg_from_lambda(lambda_min: f64) -> f64 {
    (lambda_min + 47.0 / 72.0) * 8.0 / 15.0
}

/// Coefficients `c_ij` of `H = Σ c_ij σ_i ⊗ σ_j`, indices in the order
/// `I, X, Y, Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoefficients(pub [[f64; 4]; 4]);

impl PauliCoefficients {
    pub fn get(&self, first: usize, second: usize) -> f64 {
        self.0[first][second]
    }

    pub fn reconstruct(&self) -> CMatrix {
        let mut out = CMatrix::zeros(4);
        for i in 0..4 {
            for j in 0..4 {
                let c = self.0[i][j];
                if c != 0.0 {
                    out = &out + &pauli::<f64>(i).kron(&pauli(j)).scale(c);
                }
            }
        }
        out
    }

    pub fn nonzero_count(&self, tol: f64) -> usize {
        self.0.iter().flatten().filter(|c| c.abs() > tol).count()
    }
}

pub fn pauli_decompose(h: &Matrix<f64>) -> Result<PauliCoefficients> {
    h.check_dim(4)?;
    h.ensure_hermitian()?;
    let mut c = [[0.0; 4]; 4];
    for (i, row) in c.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = h.overlap(&pauli::<f64>(i).kron(&pauli(j)))? / 4.0;
        }
    }
    Ok(PauliCoefficients(c))
}

/// The Pauli expansion of `V` for `|φ> = α|00> + β|11>` as it was printed:
/// `(9/28)[(7/9) II + (α² - β²)(IZ + ZI) + 2αβ(XX + YY) + ZZ]`. Kept for
/// comparison with [`pauli_decompose`], which it does not match.
pub fn printed_pauli_coefficients(alpha: f64, beta: f64) -> PauliCoefficients {
    let k = 9.0 / 28.0;
    let mut c = [[0.0; 4]; 4];
    c[0][0] = k * 7.0 / 9.0;
    c[0][3] = k * (alpha * alpha - beta * beta);
    c[3][0] = c[0][3];
    c[1][1] = k * 2.0 * alpha * beta;
    c[2][2] = k * 2.0 * alpha * beta;
    c[3][3] = k;
    PauliCoefficients(c)
}

/// Result of the full SPA-PT analysis of a two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub lambda_min: f64,
    pub entangled: bool,
    /// `Tr(V ρ̃)`.
    pub witness_value: f64,
    pub f_opt_singlet_fraction: f64,
    pub teleport_fidelity: f64,
}

pub fn verdict(rho: &DensityMatrix) -> Result<Verdict> {
    let min = min_eig_spa(rho)?;
    let w_route = build_w_opt(&min.vector)?.expectation(rho.matrix())?;
    let witness_value = build_v(&min.vector)?.expectation(min.spa.matrix())?;
    let difference = (w_route - witness_value).abs();
    if !(difference <= ROUTE_TOL) {
        return Err(Error::RouteDisagreement {
            what: "Tr(W_opt rho) vs Tr(V rho~)",
            difference,
        });
    }
    let f_opt = f_opt_from_lambda(min.lambda_min, 1.0);
    Ok(Verdict {
        lambda_min: min.lambda_min,
        entangled: min.lambda_min < SEPARABILITY_THRESHOLD - VERDICT_TOL,
        witness_value,
        f_opt_singlet_fraction: f_opt,
        teleport_fidelity: teleportation_fidelity(f_opt)?.value,
    })
}

/// Peres–Horodecki test on the partial transpose itself, with the threshold
/// scaled by the 1/9 contraction SPA-PT applies.
pub fn ppt_entangled(rho: &DensityMatrix) -> Result<bool> {
    let pt = rho.matrix().partial_transpose_b()?;
    Ok(hermitian_eigensystem(&pt)?.min_value() < -9.0 * VERDICT_TOL)
}
