//! Singlet fraction, the local filter `X_opt(a)`, and the optimal singlet
//! fraction read off the SPA-PT minimum eigenvalue.
//!
//! Two routes to the optimal singlet fraction are kept side by side:
//!
//! * [`f_opt_oracle`] evaluates `1/2 - Tr(X_opt ρ^{T_B})` on the partial
//!   transpose, which is not a physical operation.
//! * [`f_opt_spa`] uses only `λ_min` of the SPA-PT output:
//!   `1/2 - (9(a² + 1)/2)(λ_min - 2/9)`, which at `a = ±1` becomes
//!   `1/2 - 9(λ_min - 2/9)`.

use crate::error::{Error, Result};
use crate::states::{make_bell, Bell, DensityMatrix, StateVector};
use crate::witness::{min_eig_spa, SEPARABILITY_THRESHOLD, VERDICT_TOL};
use crate::{c64, CMatrix};

/// `max_k <B_k|ρ|B_k>` over the four Bell states.
pub fn singlet_fraction(rho: &DensityMatrix) -> Result<f64> {
    rho.matrix().check_dim(4)?;
    let mut best = f64::NEG_INFINITY;
    for b in Bell::ALL {
        best = best.max(rho.matrix().expectation(make_bell(b).amplitudes())?.re);
    }
    Ok(best)
}

/// `X_opt = (A ⊗ I)|ψ⁺><ψ⁺|(A† ⊗ I)` with `A = diag(a, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterOperator {
    pub a: f64,
    pub matrix: CMatrix,
    /// `(a|00> + |11>)/√(a² + 1)`; `X_opt = ((a² + 1)/2)|χ><χ|`.
    pub chi: StateVector,
}

fn check_filter_parameter(a: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&a) {
        return Err(Error::OutOfRange {
            name: "a",
            value: a,
            allowed: "[-1, 1]",
        });
    }
    Ok(())
}

pub fn build_filter(a: f64) -> Result<FilterOperator> {
    check_filter_parameter(a)?;
    let filter = CMatrix::diagonal(&[a, 1.0]).kron(&CMatrix::identity(2));
    let psi = make_bell(Bell::PsiPlus).projector();
    let matrix = &(&filter * &psi) * &filter.adjoint();
    let chi = StateVector::normalized(vec![
        c64(a, 0.0),
        c64(0.0, 0.0),
        c64(0.0, 0.0),
        c64(1.0, 0.0),
    ])?;
    Ok(FilterOperator { a, matrix, chi })
}

/// `1/2 - Tr(X_opt(a) ρ^{T_B})`, evaluated on the partial transpose.
pub fn f_opt_oracle(rho: &DensityMatrix, a: f64) -> Result<f64> {
    let x = build_filter(a)?;
    Ok(0.5 - x.matrix.overlap(&rho.matrix().partial_transpose_b()?)?)
}

/// `1/2 - [9 Tr(X_opt ρ̃) - (a² + 1)]`: the oracle rewritten through the SPA-PT
/// output `ρ̃`.
pub fn f_opt_via_filter_on_spa(rho: &DensityMatrix, a: f64) -> Result<f64> {
    let x = build_filter(a)?;
    let spa = crate::spa::spa_pt(rho)?;
    Ok(0.5 - (9.0 * x.matrix.overlap(spa.matrix())? - (a * a + 1.0)))
}

/// `1/2 - (9(a² + 1)/2)(λ_min - 2/9)`.
pub fn f_opt_from_lambda(lambda_min: f64, a: f64) -> f64 {
    0.5 - 9.0 * (a * a + 1.0) / 2.0 * (lambda_min - SEPARABILITY_THRESHOLD)
}

/// `1/2 - (135/8)(F_avg - 7/15)`.
pub fn f_opt_from_favg(f_avg: f64) -> f64 {
    0.5 - 135.0 / 8.0 * (f_avg - 7.0 / 15.0)
}

/// Range of `F_avg` over which [`f_opt_from_favg`] describes an entangled
/// state: `[59/135, 7/15)`.
pub const FAVG_ENTANGLED_RANGE: (f64, f64) = (59.0 / 135.0, 7.0 / 15.0);

/// SPA-route optimal singlet fraction together with the raw Bell overlap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaSingletFraction {
    /// Value of the SPA formula, never clamped.
    pub value: f64,
    pub lambda_min: f64,
    /// `λ_min < 2/9`: the state beats classical teleportation.
    pub useful: bool,
    /// Plain singlet fraction of the unfiltered state.
    pub raw_singlet_fraction: f64,
    /// `max(value, raw_singlet_fraction)`.
    pub reported: f64,
    /// Set when the SPA formula fell below the unfiltered Bell overlap.
    pub below_raw: bool,
}

pub fn f_opt_spa(rho: &DensityMatrix, a: f64) -> Result<SpaSingletFraction> {
    check_filter_parameter(a)?;
    let lambda_min = min_eig_spa(rho)?.lambda_min;
    let value = f_opt_from_lambda(lambda_min, a);
    let raw = singlet_fraction(rho)?;
    Ok(SpaSingletFraction {
        value,
        lambda_min,
        useful: lambda_min < SEPARABILITY_THRESHOLD - VERDICT_TOL,
        raw_singlet_fraction: raw,
        reported: value.max(raw),
        below_raw: value < raw - VERDICT_TOL,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TeleportationFidelity {
    /// `(2F + 1)/3`.
    pub value: f64,
    /// `f > 2/3`.
    pub beats_classical: bool,
}

pub fn teleportation_fidelity(f: f64) -> Result<TeleportationFidelity> {
    if !(-VERDICT_TOL..=1.0 + VERDICT_TOL).contains(&f) {
        return Err(Error::OutOfRange {
            name: "F",
            value: f,
            allowed: "[0, 1]",
        });
    }
    let value = (2.0 * f + 1.0) / 3.0;
    Ok(TeleportationFidelity {
        value,
        beats_classical: value > 2.0 / 3.0 + VERDICT_TOL,
    })
}
