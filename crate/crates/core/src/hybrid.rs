//! Qubit / binary-coherent-state (BCS) hybrid resource.
//!
//! The coherent states `|±α>` are encoded as the non-orthogonal qubit
//! vectors `|+α> = cosθ|0> + sinθ|1>`, `|-α> = sinθ|0> + cosθ|1>` with
//! `<+α|-α> = sin 2θ = e^{-2α²}`. A cross-Kerr interaction with phase π maps
//! `(c|0> + d|1>)|α>` to `c|0>|α> + d|1>|-α>`. Copying the BCS qubit onto an
//! ancilla with a CNOT and measuring the first qubit leaves
//! `cosθ|00> + sinθ|11>` (outcome 0) or `sinθ|00> + cosθ|11>` (outcome 1).
//! One half of that pair is then sent through an amplitude-damping channel.

use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::singlet::{f_opt_spa, teleportation_fidelity};
use crate::spa::QuantumChannel;
use crate::states::{validate, DensityMatrix, StateVector};
use crate::witness::verdict;
use crate::{c64, CMatrix, C64};

/// Agreement required between the closed form and the SPA pipeline.
pub const PIPELINE_TOL: f64 = 1e-10;

const THETA_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcsParams {
    pub theta: f64,
    pub alpha: Option<f64>,
}

impl BcsParams {
    pub fn from_theta(theta: f64) -> Result<Self> {
        check_theta(theta)?;
        Ok(Self { theta, alpha: None })
    }

    pub fn from_alpha(alpha: f64) -> Result<Self> {
        Ok(Self {
            theta: theta_from_alpha(alpha)?,
            alpha: Some(alpha),
        })
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta <= FRAC_PI_4 + THETA_SLACK) {
        return Err(Error::OutOfRange {
            name: "theta",
            value: theta,
            allowed: "(0, pi/4]",
        });
    }
    Ok(())
}

fn check_probability(name: &'static str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name,
            value: p,
            allowed: "[0, 1]",
        });
    }
    Ok(())
}

/// `θ = arcsin(e^{-2α²}) / 2` for a real amplitude `α ≥ 0`.
pub fn theta_from_alpha(alpha: f64) -> Result<f64> {
    if !(alpha >= 0.0) {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
            allowed: "[0, inf)",
        });
    }
    Ok((-2.0 * alpha * alpha).exp().asin() / 2.0)
}

/// `(|+α>, |-α>)` in the computational basis.
pub fn bcs_vectors(theta: f64) -> Result<(StateVector, StateVector)> {
    check_theta(theta)?;
    let (s, c) = theta.sin_cos();
    Ok((
        StateVector::from_real(&[c, s])?,
        StateVector::from_real(&[s, c])?,
    ))
}

fn check_qubit_amplitudes(c: C64, d: C64) -> Result<()> {
    let norm = (c.norm_sqr() + d.norm_sqr()).sqrt();
    if !((norm - 1.0).abs() <= 1e-12) {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

/// `c cosθ|00> + c sinθ|01> + d sinθ|10> + d cosθ|11>`.
pub fn kerr_hybrid_state(c: C64, d: C64, theta: f64) -> Result<StateVector> {
    check_qubit_amplitudes(c, d)?;
    check_theta(theta)?;
    let (s, co) = theta.sin_cos();
    StateVector::normalized(vec![c * co, c * s, d * s, d * co])
}

/// Post-measurement state of the BCS qubit and the ancilla.
#[derive(Debug, Clone, PartialEq)]
pub struct HybridBranch {
    pub outcome: u8,
    pub probability: f64,
    pub state: StateVector,
    /// The outcome has zero probability for the given `(c, d)`; `state` is
    /// then the conditional state the outcome would herald.
    pub impossible: bool,
}

/// CNOT with control qubit 2 and target ancilla on the register `(1, 2, a)`,
/// index `4·q1 + 2·q2 + qa`.
fn cnot_2a(v: &[C64]) -> Vec<C64> {
    let mut out = vec![c64(0.0, 0.0); 8];
    for (idx, amp) in v.iter().enumerate() {
        let q2 = (idx >> 1) & 1;
        out[idx ^ q2] += *amp;
    }
    out
}

fn measure_first(v: &[C64], outcome: usize) -> (f64, Vec<C64>) {
    let kept: Vec<C64> = (0..4).map(|k| v[4 * outcome + k]).collect();
    let p = kept.iter().map(|z| z.norm_sqr()).sum();
    (p, kept)
}

pub fn prepare_branch(c: C64, d: C64, theta: f64, outcome: u8) -> Result<HybridBranch> {
    if outcome > 1 {
        return Err(Error::OutOfRange {
            name: "outcome",
            value: outcome as f64,
            allowed: "{0, 1}",
        });
    }
    let register = |c: C64, d: C64| -> Result<Vec<C64>> {
        let hybrid = kerr_hybrid_state(c, d, theta)?;
        // attach |0>_a
        let mut v = vec![c64(0.0, 0.0); 8];
        for (k, amp) in hybrid.amplitudes().iter().enumerate() {
            v[2 * k] = *amp;
        }
        Ok(cnot_2a(&v))
    };
    let (probability, kept) = measure_first(&register(c, d)?, outcome as usize);
    if probability > 1e-24 {
        return Ok(HybridBranch {
            outcome,
            probability,
            state: StateVector::normalized(kept)?,
            impossible: false,
        });
    }
    let h = c64(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let (_, kept) = measure_first(&register(h, h)?, outcome as usize);
    Ok(HybridBranch {
        outcome,
        probability,
        state: StateVector::normalized(kept)?,
        impossible: true,
    })
}

/// Kraus pair `K0 = diag(1, √(1-p))`, `K1 = [[0, √p], [0, 0]]`.
pub fn amplitude_damping(p: f64) -> Result<QuantumChannel> {
    check_probability("p", p)?;
    let k0 = CMatrix::diagonal(&[1.0, (1.0 - p).sqrt()]);
    let k1 = CMatrix::from_real_rows(&[&[0.0, p.sqrt()], &[0.0, 0.0]])?;
    QuantumChannel::new(vec![k0, k1])
}

/// The damping Kraus pair as originally printed, with a spurious 1 in the
/// corner of `K1`. It is not trace preserving and is kept only for
/// comparison.
pub fn printed_damping_kraus(p: f64) -> Vec<CMatrix> {
    vec![
        CMatrix::diagonal(&[1.0, (1.0 - p).sqrt()]),
        CMatrix::from_real_rows(&[&[1.0, p.sqrt()], &[0.0, 0.0]]).expect("2x2"),
    ]
}

/// Sends the first qubit of the branch through amplitude damping.
pub fn transmit_first_qubit(branch: &HybridBranch, p: f64) -> Result<DensityMatrix> {
    let channel = amplitude_damping(p)?;
    validate(channel.apply_to_first(&branch.state.projector(), 2)?)
}

/// `1/2 + [√((1-p) sin²2θ + p² sin⁴θ) - p sin²θ] / 2`.
pub fn f_opt_hybrid_closed_form(p: f64, theta: f64) -> Result<f64> {
    check_probability("p", p)?;
    check_theta(theta)?;
    let s2 = theta.sin().powi(2);
    let sin2t = (2.0 * theta).sin();
    Ok(0.5 + 0.5 * (((1.0 - p) * sin2t * sin2t + p * p * s2 * s2).sqrt() - p * s2))
}

/// Optimal singlet fraction of the transmitted branch state through the
/// SPA-PT pipeline. Outcome 1 is first mapped onto outcome 0 by the local
/// `X ⊗ X` Alice applies on learning the measurement result.
pub fn f_opt_hybrid_pipeline(p: f64, theta: f64, outcome: u8) -> Result<f64> {
    let h = c64(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let branch = heralded_branch(prepare_branch(h, h, theta, outcome)?);
    let rho = transmit_first_qubit(&branch, p)?;
    Ok(f_opt_spa(&rho, 1.0)?.value)
}

/// Applies `X ⊗ X` to an outcome-1 branch, turning `sinθ|00> + cosθ|11>`
/// into `cosθ|00> + sinθ|11>`.
pub fn heralded_branch(mut branch: HybridBranch) -> HybridBranch {
    if branch.outcome == 1 {
        let flipped: Vec<C64> = branch.state.amplitudes().iter().rev().copied().collect();
        branch.state = StateVector::new(flipped).expect("permutation keeps the norm");
    }
    branch
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridFidelity {
    pub closed_form: f64,
    pub pipeline: f64,
}

pub fn f_opt_hybrid(p: f64, theta: f64) -> Result<HybridFidelity> {
    let closed_form = f_opt_hybrid_closed_form(p, theta)?;
    let pipeline = f_opt_hybrid_pipeline(p, theta, 0)?;
    let difference = (closed_form - pipeline).abs();
    if !(difference <= PIPELINE_TOL) {
        return Err(Error::RouteDisagreement {
            what: "hybrid F_opt closed form vs SPA pipeline",
            difference,
        });
    }
    Ok(HybridFidelity {
        closed_form,
        pipeline,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub p: f64,
    pub theta: f64,
    pub f_opt: f64,
    pub teleport_fidelity: f64,
    pub entangled: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HybridScan {
    /// Ordered by `p`, then `θ`.
    pub rows: Vec<ScanRow>,
    /// `F_opt` strictly decreasing in `p` along every fixed-`θ` line.
    pub decreasing_in_p: bool,
    /// `F_opt` strictly increasing in `θ` along every fixed-`p` line with
    /// `p < 1` (the `p = 1` line is flat at 1/2).
    pub increasing_in_theta: bool,
    /// `F_opt > 1/2` at every point with `0 < p < 1`.
    pub interior_useful: bool,
}

pub fn hybrid_scan(p_grid: &[f64], theta_grid: &[f64]) -> Result<HybridScan> {
    if p_grid.is_empty() || theta_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let mut ps = p_grid.to_vec();
    let mut thetas = theta_grid.to_vec();
    ps.sort_by(f64::total_cmp);
    thetas.sort_by(f64::total_cmp);

    let mut rows = Vec::with_capacity(ps.len() * thetas.len());
    for &p in &ps {
        for &theta in &thetas {
            let f = f_opt_hybrid(p, theta)?.closed_form;
            let h = c64(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            let rho = transmit_first_qubit(&prepare_branch(h, h, theta, 0)?, p)?;
            rows.push(ScanRow {
                p,
                theta,
                f_opt: f,
                teleport_fidelity: teleportation_fidelity(f)?.value,
                entangled: verdict(&rho)?.entangled,
            });
        }
    }

    let nt = thetas.len();
    let at = |i: usize, j: usize| rows[i * nt + j].f_opt;
    let decreasing_in_p = (0..nt).all(|j| (1..ps.len()).all(|i| at(i, j) < at(i - 1, j)));
    let interior = |p: f64| p > 0.0 && p < 1.0;
    let increasing_in_theta = (0..ps.len())
        .filter(|&i| ps[i] < 1.0)
        .all(|i| (1..nt).all(|j| at(i, j) > at(i, j - 1)));
    let interior_useful = rows.iter().filter(|r| interior(r.p)).all(|r| r.f_opt > 0.5);

    Ok(HybridScan {
        rows,
        decreasing_in_p,
        increasing_in_theta,
        interior_useful,
    })
}
