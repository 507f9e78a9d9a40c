//! Two-detector Hong-Ou-Mandel estimation of `Tr(Ṽ ρ̃)`.
//!
//! Two photons prepared in states `A` and `B` meet on a beam splitter; the
//! coincidence probability is `(1 - Tr(AB))/2`, so counting coincidences over
//! `n` shots estimates the overlap as `1 - 2·(coincidences / n)`. One stream of
//! coincidence / no-coincidence outcomes feeds every derived quantity:
//!
//! ```text
//! overlap ──×Tr(Ṽ)──▶ F_avg ──▶ λ_min = (15/8) F_avg - 47/72
//!                       └────▶ F_opt = 1/2 - (135/8)(F_avg - 7/15) ──▶ f = (2F_opt + 1)/3
//! ```
//!
//! Confidence intervals are 99% Hoeffding bounds on the coincidence
//! frequency, pushed through the same affine maps.

use rand::distr::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::singlet::f_opt_from_favg;
use crate::states::DensityMatrix;
use crate::witness::{build_v, build_v_tilde, lambda_from_favg, min_eig_spa};

/// Failure probability of the Hoeffding interval.
pub const HOEFFDING_DELTA: f64 = 0.01;

/// Upper clamp on the coincidence probability.
const COINCIDENCE_CEILING: f64 = 0.5 + 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShotBudget {
    Shots(u64),
    /// Exact expectation values, no sampling.
    Analytic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DerivedQuantity {
    Overlap,
    FAvg,
    LambdaMin,
    FOpt,
    TeleportFidelity,
}

impl DerivedQuantity {
    pub fn name(self) -> &'static str {
        match self {
            DerivedQuantity::Overlap => "overlap",
            DerivedQuantity::FAvg => "f_avg",
            DerivedQuantity::LambdaMin => "lambda_min",
            DerivedQuantity::FOpt => "f_opt",
            DerivedQuantity::TeleportFidelity => "teleport_fidelity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShotEstimate {
    pub point: f64,
    /// `None` for the analytic arm.
    pub shots: Option<u64>,
    pub seed: u64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub quantity: DerivedQuantity,
}

impl ShotEstimate {
    pub fn half_width(&self) -> f64 {
        (self.ci_high - self.ci_low) / 2.0
    }

    pub fn contains(&self, value: f64) -> bool {
        self.ci_low <= value && value <= self.ci_high
    }

    /// `slope · self + intercept`, interval endpoints swapped for negative slopes.
    fn affine(&self, slope: f64, intercept: f64, quantity: DerivedQuantity) -> ShotEstimate {
        let (a, b) = (
            slope * self.ci_low + intercept,
            slope * self.ci_high + intercept,
        );
        ShotEstimate {
            point: slope * self.point + intercept,
            shots: self.shots,
            seed: self.seed,
            ci_low: a.min(b),
            ci_high: a.max(b),
            quantity,
        }
    }
}

/// `√(ln(2/δ) / (2n))` for the 99% interval on a Bernoulli frequency.
pub fn hoeffding_half_width(shots: u64) -> f64 {
    ((2.0 / HOEFFDING_DELTA).ln() / (2.0 * shots as f64)).sqrt()
}

/// `(1 - Tr(AB))/2`, clamped to `[0, 1/2 + 1e-12]`.
pub fn coincidence_prob(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    let overlap = a.overlap(b)?;
    Ok(((1.0 - overlap) / 2.0).clamp(0.0, COINCIDENCE_CEILING))
}

/// Number of coincidences in `shots` seeded Bernoulli trials.
pub fn sample_coincidences(probability: f64, shots: u64, seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trial = Bernoulli::new(probability.clamp(0.0, 1.0)).expect("probability in [0, 1]");
    let mut hits = 0;
    for _ in 0..shots {
        if trial.sample(&mut rng) {
            hits += 1;
        }
    }
    hits
}

pub fn estimate_overlap(
    a: &DensityMatrix,
    b: &DensityMatrix,
    budget: ShotBudget,
    seed: u64,
) -> Result<ShotEstimate> {
    let q = coincidence_prob(a, b)?;
    let (frequency, shots, eps) = match budget {
        ShotBudget::Shots(0) => return Err(Error::ZeroShots),
        ShotBudget::Shots(n) => {
            let hits = sample_coincidences(q, n, seed);
            (hits as f64 / n as f64, Some(n), hoeffding_half_width(n))
        }
        ShotBudget::Analytic => (q, None, 0.0),
    };
    let frequency = ShotEstimate {
        point: frequency,
        shots,
        seed,
        ci_low: frequency - eps,
        ci_high: frequency + eps,
        quantity: DerivedQuantity::Overlap,
    };
    Ok(frequency.affine(-2.0, 1.0, DerivedQuantity::Overlap))
}

/// All quantities derived from a single two-detector run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoDetectorRun {
    pub overlap: ShotEstimate,
    pub f_avg: ShotEstimate,
    pub lambda_min: ShotEstimate,
    pub f_opt: ShotEstimate,
    pub teleport_fidelity: ShotEstimate,
    /// `Tr(Ṽ)`, the factor between the state overlap and `F_avg`.
    pub v_tilde_trace: f64,
}

/// Prepares `Ṽ/Tr(Ṽ)` from the SPA-PT minimum eigenvector of `ρ`, interferes
/// it with `ρ̃` and derives every quantity from the one coincidence count.
pub fn run_two_detector(
    rho: &DensityMatrix,
    budget: ShotBudget,
    seed: u64,
) -> Result<TwoDetectorRun> {
    let min = min_eig_spa(rho)?;
    let v_tilde = build_v_tilde(&build_v(&min.vector)?)?;
    let trace = v_tilde.matrix.trace().re;
    let probe = v_tilde.normalized_state()?;

    let overlap = estimate_overlap(&probe, &min.spa, budget, seed)?;
    let f_avg = overlap.affine(trace, 0.0, DerivedQuantity::FAvg);
    let lambda_min = f_avg.affine(
        15.0 / 8.0,
        lambda_from_favg(0.0),
        DerivedQuantity::LambdaMin,
    );
    let f_opt = f_avg.affine(-135.0 / 8.0, f_opt_from_favg(0.0), DerivedQuantity::FOpt);
    let teleport_fidelity = f_opt.affine(2.0 / 3.0, 1.0 / 3.0, DerivedQuantity::TeleportFidelity);
    Ok(TwoDetectorRun {
        overlap,
        f_avg,
        lambda_min,
        f_opt,
        teleport_fidelity,
        v_tilde_trace: trace,
    })
}

pub fn estimate_favg(rho: &DensityMatrix, budget: ShotBudget, seed: u64) -> Result<ShotEstimate> {
    Ok(run_two_detector(rho, budget, seed)?.f_avg)
}

pub fn estimate_lambda_min(
    rho: &DensityMatrix,
    budget: ShotBudget,
    seed: u64,
) -> Result<ShotEstimate> {
    Ok(run_two_detector(rho, budget, seed)?.lambda_min)
}

pub fn estimate_f_opt_and_fidelity(
    rho: &DensityMatrix,
    budget: ShotBudget,
    seed: u64,
) -> Result<(ShotEstimate, ShotEstimate)> {
    let run = run_two_detector(rho, budget, seed)?;
    Ok((run.f_opt, run.teleport_fidelity))
}
