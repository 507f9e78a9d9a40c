use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use spa_singlet::homsim::{run_two_detector, ShotBudget, ShotEstimate, HOEFFDING_DELTA};
use spa_singlet::hybrid::HybridScan;
use spa_singlet::singlet::{f_opt_oracle, f_opt_spa, f_opt_via_filter_on_spa};
use spa_singlet::spa::{lim_decomposition, spa_pt_printed_deviation};
use spa_singlet::states::DensityMatrix;
use spa_singlet::witness::{
    build_v, build_v_tilde, build_w_opt, lambda_from_favg, min_eig_spa, v_tilde_psd_limit, verdict,
    V_TILDE_WEIGHT,
};

use crate::error::CliResult;

pub const TOOL: &str = "spa-singlet";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictLabel {
    Entangled,
    Separable,
}

/// Agreement between independent routes to the same number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residuals {
    /// `|Tr(W_opt ρ) - Tr(V ρ̃)|`
    pub witness_routes: f64,
    /// `|(15/8) F_avg - 47/72 - λ_min|`
    pub affine_chain: f64,
    /// `‖local decomposition - SPA-PT‖∞`
    pub local_decomposition: f64,
    /// filter overlap on `ρ̃` vs on `ρ^{T_B}`
    pub filter_on_spa: f64,
    /// `‖ρ̃ φ - λ_min φ‖∞`
    pub eigenpair: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        [
            self.witness_routes,
            self.affine_chain,
            self.local_decomposition,
            self.filter_on_spa,
            self.eigenpair,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Distance of the printed element-wise SPA-PT formulas from the channel.
    pub printed_spa_deviation: f64,
    pub v_tilde_min_eigenvalue: f64,
    /// Largest admissible mixing weight minus the one used.
    pub v_tilde_slack: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub point: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    /// Exact value for comparison.
    pub analytic: f64,
}

impl Interval {
    fn new(est: &ShotEstimate, analytic: f64) -> Self {
        Self {
            point: est.point,
            ci_low: est.ci_low,
            ci_high: est.ci_high,
            analytic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateBlock {
    /// `None` for the analytic arm.
    pub shots: Option<u64>,
    pub seed: u64,
    pub confidence: f64,
    pub v_tilde_trace: f64,
    pub overlap: Interval,
    pub f_avg: Interval,
    pub lambda_min: Interval,
    pub f_opt: Interval,
    pub teleport_fidelity: Interval,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool: String,
    pub version: String,
    pub input_sha256: Option<String>,
    pub verdict: VerdictLabel,
    pub lambda_min: f64,
    pub witness_value: f64,
    pub f_avg: f64,
    pub f_opt: f64,
    pub teleport_fidelity: f64,
    pub singlet_fraction: f64,
    /// `max(f_opt, singlet_fraction)`.
    pub f_opt_reported: f64,
    pub residuals: Residuals,
    pub diagnostics: Diagnostics,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimate: Option<EstimateBlock>,
}

impl AnalysisReport {
    pub fn entangled(&self) -> bool {
        self.verdict == VerdictLabel::Entangled
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let label = match self.verdict {
            VerdictLabel::Entangled => "entangled",
            VerdictLabel::Separable => "separable (no SPA-PT witness)",
        };
        let _ = writeln!(s, "verdict            {label}");
        let _ = writeln!(s, "lambda_min         {:.12}", self.lambda_min);
        let _ = writeln!(s, "witness value      {:.12}", self.witness_value);
        let _ = writeln!(s, "F_avg              {:.12}", self.f_avg);
        let _ = writeln!(s, "F_opt              {:.12}", self.f_opt);
        let _ = writeln!(s, "singlet fraction   {:.12}", self.singlet_fraction);
        let _ = writeln!(s, "teleport fidelity  {:.12}", self.teleport_fidelity);
        let _ = writeln!(s, "max residual       {:.3e}", self.residuals.max());
        if let Some(e) = &self.estimate {
            let shots = e
                .shots
                .map_or("analytic".to_string(), |n| format!("{n} shots"));
            let _ = writeln!(s, "estimate           {shots}, seed {}", e.seed);
            for (name, iv) in [
                ("overlap", &e.overlap),
                ("F_avg", &e.f_avg),
                ("lambda_min", &e.lambda_min),
                ("F_opt", &e.f_opt),
                ("teleport fidelity", &e.teleport_fidelity),
            ] {
                let _ = writeln!(
                    s,
                    "  {name:<19}{:.6}  [{:.6}, {:.6}]  exact {:.6}",
                    iv.point, iv.ci_low, iv.ci_high, iv.analytic
                );
            }
        }
        if let Some(d) = &self.input_sha256 {
            let _ = writeln!(s, "input sha256       {d}");
        }
        s
    }
}

pub fn analyze(rho: &DensityMatrix, input_sha256: Option<String>) -> CliResult<AnalysisReport> {
    let v = verdict(rho)?;
    let min = min_eig_spa(rho)?;
    let witness = build_v(&min.vector)?;
    let v_tilde = build_v_tilde(&witness)?;
    let f_avg = v_tilde.expectation(min.spa.matrix())?;
    let spa_route = f_opt_spa(rho, 1.0)?;

    let image = min.spa.matrix().mul_vec(min.vector.amplitudes())?;
    let eigenpair = image
        .iter()
        .zip(min.vector.amplitudes())
        .map(|(a, b)| (a - b * min.lambda_min).norm())
        .fold(0.0, f64::max);
    let residuals = Residuals {
        witness_routes: (build_w_opt(&min.vector)?.expectation(rho.matrix())? - v.witness_value)
            .abs(),
        affine_chain: (lambda_from_favg(f_avg) - v.lambda_min).abs(),
        local_decomposition: lim_decomposition(rho)?
            .matrix()
            .max_abs_diff(min.spa.matrix()),
        filter_on_spa: (f_opt_via_filter_on_spa(rho, 1.0)? - f_opt_oracle(rho, 1.0)?).abs(),
        eigenpair,
    };
    let diagnostics = Diagnostics {
        printed_spa_deviation: spa_pt_printed_deviation(rho)?,
        v_tilde_min_eigenvalue: v_tilde.eigenvalues()[0],
        v_tilde_slack: v_tilde_psd_limit(&witness)? - V_TILDE_WEIGHT,
    };
    Ok(AnalysisReport {
        tool: TOOL.to_string(),
        version: VERSION.to_string(),
        input_sha256,
        verdict: if v.entangled {
            VerdictLabel::Entangled
        } else {
            VerdictLabel::Separable
        },
        lambda_min: v.lambda_min,
        witness_value: v.witness_value,
        f_avg,
        f_opt: v.f_opt_singlet_fraction,
        teleport_fidelity: v.teleport_fidelity,
        singlet_fraction: spa_route.raw_singlet_fraction,
        f_opt_reported: spa_route.reported,
        residuals,
        diagnostics,
        estimate: None,
    })
}

pub fn estimate(
    rho: &DensityMatrix,
    input_sha256: Option<String>,
    budget: ShotBudget,
    seed: u64,
) -> CliResult<AnalysisReport> {
    let mut report = analyze(rho, input_sha256)?;
    let run = run_two_detector(rho, budget, seed)?;
    let exact = run_two_detector(rho, ShotBudget::Analytic, seed)?;
    report.estimate = Some(EstimateBlock {
        shots: run.overlap.shots,
        seed,
        confidence: 1.0 - HOEFFDING_DELTA,
        v_tilde_trace: run.v_tilde_trace,
        overlap: Interval::new(&run.overlap, exact.overlap.point),
        f_avg: Interval::new(&run.f_avg, exact.f_avg.point),
        lambda_min: Interval::new(&run.lambda_min, exact.lambda_min.point),
        f_opt: Interval::new(&run.f_opt, exact.f_opt.point),
        teleport_fidelity: Interval::new(&run.teleport_fidelity, exact.teleport_fidelity.point),
    });
    Ok(report)
}

/// `x` with 12 significant digits in positional notation.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{:.11}", x + 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub const SCAN_HEADER: &str = "p,theta,f_opt,teleport_fidelity,entangled";

pub fn scan_csv(scan: &HybridScan) -> String {
    let mut s = String::from(SCAN_HEADER);
    s.push('\n');
    for r in &scan.rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            sig12(r.p),
            sig12(r.theta),
            sig12(r.f_opt),
            sig12(r.teleport_fidelity),
            r.entangled
        );
    }
    let _ = writeln!(
        s,
        "# decreasing_in_p={} increasing_in_theta={} interior_useful={}",
        scan.decreasing_in_p, scan.increasing_in_theta, scan.interior_useful
    );
    s
}
