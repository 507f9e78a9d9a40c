//! `spa-singlet` command-line front end.
//!
//! Exit codes: 0 success (or separable verdict), 3 entangled verdict,
//! 2 usage error, 1 runtime error.

// Range checks are written as `!(x <= tol)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod grid;
pub mod report;
pub mod state_file;

use std::f64::consts::FRAC_PI_4;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use spa_singlet::homsim::ShotBudget;
use spa_singlet::hybrid::hybrid_scan;
use spa_singlet::spa::{spa_pt, spa_pt_printed, spa_pt_printed_deviation};
use spa_singlet::states::{
    bell_density, make_werner, product_state, random_density, random_density_of_dim, Bell,
    DensityMatrix,
};

pub use error::{CliError, CliResult, EXIT_ENTANGLED, EXIT_OK, EXIT_RUNTIME, EXIT_USAGE};
pub use report::AnalysisReport;
pub use state_file::{parse_state_file, StateFile};

pub const SEED_ENV: &str = "SPA_SINGLET_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "spa-singlet",
    version,
    about = "Two-qubit entanglement and teleportation analysis through the SPA of the partial transpose"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact analysis of a state file; exits 3 when the state is entangled.
    Analyze(AnalyzeArgs),
    /// Shot-based estimate from the two-detector overlap measurement.
    Estimate(EstimateArgs),
    /// Optimal singlet fraction of the damped qubit/BCS resource over a grid, as CSV.
    HybridScan(ScanArgs),
    /// Write a state file.
    Generate(GenerateArgs),
    /// Dump the SPA-PT output of a state as a state file.
    Spa(SpaArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    pub state: PathBuf,
    /// Plain-text summary instead of JSON.
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    pub state: PathBuf,
    #[arg(long, required_unless_present = "analytic", value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: Option<u64>,
    /// Use exact probabilities instead of sampling.
    #[arg(long, conflicts_with = "shots")]
    pub analytic: bool,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub text: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Damping probabilities, `start:end:step` or a single value.
    #[arg(long, default_value = "0:1:0.1")]
    pub p_grid: String,
    /// Angles in radians; `pi` tokens such as `pi/16` are accepted.
    #[arg(long, default_value = "pi/64:pi/4:pi/64")]
    pub theta_grid: String,
    /// Output path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Bell,
    Werner,
    Random,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BellArg {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl From<BellArg> for Bell {
    fn from(b: BellArg) -> Self {
        match b {
            BellArg::PsiPlus => Bell::PsiPlus,
            BellArg::PsiMinus => Bell::PsiMinus,
            BellArg::PhiPlus => Bell::PhiPlus,
            BellArg::PhiMinus => Bell::PhiMinus,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long = "type", value_enum)]
    pub kind: StateKind,
    #[arg(long, value_enum, default_value = "psi-minus")]
    pub which: BellArg,
    /// Singlet weight of a Werner state.
    #[arg(long)]
    pub w: Option<f64>,
    /// Rank of a random state.
    #[arg(long, default_value_t = 4)]
    pub rank: usize,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpaArgs {
    pub state: PathBuf,
    /// Use the printed element-wise formulas; their distance from the
    /// channel output goes to stderr.
    #[arg(long)]
    pub literal: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

pub fn generate(args: &GenerateArgs) -> CliResult<DensityMatrix> {
    Ok(match args.kind {
        StateKind::Bell => bell_density(args.which.into()),
        StateKind::Werner => {
            let w = args
                .w
                .ok_or_else(|| CliError::Usage("--type werner needs --w".into()))?;
            make_werner(w).map_err(|e| CliError::Usage(e.to_string()))?
        }
        StateKind::Random => {
            random_density(args.seed, args.rank).map_err(|e| CliError::Usage(e.to_string()))?
        }
        StateKind::Product => {
            let a = random_density_of_dim(2, 2, args.seed.wrapping_mul(2))?;
            let b = random_density_of_dim(2, 2, args.seed.wrapping_mul(2).wrapping_add(1))?;
            product_state(&a, &b)?
        }
    })
}

fn scan_grids(args: &ScanArgs) -> CliResult<(Vec<f64>, Vec<f64>)> {
    let ps = grid::parse_grid(&args.p_grid)?;
    let thetas = grid::parse_grid(&args.theta_grid)?;
    if let Some(p) = ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(CliError::Usage(format!("p = {p} is outside [0, 1]")));
    }
    if let Some(t) = thetas
        .iter()
        .find(|t| !(**t > 0.0 && **t <= FRAC_PI_4 + 1e-12))
    {
        return Err(CliError::Usage(format!("theta = {t} is outside (0, pi/4]")));
    }
    Ok((ps, thetas))
}

/// Runs one parsed command, writing its primary output to `out`, and
/// returns the exit code for a successful run.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<u8> {
    match &cli.command {
        Command::Analyze(a) => {
            let loaded = parse_state_file(&a.state)?;
            let report = report::analyze(&loaded.state, Some(loaded.sha256))?;
            let text = if a.text {
                report.to_text()
            } else {
                report.to_json() + "\n"
            };
            emit(out, None, &text)?;
            Ok(if report.entangled() {
                EXIT_ENTANGLED
            } else {
                EXIT_OK
            })
        }
        Command::Estimate(a) => {
            let loaded = parse_state_file(&a.state)?;
            let budget = match a.shots {
                Some(n) if !a.analytic => ShotBudget::Shots(n),
                _ => ShotBudget::Analytic,
            };
            let report = report::estimate(&loaded.state, Some(loaded.sha256), budget, a.seed)?;
            let text = if a.text {
                report.to_text()
            } else {
                report.to_json() + "\n"
            };
            emit(out, None, &text)?;
            Ok(EXIT_OK)
        }
        Command::HybridScan(a) => {
            let (ps, thetas) = scan_grids(a)?;
            let scan = hybrid_scan(&ps, &thetas)?;
            emit(out, a.out.as_deref(), &report::scan_csv(&scan))?;
            Ok(EXIT_OK)
        }
        Command::Generate(a) => {
            let rho = generate(a)?;
            emit(out, a.out.as_deref(), &state_file::render_state(&rho))?;
            Ok(EXIT_OK)
        }
        Command::Spa(a) => {
            let loaded = parse_state_file(&a.state)?;
            let text = if a.literal {
                eprintln!(
                    "printed-formula deviation from the SPA-PT channel: {:e}",
                    spa_pt_printed_deviation(&loaded.state)?
                );
                StateFile::from_matrix(&spa_pt_printed(&loaded.state)?).to_json()
            } else {
                state_file::render_state(&spa_pt(&loaded.state)?)
            };
            emit(out, a.out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}
