//! Command-line front end: `simulate`, `enumerate`, `sweep` and `verify`.
//!
//! Exit codes: 0 stable run or confirmed claim, 1 operational error, 2 cycle,
//! 3 iteration cap, 4 refuted claim.

pub mod config;
pub mod output;
pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::analysis::{
    check_theorem1_exhaustive, check_window, enumerate_stable, sweep_ratio, theorem1_threshold,
    verify_nonuniqueness, verify_regime_claim, ExpectedKind, Outcome, RatioGrid, SweepReport,
};
use crate::dynamics::{run_dynamics, DynamicsStatus, DynamicsTrace};

pub use config::{parse_config, ConfigError, RunConfig, StartSpec};
use report::{ClaimDetails, EnumerateReport, SimulateReport, Verdict, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_CYCLE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_REFUTED: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Config { path: PathBuf, source: ConfigError },
    #[error(transparent)]
    Model(#[from] crate::Error),
    #[error("serializing report: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "f2f-formation",
    version,
    about = "Friend-to-friend backup network formation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON run configuration.
    #[arg(long)]
    pub config: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Override the random-start and shuffled-order seeds.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0.01)]
    pub grid_start: f64,
    #[arg(long, default_value_t = 0.12)]
    pub grid_end: f64,
    #[arg(long, default_value_t = 0.001)]
    pub grid_step: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    Theorem1,
    Lemma1,
    Lemma2,
    Corollary1,
    Window,
    Nonuniqueness,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the pair dynamics from the configured start.
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Write the final network as a Graphviz graph.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the final network as an edge list.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// List every bilaterally stable network.
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Count stable networks over a grid of c/β values (CSV).
    Sweep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Check one structural claim against exhaustive enumeration.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        claim: Claim,
        #[command(flatten)]
        grid: GridArgs,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn load_config(common: &Common) -> Result<RunConfig, CliError> {
    let cfg = parse_config(&read(&common.config)?).map_err(|source| CliError::Config {
        path: common.config.clone(),
        source,
    })?;
    Ok(match common.seed {
        Some(seed) => cfg.with_seed(seed),
        None => cfg,
    })
}

pub fn simulate(cfg: &RunConfig) -> crate::Result<DynamicsTrace> {
    run_dynamics(
        &cfg.start_network()?,
        &cfg.matrix,
        &cfg.params,
        cfg.pair_order,
        cfg.max_passes,
    )
}

pub fn status_exit_code(status: &DynamicsStatus) -> i32 {
    match status {
        DynamicsStatus::Stable => EXIT_OK,
        DynamicsStatus::Cycle { .. } => EXIT_CYCLE,
        DynamicsStatus::IterationCap => EXIT_CAP,
    }
}

pub fn sweep(cfg: &RunConfig, grid: &GridArgs) -> crate::Result<SweepReport> {
    let grid = RatioGrid::new(grid.grid_start, grid.grid_end, grid.grid_step)?;
    sweep_ratio(&cfg.matrix, cfg.params.lambda(), &grid, cfg.params.beta())
}

/// Evaluates `claim` on the configured matrix and parameters. The window
/// claim sweeps `c/β` over `grid` with the configured β as anchor.
pub fn verify(cfg: &RunConfig, claim: Claim, grid: &GridArgs) -> crate::Result<VerifyReport> {
    let regime = |kind| verify_regime_claim(kind, cfg.n, &cfg.matrix, &cfg.params);
    let (verdict, details) = match claim {
        Claim::Theorem1 => {
            let threshold = theorem1_threshold(&cfg.params)?;
            let s = check_theorem1_exhaustive(&cfg.params, &cfg.matrix)?;
            let verdict = if s.failures == 0 {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            };
            (verdict, report::theorem1_details(threshold, &s))
        }
        Claim::Lemma1 | Claim::Lemma2 => {
            let kind = if claim == Claim::Lemma1 {
                ExpectedKind::Complete
            } else {
                ExpectedKind::Empty
            };
            let check = regime(kind)?;
            let verdict = if check.outcome == Outcome::Confirmed {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            };
            let record = (&check).into();
            let details = if claim == Claim::Lemma1 {
                ClaimDetails::Lemma1(record)
            } else {
                ClaimDetails::Lemma2(record)
            };
            (verdict, details)
        }
        Claim::Corollary1 => {
            let check = regime(ExpectedKind::EnemyPairs)?;
            let verdict = if check.outcome == Outcome::Refuted {
                Verdict::Refuted
            } else {
                Verdict::Confirmed
            };
            (verdict, ClaimDetails::Corollary1((&check).into()))
        }
        Claim::Window => {
            let report = sweep(cfg, grid)?;
            let check = check_window(&report);
            let verdict = if check.confirmed() {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            };
            (
                verdict,
                report::window_details(&check, report.zero_runs(), report.unsettled_runs()),
            )
        }
        Claim::Nonuniqueness => {
            let (holds, set) = verify_nonuniqueness(&cfg.matrix, &cfg.params)?;
            let verdict = if holds {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            };
            let listed = EnumerateReport::from(&set);
            (
                verdict,
                ClaimDetails::Nonuniqueness {
                    stable_count: listed.stable_count,
                    stable_networks: listed.stable_networks,
                },
            )
        }
    };
    Ok(VerifyReport {
        verdict,
        params: (&cfg.params).into(),
        details,
    })
}

/// Executes one parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Simulate { common, dot, edges } => {
            let cfg = load_config(common)?;
            let trace = simulate(&cfg)?;
            if let Some(path) = dot {
                write(path, &output::write_dot(&trace.final_network, &cfg.matrix))?;
            }
            if let Some(path) = edges {
                write(path, &output::write_edge_list(&trace.final_network))?;
            }
            emit(
                common.out.as_deref(),
                &to_json(&SimulateReport::from_trace(&trace))?,
            )?;
            Ok(status_exit_code(&trace.status))
        }
        Command::Enumerate { common } => {
            let cfg = load_config(common)?;
            let set = enumerate_stable(cfg.n, &cfg.matrix, &cfg.params)?;
            emit(
                common.out.as_deref(),
                &to_json(&EnumerateReport::from(&set))?,
            )?;
            Ok(EXIT_OK)
        }
        Command::Sweep { common, grid } => {
            let cfg = load_config(common)?;
            emit(
                common.out.as_deref(),
                &output::write_sweep_csv(&sweep(&cfg, grid)?),
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            common,
            claim,
            grid,
        } => {
            let cfg = load_config(common)?;
            let report = verify(&cfg, *claim, grid)?;
            emit(common.out.as_deref(), &to_json(&report)?)?;
            Ok(match report.verdict {
                Verdict::Confirmed => EXIT_OK,
                Verdict::Refuted => EXIT_REFUTED,
            })
        }
    }
}
