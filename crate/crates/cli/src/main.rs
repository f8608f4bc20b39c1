//! `thetaxi`: evaluation, functional-equation sweeps and convergence studies
//! for the Mellin transforms of weight-1/2 meromorphic theta-group forms.

mod commands;
mod config;
mod error;
mod output;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::Overrides;
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "thetaxi",
    version,
    about = "Generalized theta L-functions and their limit to ξ"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Emit JSON lines instead of CSV.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// key = value settings file (overridden by THETAXI_* variables and flags).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Split point between the middle quadrature pieces.
    #[arg(long, global = true)]
    t0: Option<f64>,
    #[arg(long, global = true)]
    max_subdivisions: Option<usize>,
    /// bound-truncation or termwise-gamma.
    #[arg(long, global = true)]
    tail_mode: Option<String>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one quantity at one point.
    Eval(EvalArgs),
    /// Sweep the residual |F_z(s) − F_z(1/2 − s)| over poles and s values.
    CheckFunctional(CheckArgs),
    /// Corrected F_z against ξ(2s) along a sequence of pole heights.
    Converge(ConvergeArgs),
    /// Reduce points into the fundamental domain of the theta group.
    Reduce(ReduceArgs),
    /// Run the invariant suites at reduced size.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Theta,
    Lambda,
    Jtheta,
    Hz,
    #[value(name = "F")]
    F,
    Xi,
    #[value(name = "xi_theta")]
    XiTheta,
}

#[derive(Debug, Args)]
struct EvalArgs {
    target: Target,
    /// Pole location z = x + iy.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Pole location; repeatable. Defaults to twelve reduced points.
    #[arg(long, allow_hyphen_values = true)]
    z: Vec<String>,
    /// Spectral parameter; repeatable.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "grid")]
    s: Vec<String>,
    /// s grid as `σlo:σhi:n,tlo:thi:m`. Defaults to -1.5:2:9,-5:5:9.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long, default_value_t = 1e-6)]
    threshold: f64,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    /// Comma-separated pole abscissae.
    #[arg(long, allow_hyphen_values = true, default_value = "0.25,0.5")]
    x: String,
    /// Spectral parameter; repeatable. Defaults to 0.3, 0.75 and 0.6+2i.
    #[arg(long, allow_hyphen_values = true)]
    s: Vec<String>,
    /// Comma-separated, strictly increasing pole heights.
    #[arg(long, default_value = "5,10,20,40")]
    y_list: String,
    /// Largest admissible final error.
    #[arg(long, default_value_t = 1e-3)]
    threshold: f64,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    /// Point in the upper half-plane; repeatable.
    #[arg(long, allow_hyphen_values = true, required = true)]
    z: Vec<String>,
}

#[derive(Debug, Args)]
struct SelftestArgs {
    /// Multiplier on every suite tolerance; 0 makes every suite fail.
    #[arg(long, default_value_t = 1.0)]
    tolerance: f64,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    let overrides = Overrides {
        abs_tol: g.abs_tol,
        rel_tol: g.rel_tol,
        t0: g.t0,
        max_subdivisions: g.max_subdivisions,
        tail_mode: g.tail_mode.clone(),
        jobs: g.jobs,
        seed: g.seed,
        config: g.config.clone(),
    };
    let ctx = commands::Context {
        settings: config::resolve(&overrides)?,
        json: g.json,
        out: g.out.clone(),
    };
    match cli.command {
        Command::Eval(a) => commands::eval::run(
            &ctx,
            a.target,
            a.z.as_deref(),
            a.s.as_deref(),
            a.tau.as_deref(),
        ),
        Command::CheckFunctional(a) => {
            commands::sweep::run(&ctx, &a.z, &a.s, a.grid.as_deref(), a.threshold)
        }
        Command::Converge(a) => commands::converge::run(&ctx, &a.x, &a.s, &a.y_list, a.threshold),
        Command::Reduce(a) => commands::reduce::run(&ctx, &a.z),
        Command::Selftest(a) => commands::selftest::run(&ctx, a.tolerance),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(e.exit_code())
        }
    }
}
