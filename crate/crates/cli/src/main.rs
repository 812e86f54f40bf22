//! `afpde` - drive the active flux parabolic solver: benchmark runs,
//! convergence studies, 1D maximum-CFL searches, and 2D stability region
//! scans. CSV outputs only; exit codes: 0 success, 1 configuration error,
//! 2 numerical abort.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{
    cmd_cfl1d, cmd_converge, cmd_region2d, cmd_run, Cfl1dSettings, CliError, ConvergeSettings,
    Region2dSettings, RunSettings,
};
use config::{
    default_outdir, merge, parse_list, parse_on_off, parse_problem, parse_rk, parse_thetas,
    parse_variant, ConfigError, FileConfig,
};

#[derive(Parser)]
#[command(name = "afpde", version, about = "Fourth-order active flux solver for parabolic problems")]
struct Cli {
    /// Plain-text `key = value` config file; command-line flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate one benchmark problem and write solution snapshots.
    Run(RunArgs),
    /// Mesh-refinement study against the exact solution.
    Converge(ConvergeArgs),
    /// Search the maximum stable CFL number of a 1D variant.
    Cfl1d(Cfl1dArgs),
    /// Scan the 2D (nu_a, nu_b) stability region per rotation angle.
    Region2d(Region2dArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Problem id: accuracy1d | accuracy2d | ring | barenblatt |
    /// two-boxes-equal | two-boxes-unequal | waiting-time | two-hills.
    #[arg(long)]
    problem: Option<String>,
    /// Porous-medium exponent (barenblatt only).
    #[arg(long)]
    m: Option<u32>,
    /// Cells per direction (problem default when omitted).
    #[arg(long)]
    n: Option<usize>,
    /// Cells in y (2D problems; defaults to --n).
    #[arg(long)]
    ny: Option<usize>,
    /// CFL number (default 0.27 in 1D, 0.15 in 2D).
    #[arg(long)]
    cfl: Option<f64>,
    /// Final time (problem default when omitted).
    #[arg(long)]
    tfinal: Option<f64>,
    /// Point-update variant: central4 | alternating4 | central3 | alternating3.
    #[arg(long)]
    variant: Option<String>,
    /// Runge-Kutta order: 3 (SSP) or 4 (classical; analysis only).
    #[arg(long)]
    rk: Option<u32>,
    /// Positivity limiter: on | off (default on for porous-medium problems).
    #[arg(long)]
    limiter: Option<String>,
    /// Comma-separated intermediate snapshot times.
    #[arg(long)]
    snapshots: Option<String>,
    /// Output directory (default "out").
    #[arg(long)]
    outdir: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergeArgs {
    /// Problem with an exact solution: accuracy1d | accuracy2d | barenblatt.
    #[arg(long)]
    problem: Option<String>,
    /// Porous-medium exponent (barenblatt only).
    #[arg(long)]
    m: Option<u32>,
    /// Comma-separated mesh sizes (successive doublings).
    #[arg(long)]
    meshes: Option<String>,
    #[arg(long)]
    cfl: Option<f64>,
    #[arg(long)]
    tfinal: Option<f64>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    rk: Option<u32>,
    #[arg(long)]
    outdir: Option<PathBuf>,
}

#[derive(Args)]
struct Cfl1dArgs {
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    rk: Option<u32>,
    /// Uniform symbol samples in [-pi, pi] (>= 400).
    #[arg(long)]
    samples: Option<usize>,
    /// CFL grid resolution.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    outdir: Option<PathBuf>,
}

#[derive(Args)]
struct Region2dArgs {
    #[arg(long)]
    rk: Option<u32>,
    /// Grid spacing of the (nu_a, nu_b) scan.
    #[arg(long)]
    step: Option<f64>,
    /// Largest scanned nu value.
    #[arg(long)]
    max: Option<f64>,
    /// Comma-separated rotation angles (radians or pi/K).
    #[arg(long)]
    thetas: Option<String>,
    /// Symbol samples per axis (default 32; 10 gives the coarser scan).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    outdir: Option<PathBuf>,
}

fn load_file(path: Option<&PathBuf>, keys: &[&str]) -> Result<FileConfig, ConfigError> {
    match path {
        None => Ok(FileConfig::empty()),
        Some(p) => FileConfig::load(p, keys),
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(a) => {
            let file = load_file(
                cli.config.as_ref(),
                &[
                    "problem", "m", "n", "ny", "cfl", "tfinal", "variant", "rk", "limiter",
                    "snapshots", "outdir",
                ],
            )?;
            let problem_name = merge(a.problem, &file, "problem")?
                .ok_or(ConfigError("run requires --problem".into()))?;
            let m = merge(a.m, &file, "m")?;
            let id = parse_problem(&problem_name, m)?;
            let variant = merge(a.variant, &file, "variant")?
                .map(|v| parse_variant(&v))
                .transpose()?
                .unwrap_or(af_core::SchemeVariant::Central4);
            let rk = parse_rk(merge(a.rk, &file, "rk")?.unwrap_or(3))?;
            let limiter = merge(a.limiter, &file, "limiter")?
                .map(|v| parse_on_off(&v))
                .transpose()?;
            let snapshots = match merge(a.snapshots, &file, "snapshots")? {
                Some(raw) => parse_list::<f64>(&raw, "snapshot time")?,
                None => Vec::new(),
            };
            cmd_run(RunSettings {
                id,
                n: merge(a.n, &file, "n")?,
                ny: merge(a.ny, &file, "ny")?,
                cfl: merge(a.cfl, &file, "cfl")?,
                t_final: merge(a.tfinal, &file, "tfinal")?,
                variant,
                rk,
                limiter,
                snapshots,
                outdir: merge(a.outdir, &file, "outdir")?.unwrap_or_else(default_outdir),
            })
        }
        Command::Converge(a) => {
            let file = load_file(
                cli.config.as_ref(),
                &["problem", "m", "meshes", "cfl", "tfinal", "variant", "rk", "outdir"],
            )?;
            let problem_name = merge(a.problem, &file, "problem")?
                .ok_or(ConfigError("converge requires --problem".into()))?;
            let m = merge(a.m, &file, "m")?;
            let id = parse_problem(&problem_name, m)?;
            let variant = merge(a.variant, &file, "variant")?
                .map(|v| parse_variant(&v))
                .transpose()?
                .unwrap_or(af_core::SchemeVariant::Central4);
            let rk = parse_rk(merge(a.rk, &file, "rk")?.unwrap_or(3))?;
            let meshes = match merge(a.meshes, &file, "meshes")? {
                Some(raw) => Some(parse_list::<usize>(&raw, "mesh size")?),
                None => None,
            };
            cmd_converge(ConvergeSettings {
                id,
                meshes,
                cfl: merge(a.cfl, &file, "cfl")?,
                t_final: merge(a.tfinal, &file, "tfinal")?,
                variant,
                rk,
                outdir: merge(a.outdir, &file, "outdir")?.unwrap_or_else(default_outdir),
            })
        }
        Command::Cfl1d(a) => {
            let file = load_file(
                cli.config.as_ref(),
                &["variant", "rk", "samples", "tol", "outdir"],
            )?;
            let variant = merge(a.variant, &file, "variant")?
                .map(|v| parse_variant(&v))
                .transpose()?
                .unwrap_or(af_core::SchemeVariant::Central4);
            let rk = parse_rk(merge(a.rk, &file, "rk")?.unwrap_or(3))?;
            cmd_cfl1d(Cfl1dSettings {
                variant,
                rk,
                samples: merge(a.samples, &file, "samples")?.unwrap_or(400),
                tol: merge(a.tol, &file, "tol")?.unwrap_or(0.005),
                outdir: merge(a.outdir, &file, "outdir")?.unwrap_or_else(default_outdir),
            })
        }
        Command::Region2d(a) => {
            let file = load_file(
                cli.config.as_ref(),
                &["rk", "step", "max", "thetas", "samples", "outdir"],
            )?;
            let rk = parse_rk(merge(a.rk, &file, "rk")?.unwrap_or(3))?;
            let thetas = match merge(a.thetas, &file, "thetas")? {
                Some(raw) => parse_thetas(&raw)?,
                None => parse_thetas("0,pi/12,pi/6,pi/4").expect("default angles"),
            };
            cmd_region2d(Region2dSettings {
                rk,
                step: merge(a.step, &file, "step")?.unwrap_or(0.01),
                max: merge(a.max, &file, "max")?.unwrap_or(0.3),
                thetas,
                samples: merge(a.samples, &file, "samples")?.unwrap_or(32),
                outdir: merge(a.outdir, &file, "outdir")?.unwrap_or_else(default_outdir),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error (exit 1).
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `afpde --help` for usage");
            ExitCode::from(1)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("numerical abort: {msg}");
            ExitCode::from(2)
        }
    }
}
