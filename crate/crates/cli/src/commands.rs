//! Subcommand implementations.

use std::path::{Path, PathBuf};

use af_core::grid::{Grid1D, Grid2D};
use af_core::norms::ConvergenceRow;
use af_core::operators::SchemeVariant;
use af_core::problems::{convergence_study, problem, Problem1D, Problem2D, ProblemId, ProblemSetup};
use af_core::project::{project_initial_1d, project_initial_2d};
use af_core::stability::{max_cfl_1d, stability_region_2d};
use af_core::time::{advance_with, Driver1D, Driver2D, RkScheme, StepControl};

use crate::config::{nu_grid, ConfigError};
use crate::output::{
    fmt_f64, json_str, write_cfl1d_csv, write_converge_csv, write_meta, write_region_csv,
    write_solution_csv_1d, write_solution_csv_2d, write_trace_csv, TraceRow,
};

/// CLI failure classes; the process exit code follows the class.
pub enum CliError {
    /// Bad flags, config file, or problem setup (exit 1).
    Config(String),
    /// Numerical abort: instability or positivity violation (exit 2).
    Numerical(String),
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.0)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(format!("i/o failure: {e}"))
    }
}

impl From<af_core::Error> for CliError {
    fn from(e: af_core::Error) -> Self {
        match e {
            af_core::Error::UnstableAbort { .. }
            | af_core::Error::PositivityViolated { .. }
            | af_core::Error::RootFindingFailed(_) => CliError::Numerical(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

fn ensure_outdir(outdir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(outdir)
        .map_err(|e| CliError::Config(format!("cannot create {}: {e}", outdir.display())))
}

fn snapshot_name(t: f64) -> String {
    format!("solution_t{t:.6}.csv")
}

fn bc_name(bc: af_core::BoundaryCondition) -> String {
    match bc {
        af_core::BoundaryCondition::Periodic => "periodic".into(),
        af_core::BoundaryCondition::FarField(c) => format!("far-field({c})"),
    }
}

const DT_POLICY_NOTE: &str = "dt policy: C*dx^2/a_max in 1D and C/(rho(A)*max(dx^-2,dy^-2)) in 2D, \
    intersected with the positivity bound when the limiter is on; a_max/rho scan point DoFs and \
    clipped Simpson cell centers for the power-law coefficient; the final step truncates to land \
    on t_final exactly";
const BC_NOTE: &str = "far-field ghosts: constant solution fill, zero gradient and flux fill; \
    periodic ghosts wrap";
const NORM_NOTE: &str = "norms: discrete L1/L2/Linf; average errors against quadrature cell \
    means, point errors against samples";
const LIMITER_NOTE: &str = "limiter: parametrized flux blending per forward-Euler stage plus \
    point clipping; SSP-RK3 stages are convex combinations";

/// `run`: integrate one problem, write solution snapshots, a per-step trace,
/// and the metadata block.
#[allow(clippy::too_many_arguments)]
pub struct RunSettings {
    pub id: ProblemId,
    pub n: Option<usize>,
    pub ny: Option<usize>,
    pub cfl: Option<f64>,
    pub t_final: Option<f64>,
    pub variant: SchemeVariant,
    pub rk: RkScheme,
    pub limiter: Option<bool>,
    pub snapshots: Vec<f64>,
    pub outdir: PathBuf,
}

pub fn cmd_run(s: RunSettings) -> Result<(), CliError> {
    ensure_outdir(&s.outdir)?;
    match problem(s.id) {
        ProblemSetup::OneD(p) => run_1d(&p, &s),
        ProblemSetup::TwoD(p) => run_2d(&p, &s),
    }
}

fn segment_ends(t_start: f64, t_final: f64, snapshots: &[f64]) -> Vec<f64> {
    let mut ends: Vec<f64> = snapshots
        .iter()
        .copied()
        .filter(|t| *t > t_start && *t < t_final)
        .collect();
    ends.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ends.dedup();
    ends.push(t_final);
    ends
}

fn run_1d(p: &Problem1D, s: &RunSettings) -> Result<(), CliError> {
    let n = s.n.unwrap_or(p.default_n);
    if s.ny.is_some() {
        return Err(CliError::Config("--ny only applies to 2D problems".into()));
    }
    let cfl = s.cfl.unwrap_or(p.default_cfl);
    let t_final = s.t_final.unwrap_or(p.default_t_final);
    let limiter = s.limiter.unwrap_or(p.limiter_default);

    let grid = Grid1D::new(p.x_min, p.x_max, n)?;
    let mut state = project_initial_1d(&grid, &p.initial, p.bc)?;
    let driver = Driver1D::new(&grid, &p.coeff, s.variant, p.bc)?;

    let mut trace = Vec::new();
    let mut t = p.t_start;
    let mut step0 = 0usize;
    write_solution_csv_1d(&state, &grid, &s.outdir.join(snapshot_name(t)))?;
    for end in segment_ends(p.t_start, t_final, &s.snapshots) {
        let control = StepControl {
            cfl_number: cfl,
            t_final: end,
            limiter_enabled: limiter,
        };
        let (out, stats) = advance_with(
            &driver,
            state,
            t,
            &control,
            s.rk,
            |step, t_new, dt, u| {
                let min_pnt = u.points.iter().copied().fold(f64::INFINITY, f64::min);
                let min_avg = u.averages.iter().copied().fold(f64::INFINITY, f64::min);
                trace.push(TraceRow {
                    step: step0 + step,
                    t: t_new,
                    dt,
                    min_avg,
                    min_pnt,
                    mass: u.mass(&grid),
                });
            },
        )?;
        state = out;
        t = end;
        step0 += stats.steps;
        write_solution_csv_1d(&state, &grid, &s.outdir.join(snapshot_name(t)))?;
    }
    write_trace_csv(&trace, &s.outdir.join("trace.csv"))?;
    write_meta(
        &[
            ("command", json_str("run")),
            ("problem", json_str(&s.id.name())),
            ("n", n.to_string()),
            ("cfl", fmt_f64(cfl)),
            ("t_start", fmt_f64(p.t_start)),
            ("t_final", fmt_f64(t_final)),
            ("variant", json_str(s.variant.name())),
            ("rk", s.rk.order().to_string()),
            ("limiter", limiter.to_string()),
            ("bc", json_str(&bc_name(p.bc))),
            ("steps", step0.to_string()),
        ],
        &[DT_POLICY_NOTE, BC_NOTE, NORM_NOTE, LIMITER_NOTE],
        &s.outdir.join("meta.json"),
    )?;
    Ok(())
}

fn run_2d(p: &Problem2D, s: &RunSettings) -> Result<(), CliError> {
    let n = s.n.unwrap_or(p.default_n);
    let ny = s.ny.unwrap_or(n);
    let cfl = s.cfl.unwrap_or(p.default_cfl);
    let t_final = s.t_final.unwrap_or(p.default_t_final);
    let limiter = s.limiter.unwrap_or(p.limiter_default);
    if s.variant != SchemeVariant::Central4 {
        return Err(CliError::Config(
            "2D problems support only the central4 variant".into(),
        ));
    }

    let grid = Grid2D::new(p.x_min, p.x_max, p.y_min, p.y_max, n, ny)?;
    let mut state = project_initial_2d(&grid, &p.initial, p.bc)?;
    let driver = Driver2D::new(&grid, &p.coeff, p.bc)?;

    let mut trace = Vec::new();
    let mut t = p.t_start;
    let mut step0 = 0usize;
    write_solution_csv_2d(&state, &grid, p.bc, &s.outdir.join(snapshot_name(t)))?;
    for end in segment_ends(p.t_start, t_final, &s.snapshots) {
        let control = StepControl {
            cfl_number: cfl,
            t_final: end,
            limiter_enabled: limiter,
        };
        let (out, stats) = advance_with(
            &driver,
            state,
            t,
            &control,
            s.rk,
            |step, t_new, dt, u| {
                let min_avg = u.averages.iter().copied().fold(f64::INFINITY, f64::min);
                let min_pnt = u
                    .face_x
                    .iter()
                    .chain(&u.face_y)
                    .chain(&u.corners)
                    .copied()
                    .fold(f64::INFINITY, f64::min);
                trace.push(TraceRow {
                    step: step0 + step,
                    t: t_new,
                    dt,
                    min_avg,
                    min_pnt,
                    mass: u.mass(&grid),
                });
            },
        )?;
        state = out;
        t = end;
        step0 += stats.steps;
        write_solution_csv_2d(&state, &grid, p.bc, &s.outdir.join(snapshot_name(t)))?;
    }
    write_trace_csv(&trace, &s.outdir.join("trace.csv"))?;
    write_meta(
        &[
            ("command", json_str("run")),
            ("problem", json_str(&s.id.name())),
            ("n", n.to_string()),
            ("ny", ny.to_string()),
            ("cfl", fmt_f64(cfl)),
            ("t_start", fmt_f64(p.t_start)),
            ("t_final", fmt_f64(t_final)),
            ("variant", json_str(s.variant.name())),
            ("rk", s.rk.order().to_string()),
            ("limiter", limiter.to_string()),
            ("bc", json_str(&bc_name(p.bc))),
            ("steps", step0.to_string()),
        ],
        &[DT_POLICY_NOTE, BC_NOTE, NORM_NOTE, LIMITER_NOTE],
        &s.outdir.join("meta.json"),
    )?;
    Ok(())
}

pub struct ConvergeSettings {
    pub id: ProblemId,
    pub meshes: Option<Vec<usize>>,
    pub cfl: Option<f64>,
    pub t_final: Option<f64>,
    pub variant: SchemeVariant,
    pub rk: RkScheme,
    pub outdir: PathBuf,
}

pub fn cmd_converge(s: ConvergeSettings) -> Result<(), CliError> {
    ensure_outdir(&s.outdir)?;
    let (default_meshes, default_cfl, default_t): (&[usize], f64, f64) = match s.id {
        ProblemId::Accuracy1D => (&[20, 40, 80, 160], 0.27, 1.0),
        ProblemId::Accuracy2D => (&[10, 20, 40, 80], 0.15, 1.0),
        ProblemId::Barenblatt(_) => (&[50, 100, 200], 0.27, 2.0),
        other => {
            return Err(CliError::Config(format!(
                "{} has no exact solution for a convergence study",
                other.name()
            )))
        }
    };
    let meshes = s.meshes.unwrap_or_else(|| default_meshes.to_vec());
    let cfl = s.cfl.unwrap_or(default_cfl);
    let t_final = s.t_final.unwrap_or(default_t);
    let rows: Vec<ConvergenceRow> =
        convergence_study(s.id, &meshes, cfl, t_final, s.variant, s.rk)?;
    write_converge_csv(&rows, &s.outdir.join("converge.csv"))?;
    write_meta(
        &[
            ("command", json_str("converge")),
            ("problem", json_str(&s.id.name())),
            (
                "meshes",
                format!(
                    "[{}]",
                    meshes
                        .iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            ),
            ("cfl", fmt_f64(cfl)),
            ("t_final", fmt_f64(t_final)),
            ("variant", json_str(s.variant.name())),
            ("rk", s.rk.order().to_string()),
        ],
        &[DT_POLICY_NOTE, NORM_NOTE],
        &s.outdir.join("meta.json"),
    )?;
    Ok(())
}

pub struct Cfl1dSettings {
    pub variant: SchemeVariant,
    pub rk: RkScheme,
    pub samples: usize,
    pub tol: f64,
    pub outdir: PathBuf,
}

pub fn cmd_cfl1d(s: Cfl1dSettings) -> Result<(), CliError> {
    if s.samples < 400 {
        return Err(CliError::Config(format!(
            "--samples must be at least 400 (got {})",
            s.samples
        )));
    }
    if !s.tol.is_finite() || s.tol <= 0.0 {
        return Err(CliError::Config("--tol must be positive".into()));
    }
    ensure_outdir(&s.outdir)?;
    let max_cfl = max_cfl_1d(s.variant, s.rk.order(), s.samples, s.tol)?;
    write_cfl1d_csv(
        s.variant.name(),
        s.rk.order(),
        max_cfl,
        &s.outdir.join("cfl1d.csv"),
    )?;
    write_meta(
        &[
            ("command", json_str("cfl1d")),
            ("variant", json_str(s.variant.name())),
            ("rk", s.rk.order().to_string()),
            ("samples", s.samples.to_string()),
            ("tol", fmt_f64(s.tol)),
            ("max_cfl", fmt_f64(max_cfl)),
        ],
        &["threshold: largest multiple of tol with spectral radius <= 1 + 1e-12 over the symbol samples"],
        &s.outdir.join("meta.json"),
    )?;
    println!("max stable CFL ({}, rk{}): {}", s.variant.name(), s.rk.order(), max_cfl);
    Ok(())
}

pub struct Region2dSettings {
    pub rk: RkScheme,
    pub step: f64,
    pub max: f64,
    pub thetas: Vec<f64>,
    pub samples: usize,
    pub outdir: PathBuf,
}

pub fn cmd_region2d(s: Region2dSettings) -> Result<(), CliError> {
    if !s.step.is_finite() || s.step <= 0.0 || s.max < s.step {
        return Err(CliError::Config(
            "--step must be positive and --max at least one step".into(),
        ));
    }
    if s.samples < 2 {
        return Err(CliError::Config("--samples must be at least 2".into()));
    }
    ensure_outdir(&s.outdir)?;
    let grid = nu_grid(s.step, s.max);
    let points = stability_region_2d(s.rk.order(), &grid, &s.thetas, s.samples)?;
    write_region_csv(&points, &s.outdir.join("region2d.csv"))?;
    write_meta(
        &[
            ("command", json_str("region2d")),
            ("rk", s.rk.order().to_string()),
            ("step", fmt_f64(s.step)),
            ("max", fmt_f64(s.max)),
            (
                "thetas",
                format!(
                    "[{}]",
                    s.thetas
                        .iter()
                        .map(|t| fmt_f64(*t))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            ),
            ("symbol_samples", s.samples.to_string()),
            ("rows", points.len().to_string()),
        ],
        &["stable flag: spectral radius <= 1 + 1e-12 for every sampled symbol pair"],
        &s.outdir.join("meta.json"),
    )?;
    println!(
        "region scan: {} points, {} stable",
        points.len(),
        points.iter().filter(|p| p.stable).count()
    );
    Ok(())
}
