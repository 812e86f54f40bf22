//! Benchmark problems: domains, coefficients, initial data, exact solutions,
//! and convergence-study drivers.

use std::f64::consts::PI;

use crate::coefficient::Coefficient;
use crate::error::{Error, Result};
use crate::grid::{BoundaryCondition, Grid1D, Grid2D};
use crate::norms::{convergence_rates, error_norms_1d, error_norms_2d, ConvergenceRow};
use crate::operators::SchemeVariant;
use crate::project::{project_initial_1d, project_initial_2d};
use crate::state::{AFState1D, AFState2D};
use crate::time::{advance, Driver1D, Driver2D, RkScheme, RunStats, StepControl};

/// Diffusion coefficient of the 1D accuracy test.
pub const ACCURACY_1D_A: f64 = 0.05;
/// Diffusion matrix of the 2D accuracy test.
pub const ACCURACY_2D_A: [[f64; 2]; 2] = [[0.02, 0.01], [0.01, 0.04]];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemId {
    Accuracy1D,
    Accuracy2D,
    Ring,
    Barenblatt(u32),
    TwoBoxesEqual,
    TwoBoxesUnequal,
    WaitingTime,
    TwoHills,
}

impl ProblemId {
    pub fn name(&self) -> String {
        match self {
            ProblemId::Accuracy1D => "accuracy1d".into(),
            ProblemId::Accuracy2D => "accuracy2d".into(),
            ProblemId::Ring => "ring".into(),
            ProblemId::Barenblatt(m) => format!("barenblatt (m={m})"),
            ProblemId::TwoBoxesEqual => "two-boxes-equal".into(),
            ProblemId::TwoBoxesUnequal => "two-boxes-unequal".into(),
            ProblemId::WaitingTime => "waiting-time".into(),
            ProblemId::TwoHills => "two-hills".into(),
        }
    }
}

/// Exact solution of the 1D accuracy test: `exp(-4 pi^2 a t) sin(2 pi x)`.
pub fn exact_heat_1d(x: f64, t: f64) -> f64 {
    (-4.0 * PI * PI * ACCURACY_1D_A * t).exp() * (2.0 * PI * x).sin()
}

/// Exact solution of the 2D accuracy test; the decay rate carries the sum of
/// all four matrix entries.
pub fn exact_heat_2d(x: f64, y: f64, t: f64) -> f64 {
    let rate: f64 = ACCURACY_2D_A.iter().flatten().sum();
    (-4.0 * PI * PI * rate * t).exp() * (2.0 * PI * (x + y)).sin()
}

/// Self-similar compactly supported solution of the porous medium equation:
/// `max(0, t^-alpha (gamma - alpha (m-1) x^2 / (2 m t^(2 alpha)))^(1/(m-1)))`
/// with `alpha = 1/(m+1)`.
pub fn barenblatt(gamma: f64, m: u32, x: f64, t: f64) -> f64 {
    let alpha = 1.0 / (m as f64 + 1.0);
    let bracket =
        gamma - alpha * (m as f64 - 1.0) / (2.0 * m as f64) * x * x / t.powf(2.0 * alpha);
    if bracket <= 0.0 {
        0.0
    } else {
        t.powf(-alpha) * bracket.powf(1.0 / (m as f64 - 1.0))
    }
}

/// Positive root of the Barenblatt bracket: the support edge at time `t`.
pub fn barenblatt_support_edge(gamma: f64, m: u32, t: f64) -> f64 {
    let alpha = 1.0 / (m as f64 + 1.0);
    (2.0 * m as f64 * gamma / (alpha * (m as f64 - 1.0))).sqrt() * t.powf(alpha)
}

/// Closed-form total mass of the Barenblatt profile at any time (mass is
/// invariant in time); integrated numerically once at high resolution.
pub fn barenblatt_mass(gamma: f64, m: u32, t: f64) -> f64 {
    // Composite Gauss on a fine partition of the support; the integrand is
    // Hoelder at the edge, and 20k panels push the quadrature error far
    // below the solver tolerances.
    let edge = barenblatt_support_edge(gamma, m, t);
    let panels = 20_000;
    let h = 2.0 * edge / panels as f64;
    let mut mass = 0.0;
    for p in 0..panels {
        let a = -edge + p as f64 * h;
        mass += crate::project::cell_mean_1d(&|x| barenblatt(gamma, m, x, t), a, h) * h;
    }
    mass
}

/// Exact solution `u(x, t)` of a 1D problem.
pub type Exact1D = Box<dyn Fn(f64, f64) -> f64 + Send + Sync>;
/// Exact solution `u(x, y, t)` of a 2D problem.
pub type Exact2D = Box<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;

/// A fully specified 1D problem.
pub struct Problem1D {
    pub id: ProblemId,
    pub x_min: f64,
    pub x_max: f64,
    pub default_n: usize,
    pub coeff: Coefficient,
    pub bc: BoundaryCondition,
    pub t_start: f64,
    pub default_t_final: f64,
    pub default_cfl: f64,
    pub limiter_default: bool,
    pub initial: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub exact: Option<Exact1D>,
}

/// A fully specified 2D problem.
pub struct Problem2D {
    pub id: ProblemId,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub default_n: usize,
    pub coeff: Coefficient,
    pub bc: BoundaryCondition,
    pub t_start: f64,
    pub default_t_final: f64,
    pub default_cfl: f64,
    pub limiter_default: bool,
    pub initial: Box<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    pub exact: Option<Exact2D>,
}

pub enum ProblemSetup {
    OneD(Problem1D),
    TwoD(Problem2D),
}

/// Initial condition of a problem as a total function (zero outside supports).
pub fn initial_condition_1d(id: ProblemId) -> Box<dyn Fn(f64) -> f64 + Send + Sync> {
    match id {
        ProblemId::Accuracy1D => Box::new(|x| (2.0 * PI * x).sin()),
        ProblemId::Barenblatt(m) => Box::new(move |x| barenblatt(1.0, m, x, 1.0)),
        ProblemId::TwoBoxesEqual => Box::new(|x| {
            if (-3.7 < x && x < -0.7) || (0.7 < x && x < 3.7) {
                1.0
            } else {
                0.0
            }
        }),
        ProblemId::TwoBoxesUnequal => Box::new(|x| {
            if -4.0 < x && x < -1.0 {
                1.0
            } else if 0.0 < x && x < 3.0 {
                2.0
            } else {
                0.0
            }
        }),
        ProblemId::WaitingTime => Box::new(|x| {
            if -PI / 2.0 < x && x < PI / 2.0 {
                x.cos()
            } else {
                0.0
            }
        }),
        other => panic!("{other:?} is not a 1D problem"),
    }
}

pub fn initial_condition_2d(id: ProblemId) -> Box<dyn Fn(f64, f64) -> f64 + Send + Sync> {
    match id {
        ProblemId::Accuracy2D => Box::new(|x, y| (2.0 * PI * (x + y)).sin()),
        ProblemId::Ring => Box::new(|x, y| {
            0.1 + 10.0 * (-((x - 0.6) * (x - 0.6) + y * y) / 0.02).exp()
        }),
        ProblemId::TwoHills => Box::new(|x, y| {
            let r1 = (x - 2.0) * (x - 2.0) + (y + 2.0) * (y + 2.0);
            let r2 = (x + 2.0) * (x + 2.0) + (y - 2.0) * (y - 2.0);
            if r1 < 6.0 {
                (-1.0 / (6.0 - r1)).exp()
            } else if r2 < 6.0 {
                (-1.0 / (6.0 - r2)).exp()
            } else {
                0.0
            }
        }),
        other => panic!("{other:?} is not a 2D problem"),
    }
}

/// Magnetic-field-aligned diffusion matrix of the ring problem:
/// `A = b b^T` with `b = (-y, x)/r`. The matrix is undefined at the origin;
/// it evaluates to zero there (the odd mesh keeps the origin off every point
/// DoF; only the center-cell reconstruction sees it).
pub fn ring_matrix(x: f64, y: f64) -> [[f64; 2]; 2] {
    let r2 = x * x + y * y;
    if r2 == 0.0 {
        return [[0.0, 0.0], [0.0, 0.0]];
    }
    [[y * y / r2, -x * y / r2], [-x * y / r2, x * x / r2]]
}

/// Build the full problem description for an id.
pub fn problem(id: ProblemId) -> ProblemSetup {
    match id {
        ProblemId::Accuracy1D => ProblemSetup::OneD(Problem1D {
            id,
            x_min: 0.0,
            x_max: 1.0,
            default_n: 80,
            coeff: Coefficient::ConstScalar(ACCURACY_1D_A),
            bc: BoundaryCondition::Periodic,
            t_start: 0.0,
            default_t_final: 1.0,
            default_cfl: 0.27,
            limiter_default: false,
            initial: initial_condition_1d(id),
            exact: Some(Box::new(exact_heat_1d)),
        }),
        ProblemId::Barenblatt(m) => ProblemSetup::OneD(Problem1D {
            id,
            x_min: -6.0,
            x_max: 6.0,
            default_n: 100,
            coeff: Coefficient::PmePower(m),
            bc: BoundaryCondition::Periodic,
            t_start: 1.0,
            default_t_final: 2.0,
            default_cfl: 0.27,
            limiter_default: true,
            initial: initial_condition_1d(id),
            exact: Some(Box::new(move |x, t| barenblatt(1.0, m, x, t))),
        }),
        ProblemId::TwoBoxesEqual => ProblemSetup::OneD(Problem1D {
            id,
            x_min: -6.0,
            x_max: 6.0,
            default_n: 200,
            coeff: Coefficient::PmePower(5),
            bc: BoundaryCondition::Periodic,
            t_start: 0.0,
            default_t_final: 6.0,
            default_cfl: 0.27,
            limiter_default: true,
            initial: initial_condition_1d(id),
            exact: None,
        }),
        ProblemId::TwoBoxesUnequal => ProblemSetup::OneD(Problem1D {
            id,
            x_min: -6.0,
            x_max: 6.0,
            default_n: 200,
            coeff: Coefficient::PmePower(6),
            bc: BoundaryCondition::Periodic,
            t_start: 0.0,
            default_t_final: 0.8,
            default_cfl: 0.27,
            limiter_default: true,
            initial: initial_condition_1d(id),
            exact: None,
        }),
        ProblemId::WaitingTime => ProblemSetup::OneD(Problem1D {
            id,
            x_min: -2.5,
            x_max: 2.5,
            default_n: 200,
            coeff: Coefficient::PmePower(8),
            bc: BoundaryCondition::Periodic,
            t_start: 0.0,
            default_t_final: 1.5,
            default_cfl: 0.27,
            limiter_default: true,
            initial: initial_condition_1d(id),
            exact: None,
        }),
        ProblemId::Accuracy2D => ProblemSetup::TwoD(Problem2D {
            id,
            x_min: 0.0,
            x_max: 1.0,
            y_min: 0.0,
            y_max: 1.0,
            default_n: 40,
            coeff: Coefficient::ConstMatrix(ACCURACY_2D_A),
            bc: BoundaryCondition::Periodic,
            t_start: 0.0,
            default_t_final: 1.0,
            default_cfl: 0.15,
            limiter_default: false,
            initial: initial_condition_2d(id),
            exact: Some(Box::new(exact_heat_2d)),
        }),
        ProblemId::Ring => ProblemSetup::TwoD(Problem2D {
            id,
            x_min: -1.0,
            x_max: 1.0,
            y_min: -1.0,
            y_max: 1.0,
            default_n: 101,
            coeff: Coefficient::FieldMatrix(Box::new(ring_matrix)),
            bc: BoundaryCondition::FarField(0.1),
            t_start: 0.0,
            default_t_final: 1.0,
            default_cfl: 0.15,
            limiter_default: false,
            initial: initial_condition_2d(id),
            exact: None,
        }),
        ProblemId::TwoHills => ProblemSetup::TwoD(Problem2D {
            id,
            x_min: -10.0,
            x_max: 10.0,
            y_min: -10.0,
            y_max: 10.0,
            default_n: 100,
            coeff: Coefficient::PmePower(2),
            bc: BoundaryCondition::Periodic,
            t_start: 0.0,
            default_t_final: 4.0,
            default_cfl: 0.15,
            limiter_default: true,
            initial: initial_condition_2d(id),
            exact: None,
        }),
    }
}

/// Outcome of one 1D run.
pub struct Run1D {
    pub grid: Grid1D,
    pub state: AFState1D,
    pub stats: RunStats,
}

/// Outcome of one 2D run.
pub struct Run2D {
    pub grid: Grid2D,
    pub state: AFState2D,
    pub stats: RunStats,
}

/// Integrate a 1D problem to `t_final` on an `n`-cell mesh.
pub fn solve_1d(
    p: &Problem1D,
    n: usize,
    cfl: f64,
    t_final: f64,
    variant: SchemeVariant,
    rk: RkScheme,
    limiter: bool,
) -> Result<Run1D> {
    let grid = Grid1D::new(p.x_min, p.x_max, n)?;
    let state = project_initial_1d(&grid, &p.initial, p.bc)?;
    let driver = Driver1D::new(&grid, &p.coeff, variant, p.bc)?;
    let control = StepControl {
        cfl_number: cfl,
        t_final,
        limiter_enabled: limiter,
    };
    let (state, stats) = advance(&driver, state, p.t_start, &control, rk)?;
    Ok(Run1D { grid, state, stats })
}

/// Integrate a 2D problem to `t_final` on an `n x n` mesh.
pub fn solve_2d(
    p: &Problem2D,
    n: usize,
    cfl: f64,
    t_final: f64,
    rk: RkScheme,
    limiter: bool,
) -> Result<Run2D> {
    let grid = Grid2D::new(p.x_min, p.x_max, p.y_min, p.y_max, n, n)?;
    let state = project_initial_2d(&grid, &p.initial, p.bc)?;
    let driver = Driver2D::new(&grid, &p.coeff, p.bc)?;
    let control = StepControl {
        cfl_number: cfl,
        t_final,
        limiter_enabled: limiter,
    };
    let (state, stats) = advance(&driver, state, p.t_start, &control, rk)?;
    Ok(Run2D { grid, state, stats })
}

/// Run a problem with an exact solution over successive meshes and report
/// errors and rates. Meshes that abort (instability) surface as errors.
pub fn convergence_study(
    id: ProblemId,
    meshes: &[usize],
    cfl: f64,
    t_final: f64,
    variant: SchemeVariant,
    rk: RkScheme,
) -> Result<Vec<ConvergenceRow>> {
    let mut results = Vec::with_capacity(meshes.len());
    match problem(id) {
        ProblemSetup::OneD(p) => {
            let exact = p
                .exact
                .as_ref()
                .ok_or_else(|| Error::InvalidConfig(format!("{id:?} has no exact solution")))?;
            for &n in meshes {
                let run = solve_1d(&p, n, cfl, t_final, variant, rk, p.limiter_default)?;
                let report =
                    error_norms_1d(&run.state, &|x| exact(x, t_final), &run.grid, p.bc);
                results.push((n, report));
            }
        }
        ProblemSetup::TwoD(p) => {
            let exact = p
                .exact
                .as_ref()
                .ok_or_else(|| Error::InvalidConfig(format!("{id:?} has no exact solution")))?;
            for &n in meshes {
                let run = solve_2d(&p, n, cfl, t_final, rk, p.limiter_default)?;
                let report =
                    error_norms_2d(&run.state, &|x, y| exact(x, y, t_final), &run.grid, p.bc);
                results.push((n, report));
            }
        }
    }
    Ok(convergence_rates(&results))
}
