//! Explicit time stepping: SSP-RK3 (convex combination of forward-Euler
//! stages, limiter applied per stage) and classical RK4 (stability
//! comparisons only), with CFL- and positivity-constrained step control.

use crate::coefficient::{pme_a, spd_spectral_radius, Coefficient};
use crate::error::{Error, Result};
use crate::grid::{BoundaryCondition, Grid1D, Grid2D};
use crate::limiter::{clip_points, limited_average_update_1d, limited_average_update_2d};
use crate::operators::SchemeVariant;
use crate::pad::{Family, Pad1, Pad2};
use crate::reconstruct::{cell_center_value_1d, cell_center_value_2d};
use crate::semidiscrete::{rhs_1d, rhs_2d};
use crate::state::{AFState1D, AFState2D, StateOps};

/// Runge-Kutta scheme choice. `SspRk3` is the default; `Rk4` exists for the
/// CFL comparison and is excluded from limited (positivity) runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RkScheme {
    #[default]
    SspRk3,
    Rk4,
}

impl RkScheme {
    pub fn order(&self) -> u32 {
        match self {
            RkScheme::SspRk3 => 3,
            RkScheme::Rk4 => 4,
        }
    }
}

/// Step-size policy for a run.
#[derive(Debug, Clone, Copy)]
pub struct StepControl {
    pub cfl_number: f64,
    pub t_final: f64,
    pub limiter_enabled: bool,
}

/// A spatial scheme the generic stepper can drive.
pub trait Scheme {
    type State: StateOps;

    /// Time derivative of the state, packaged in the state's own layout.
    fn rhs_as_state(&self, u: &Self::State) -> Result<Self::State>;

    /// One forward-Euler step; with `limited` the averages go through the
    /// parametrized flux limiter and the points are clipped.
    fn euler_stage(&self, u: &Self::State, dt: f64, limited: bool) -> Result<Self::State>;

    /// Parabolic CFL bound on the step size (infinite when no diffusion).
    fn cfl_dt(&self, u: &Self::State, cfl_number: f64) -> Result<f64>;

    /// Positivity bound of the low-order scheme.
    fn pp_dt(&self, u: &Self::State) -> Result<f64>;
}

/// Stable step size: the CFL bound, intersected with the positivity bound
/// when the limiter is on. Callers truncate to the remaining horizon.
pub fn stable_dt<S: Scheme>(scheme: &S, state: &S::State, control: &StepControl) -> Result<f64> {
    let mut dt = scheme.cfl_dt(state, control.cfl_number)?;
    if control.limiter_enabled {
        dt = dt.min(scheme.pp_dt(state)?);
    }
    Ok(dt)
}

/// One RK step. SSP-RK3 composes forward-Euler stages as
/// `u1 = E(u)`, `u2 = 3/4 u + 1/4 E(u1)`, `u(n+1) = 1/3 u + 2/3 E(u2)`,
/// so any per-stage positivity carries to the result by convexity.
pub fn rk_step<S: Scheme>(
    scheme: &S,
    u: &S::State,
    dt: f64,
    rk: RkScheme,
    limited: bool,
) -> Result<S::State> {
    let next = match rk {
        RkScheme::SspRk3 => {
            let u1 = scheme.euler_stage(u, dt, limited)?;
            let e1 = scheme.euler_stage(&u1, dt, limited)?;
            let u2 = S::State::blend_toward(u, 0.25, &e1);
            let e2 = scheme.euler_stage(&u2, dt, limited)?;
            S::State::blend_toward(u, 2.0 / 3.0, &e2)
        }
        RkScheme::Rk4 => {
            if limited {
                return Err(Error::InvalidConfig(
                    "RK4 has no positivity guarantee; limited runs use SSP-RK3".into(),
                ));
            }
            let k1 = scheme.rhs_as_state(u)?;
            let mut s = u.clone();
            s.scaled_add(0.5 * dt, &k1);
            let k2 = scheme.rhs_as_state(&s)?;
            let mut s = u.clone();
            s.scaled_add(0.5 * dt, &k2);
            let k3 = scheme.rhs_as_state(&s)?;
            let mut s = u.clone();
            s.scaled_add(dt, &k3);
            let k4 = scheme.rhs_as_state(&s)?;
            let mut out = u.clone();
            out.scaled_add(dt / 6.0, &k1);
            out.scaled_add(dt / 3.0, &k2);
            out.scaled_add(dt / 3.0, &k3);
            out.scaled_add(dt / 6.0, &k4);
            out
        }
    };
    if next.all_finite() {
        Ok(next)
    } else {
        Err(Error::UnstableAbort { step: 0, time: 0.0 })
    }
}

/// Bookkeeping from an `advance` run.
#[derive(Debug, Clone)]
pub struct RunStats {
    pub steps: usize,
    pub final_time: f64,
    /// Minimum DoF value observed after each step.
    pub min_dof_per_step: Vec<f64>,
    pub min_dof_overall: f64,
}

/// Integrate from `t0` to `control.t_final`, truncating the final step to
/// land exactly. The observer sees `(step, t_new, dt, state)` after each step.
pub fn advance_with<S: Scheme>(
    scheme: &S,
    state: S::State,
    t0: f64,
    control: &StepControl,
    rk: RkScheme,
    mut observer: impl FnMut(usize, f64, f64, &S::State),
) -> Result<(S::State, RunStats)> {
    if !control.cfl_number.is_finite() || control.cfl_number <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "CFL number must be positive, got {}",
            control.cfl_number
        )));
    }
    let mut u = state;
    let mut t = t0;
    let mut stats = RunStats {
        steps: 0,
        final_time: t0,
        min_dof_per_step: Vec::new(),
        min_dof_overall: u.min_dof_value(),
    };
    let horizon_eps = 1e-12 * control.t_final.abs().max(1.0);
    while control.t_final - t > horizon_eps {
        let remaining = control.t_final - t;
        let dt_stable = stable_dt(scheme, &u, control)?;
        let (dt, lands) = if dt_stable >= remaining {
            (remaining, true)
        } else {
            (dt_stable, false)
        };
        if !dt.is_finite() || dt <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "non-positive step size {dt} at t = {t}"
            )));
        }
        u = rk_step(scheme, &u, dt, rk, control.limiter_enabled).map_err(|e| match e {
            Error::UnstableAbort { .. } => Error::UnstableAbort {
                step: stats.steps + 1,
                time: t,
            },
            other => other,
        })?;
        t = if lands { control.t_final } else { t + dt };
        stats.steps += 1;
        stats.final_time = t;
        let m = u.min_dof_value();
        stats.min_dof_per_step.push(m);
        stats.min_dof_overall = stats.min_dof_overall.min(m);
        observer(stats.steps, t, dt, &u);
    }
    Ok((u, stats))
}

pub fn advance<S: Scheme>(
    scheme: &S,
    state: S::State,
    t0: f64,
    control: &StepControl,
    rk: RkScheme,
) -> Result<(S::State, RunStats)> {
    advance_with(scheme, state, t0, control, rk, |_, _, _, _| {})
}

/// 1D spatial scheme bound to a grid, coefficient, variant, and boundary.
pub struct Driver1D<'a> {
    pub grid: &'a Grid1D,
    pub coeff: &'a Coefficient,
    pub variant: SchemeVariant,
    pub bc: BoundaryCondition,
    static_a_max: Option<f64>,
}

impl<'a> Driver1D<'a> {
    pub fn new(
        grid: &'a Grid1D,
        coeff: &'a Coefficient,
        variant: SchemeVariant,
        bc: BoundaryCondition,
    ) -> Result<Self> {
        coeff.validate()?;
        let static_a_max = match coeff {
            Coefficient::ConstScalar(a) => Some(*a),
            Coefficient::PmePower(_) => None,
            other => {
                return Err(Error::InvalidCoefficient(format!(
                    "1D scheme requires a scalar coefficient, got {other:?}"
                )))
            }
        };
        Ok(Driver1D {
            grid,
            coeff,
            variant,
            bc,
            static_a_max,
        })
    }

    /// Coefficient ceiling over point DoFs and clipped cell-centered
    /// reconstructions (the power law is monotone, so the max solution value
    /// suffices).
    fn a_max(&self, u: &AFState1D) -> Result<f64> {
        if let Some(a) = self.static_a_max {
            return Ok(a);
        }
        let mut u_max = u.points.iter().copied().fold(0.0f64, f64::max);
        let n = self.grid.n_cells();
        for i in 0..n {
            let left = u.points[i];
            let right = u.points[(i + 1) % u.points.len()];
            let cc = cell_center_value_1d(u.averages[i], left, right);
            u_max = u_max.max(cc);
        }
        self.coeff.scalar_at(u_max)
    }

    fn a_max_points(&self, u: &AFState1D) -> Result<f64> {
        if let Some(a) = self.static_a_max {
            return Ok(a);
        }
        let u_max = u.points.iter().copied().fold(0.0f64, f64::max);
        self.coeff.scalar_at(u_max)
    }

    fn low_order_fluxes(&self, u: &AFState1D) -> Result<Vec<f64>> {
        let n = self.grid.n_cells();
        let dx = self.grid.dx();
        let avg = Pad1::from_owned(&u.averages, n, Family::Cell, self.bc);
        let n_ifaces = Family::Interface.owned_len(n, self.bc);
        let mut out = vec![0.0; n_ifaces];
        for (k, f) in out.iter_mut().enumerate() {
            let a = self.coeff.scalar_at(u.points[k])?;
            let kk = k as isize;
            *f = a * (avg.at(kk) - avg.at(kk - 1)) / dx;
        }
        Ok(out)
    }
}

impl Scheme for Driver1D<'_> {
    type State = AFState1D;

    fn rhs_as_state(&self, u: &AFState1D) -> Result<AFState1D> {
        let r = rhs_1d(u, self.coeff, self.variant, self.grid, self.bc)?;
        Ok(AFState1D {
            averages: r.d_averages,
            points: r.d_points,
        })
    }

    fn euler_stage(&self, u: &AFState1D, dt: f64, limited: bool) -> Result<AFState1D> {
        let r = rhs_1d(u, self.coeff, self.variant, self.grid, self.bc)?;
        let mut points: Vec<f64> = u
            .points
            .iter()
            .zip(&r.d_points)
            .map(|(p, d)| p + dt * d)
            .collect();
        let averages = if limited {
            clip_points(&mut points);
            let low = self.low_order_fluxes(u)?;
            limited_average_update_1d(
                &u.averages,
                &r.high_order_fluxes,
                &low,
                dt,
                self.grid,
                self.bc,
            )?
        } else {
            u.averages
                .iter()
                .zip(&r.d_averages)
                .map(|(a, d)| a + dt * d)
                .collect()
        };
        Ok(AFState1D { averages, points })
    }

    fn cfl_dt(&self, u: &AFState1D, cfl_number: f64) -> Result<f64> {
        let a = self.a_max(u)?;
        if a == 0.0 {
            return Ok(f64::INFINITY);
        }
        Ok(cfl_number * self.grid.dx() * self.grid.dx() / a)
    }

    fn pp_dt(&self, u: &AFState1D) -> Result<f64> {
        let a = self.a_max_points(u)?;
        if a == 0.0 {
            return Ok(f64::INFINITY);
        }
        Ok(self.grid.dx() * self.grid.dx() / (2.0 * a))
    }
}

/// 2D spatial scheme bound to a grid, coefficient, and boundary (central
/// variant only).
pub struct Driver2D<'a> {
    pub grid: &'a Grid2D,
    pub coeff: &'a Coefficient,
    pub bc: BoundaryCondition,
    static_rho_max: Option<f64>,
}

impl<'a> Driver2D<'a> {
    pub fn new(grid: &'a Grid2D, coeff: &'a Coefficient, bc: BoundaryCondition) -> Result<Self> {
        coeff.validate()?;
        let static_rho_max = match coeff {
            Coefficient::ConstScalar(a) => Some(*a),
            Coefficient::ConstMatrix(m) => Some(spd_spectral_radius(m)),
            Coefficient::FieldMatrix(f) => {
                // Solution-independent field: scan every evaluation
                // coordinate once.
                let (gx, gy) = (grid.x_axis(), grid.y_axis());
                let mut rho: f64 = 0.0;
                for j in 0..=grid.n_y() as isize {
                    for i in 0..=grid.n_x() as isize {
                        rho = rho.max(spd_spectral_radius(&f(gx.interface(i), gy.interface(j))));
                        rho = rho
                            .max(spd_spectral_radius(&f(gx.cell_center(i), gy.cell_center(j))));
                        rho = rho.max(spd_spectral_radius(&f(gx.interface(i), gy.cell_center(j))));
                        rho = rho.max(spd_spectral_radius(&f(gx.cell_center(i), gy.interface(j))));
                    }
                }
                Some(rho)
            }
            Coefficient::PmePower(_) => None,
        };
        Ok(Driver2D {
            grid,
            coeff,
            bc,
            static_rho_max,
        })
    }

    fn rho_max(&self, u: &AFState2D) -> Result<f64> {
        if let Some(r) = self.static_rho_max {
            return Ok(r);
        }
        let mut u_max = u.max_dof().max(0.0);
        // Include clipped cell-center reconstructions.
        let (nx, ny) = (self.grid.n_x(), self.grid.n_y());
        let [_, fx_sh, fy_sh, c_sh] = AFState2D::shapes(self.grid, self.bc);
        let wrapx = |k: usize, w: usize| k % w;
        for j in 0..ny {
            for i in 0..nx {
                let ip = wrapx(i + 1, fx_sh.0);
                let jp = wrapx(j + 1, fy_sh.1);
                let faces = [
                    u.face_x[j * fx_sh.0 + i],
                    u.face_x[j * fx_sh.0 + ip],
                    u.face_y[j * fy_sh.0 + i],
                    u.face_y[jp * fy_sh.0 + i],
                ];
                let cn = |kk: usize, ll: usize| u.corners[ll * c_sh.0 + kk];
                let ipc = wrapx(i + 1, c_sh.0);
                let jpc = wrapx(j + 1, c_sh.1);
                let corners = [cn(i, j), cn(ipc, j), cn(i, jpc), cn(ipc, jpc)];
                let cc = cell_center_value_2d(u.averages[j * nx + i], faces, corners);
                u_max = u_max.max(cc);
            }
        }
        match self.coeff {
            Coefficient::PmePower(m) => Ok(pme_a(*m, u_max)),
            _ => unreachable!("static coefficients are cached"),
        }
    }

    fn scalar_a(&self, u: f64) -> Result<f64> {
        match self.coeff {
            Coefficient::ConstScalar(a) => Ok(*a),
            Coefficient::PmePower(m) => Ok(pme_a(*m, u)),
            other => Err(Error::InvalidCoefficient(format!(
                "the positivity limiter requires a scalar coefficient, got {other:?}"
            ))),
        }
    }

    fn low_order_fluxes(&self, u: &AFState2D) -> Result<(Vec<f64>, Vec<f64>)> {
        let (nx, ny) = (self.grid.n_x(), self.grid.n_y());
        let (dx, dy) = (self.grid.dx(), self.grid.dy());
        let avg = Pad2::from_owned(&u.averages, nx, ny, Family::Cell, Family::Cell, self.bc);
        let ifx = Family::Interface.owned_len(nx, self.bc);
        let ify = Family::Interface.owned_len(ny, self.bc);

        let mut flux_x = vec![0.0; ifx * ny];
        for j in 0..ny {
            for k in 0..ifx {
                let a = self.scalar_a(u.face_x[j * ifx + k])?;
                let (kk, jj) = (k as isize, j as isize);
                flux_x[j * ifx + k] = a * (avg.at(kk, jj) - avg.at(kk - 1, jj)) / dx;
            }
        }
        let mut flux_y = vec![0.0; nx * ify];
        for l in 0..ify {
            for i in 0..nx {
                let a = self.scalar_a(u.face_y[l * nx + i])?;
                let (ii, ll) = (i as isize, l as isize);
                flux_y[l * nx + i] = a * (avg.at(ii, ll) - avg.at(ii, ll - 1)) / dy;
            }
        }
        Ok((flux_x, flux_y))
    }
}

impl Scheme for Driver2D<'_> {
    type State = AFState2D;

    fn rhs_as_state(&self, u: &AFState2D) -> Result<AFState2D> {
        let r = rhs_2d(u, self.coeff, SchemeVariant::Central4, self.grid, self.bc)?;
        Ok(AFState2D {
            averages: r.d_averages,
            face_x: r.d_face_x,
            face_y: r.d_face_y,
            corners: r.d_corners,
        })
    }

    fn euler_stage(&self, u: &AFState2D, dt: f64, limited: bool) -> Result<AFState2D> {
        let r = rhs_2d(u, self.coeff, SchemeVariant::Central4, self.grid, self.bc)?;
        let lin =
            |v: &[f64], d: &[f64]| -> Vec<f64> { v.iter().zip(d).map(|(a, b)| a + dt * b).collect() };
        let mut face_x = lin(&u.face_x, &r.d_face_x);
        let mut face_y = lin(&u.face_y, &r.d_face_y);
        let mut corners = lin(&u.corners, &r.d_corners);
        let averages = if limited {
            clip_points(&mut face_x);
            clip_points(&mut face_y);
            clip_points(&mut corners);
            let (low_x, low_y) = self.low_order_fluxes(u)?;
            limited_average_update_2d(
                &u.averages,
                &r.flux_x,
                &low_x,
                &r.flux_y,
                &low_y,
                dt,
                self.grid,
                self.bc,
            )?
        } else {
            lin(&u.averages, &r.d_averages)
        };
        Ok(AFState2D {
            averages,
            face_x,
            face_y,
            corners,
        })
    }

    fn cfl_dt(&self, u: &AFState2D, cfl_number: f64) -> Result<f64> {
        let rho = self.rho_max(u)?;
        if rho == 0.0 {
            return Ok(f64::INFINITY);
        }
        let inv_h2 = (1.0 / (self.grid.dx() * self.grid.dx()))
            .max(1.0 / (self.grid.dy() * self.grid.dy()));
        Ok(cfl_number / (rho * inv_h2))
    }

    fn pp_dt(&self, u: &AFState2D) -> Result<f64> {
        let ax = u
            .face_x
            .iter()
            .map(|&v| self.scalar_a(v))
            .try_fold(0.0f64, |m, a| a.map(|a| m.max(a)))?;
        let ay = u
            .face_y
            .iter()
            .map(|&v| self.scalar_a(v))
            .try_fold(0.0f64, |m, a| a.map(|a| m.max(a)))?;
        let denom =
            ax / (self.grid.dx() * self.grid.dx()) + ay / (self.grid.dy() * self.grid.dy());
        if denom == 0.0 {
            return Ok(f64::INFINITY);
        }
        Ok(1.0 / (2.0 * denom))
    }
}
