//! Discrete error norms against a reference solution and convergence-rate
//! bookkeeping.
//!
//! Average errors compare against exact cell means (5-point Gauss-Legendre
//! per direction); point errors compare against exact samples. L2 norms are
//! `sqrt(sum(e^2) * cell measure)`, L1 `sum(|e|) * cell measure`, Linf the
//! plain maximum.

use crate::grid::{BoundaryCondition, Grid1D, Grid2D};
use crate::project::{cell_mean_1d, cell_mean_2d};
use crate::state::{AFState1D, AFState2D};

/// Errors for one run, separated by DoF family.
#[derive(Debug, Clone, Copy)]
pub struct ErrorReport {
    pub l1_avg: f64,
    pub l2_avg: f64,
    pub linf_avg: f64,
    pub l1_pnt: f64,
    pub l2_pnt: f64,
    pub linf_pnt: f64,
}

fn norms(errs: impl Iterator<Item = f64>, measure: f64) -> (f64, f64, f64) {
    let mut l1 = 0.0;
    let mut l2 = 0.0;
    let mut linf = 0.0f64;
    for e in errs {
        l1 += e.abs();
        l2 += e * e;
        linf = linf.max(e.abs());
    }
    (l1 * measure, (l2 * measure).sqrt(), linf)
}

pub fn error_norms_1d(
    state: &AFState1D,
    exact: &dyn Fn(f64) -> f64,
    grid: &Grid1D,
    _bc: BoundaryCondition,
) -> ErrorReport {
    let dx = grid.dx();
    let (l1_avg, l2_avg, linf_avg) = norms(
        state.averages.iter().enumerate().map(|(i, &v)| {
            v - cell_mean_1d(exact, grid.interface(i as isize), dx)
        }),
        dx,
    );
    let (l1_pnt, l2_pnt, linf_pnt) = norms(
        state
            .points
            .iter()
            .enumerate()
            .map(|(k, &v)| v - exact(grid.interface(k as isize))),
        dx,
    );
    ErrorReport {
        l1_avg,
        l2_avg,
        linf_avg,
        l1_pnt,
        l2_pnt,
        linf_pnt,
    }
}

pub fn error_norms_2d(
    state: &AFState2D,
    exact: &dyn Fn(f64, f64) -> f64,
    grid: &Grid2D,
    bc: BoundaryCondition,
) -> ErrorReport {
    let (nx, _ny) = (grid.n_x(), grid.n_y());
    let (dx, dy) = (grid.dx(), grid.dy());
    let (gx, gy) = (grid.x_axis(), grid.y_axis());
    let measure = dx * dy;

    let (l1_avg, l2_avg, linf_avg) = norms(
        state.averages.iter().enumerate().map(|(idx, &v)| {
            let (i, j) = (idx % nx, idx / nx);
            v - cell_mean_2d(exact, gx.interface(i as isize), gy.interface(j as isize), dx, dy)
        }),
        measure,
    );

    let [_, fx_sh, fy_sh, c_sh] = AFState2D::shapes(grid, bc);
    let fx_err = state.face_x.iter().enumerate().map(|(idx, &v)| {
        let (k, j) = (idx % fx_sh.0, idx / fx_sh.0);
        v - exact(gx.interface(k as isize), gy.cell_center(j as isize))
    });
    let fy_err = state.face_y.iter().enumerate().map(|(idx, &v)| {
        let (i, l) = (idx % fy_sh.0, idx / fy_sh.0);
        v - exact(gx.cell_center(i as isize), gy.interface(l as isize))
    });
    let cn_err = state.corners.iter().enumerate().map(|(idx, &v)| {
        let (k, l) = (idx % c_sh.0, idx / c_sh.0);
        v - exact(gx.interface(k as isize), gy.interface(l as isize))
    });
    // One third of the measure per family keeps the total point measure at
    // one cell area per cell.
    let (l1_pnt, l2_pnt, linf_pnt) = norms(fx_err.chain(fy_err).chain(cn_err), measure / 3.0);

    ErrorReport {
        l1_avg,
        l2_avg,
        linf_avg,
        l1_pnt,
        l2_pnt,
        linf_pnt,
    }
}

/// One row of a convergence table: errors at resolution `n` plus rates
/// against the previous (half-resolution) row.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub n: usize,
    pub report: ErrorReport,
    pub rate_l2_avg: Option<f64>,
    pub rate_l2_pnt: Option<f64>,
    pub rate_linf_avg: Option<f64>,
    pub rate_linf_pnt: Option<f64>,
}

/// Rates `log2(e_coarse / e_fine)` for successive mesh doublings.
pub fn convergence_rates(results: &[(usize, ErrorReport)]) -> Vec<ConvergenceRow> {
    let mut rows = Vec::with_capacity(results.len());
    for (idx, &(n, report)) in results.iter().enumerate() {
        let rate = |f: fn(&ErrorReport) -> f64| -> Option<f64> {
            if idx == 0 {
                None
            } else {
                let prev = &results[idx - 1].1;
                Some((f(prev) / f(&report)).log2())
            }
        };
        rows.push(ConvergenceRow {
            n,
            report,
            rate_l2_avg: rate(|r| r.l2_avg),
            rate_l2_pnt: rate(|r| r.l2_pnt),
            rate_linf_avg: rate(|r| r.linf_avg),
            rate_linf_pnt: rate(|r| r.linf_pnt),
        });
    }
    rows
}
