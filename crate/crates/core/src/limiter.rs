//! Positivity preservation: low-order fluxes, the parametrized flux limiter
//! for cell averages, and point-value clipping.
//!
//! The limited interface flux is the convex blend
//! `theta * f_high + (1 - theta) * f_low`, with per-cell candidates `Lambda`
//! chosen so that the limited forward-Euler average stays nonnegative for
//! every admissible theta, and `theta` at an interface the minimum of the two
//! adjacent candidates (both cells then see the same flux, so conservation
//! stays local).

use crate::error::{Error, Result};
use crate::grid::{BoundaryCondition, Grid1D, Grid2D};
use crate::pad::{Family, GhostFill, Pad1, Pad2};

/// Guard in the candidate formula's denominator.
const LAMBDA_GUARD: f64 = 1e-12;

/// Low-order diffusive flux at one interface: `a * (avg_right - avg_left) / dx`.
#[inline]
pub fn low_order_flux_1d(avg_left: f64, avg_right: f64, a_at_interface: f64, dx: f64) -> f64 {
    a_at_interface * (avg_right - avg_left) / dx
}

/// Candidate blending bounds for one cell.
///
/// `h` holds the anti-diffusive fluxes per direction; directions with `h < 0`
/// get `min(1, u_bar_low / (guard - sum of negative h))`, the rest 1.
pub fn lambda_candidates<const D: usize>(u_bar_low: f64, h: [f64; D]) -> [f64; D] {
    let neg_sum: f64 = h.iter().filter(|v| **v < 0.0).sum();
    let mut out = [1.0; D];
    if neg_sum < 0.0 {
        let bound = (u_bar_low.max(0.0) / (LAMBDA_GUARD - neg_sum)).min(1.0);
        for (o, hv) in out.iter_mut().zip(h) {
            if hv < 0.0 {
                *o = bound;
            }
        }
    }
    out
}

/// Interface coefficients from adjacent cells' candidates:
/// `theta_{i+1/2} = min(Lambda_{i,R}, Lambda_{i+1,L})`. Cells beyond a
/// far-field boundary contribute 1.
pub fn blend_thetas_1d(
    lambdas: &[[f64; 2]],
    n_interfaces: usize,
    bc: BoundaryCondition,
) -> Vec<f64> {
    let n = lambdas.len();
    let cell = |i: isize| -> Option<[f64; 2]> {
        if bc.is_periodic() {
            Some(lambdas[i.rem_euclid(n as isize) as usize])
        } else if (0..n as isize).contains(&i) {
            Some(lambdas[i as usize])
        } else {
            None
        }
    };
    (0..n_interfaces)
        .map(|k| {
            // Interface k joins cell k-1 (its right side) and cell k (left).
            let right_of_left = cell(k as isize - 1).map_or(1.0, |l| l[1]);
            let left_of_right = cell(k as isize).map_or(1.0, |l| l[0]);
            right_of_left.min(left_of_right)
        })
        .collect()
}

/// One limited forward-Euler update of the 1D cell averages.
///
/// `high_fluxes`/`low_fluxes` are interface-indexed (`n` entries periodic,
/// `n + 1` otherwise) and must come from the same `dt`.
pub fn limited_average_update_1d(
    averages: &[f64],
    high_fluxes: &[f64],
    low_fluxes: &[f64],
    dt: f64,
    grid: &Grid1D,
    bc: BoundaryCondition,
) -> Result<Vec<f64>> {
    let n = grid.n_cells();
    let lam = dt / grid.dx();

    let mut f_h = Pad1::from_owned(high_fluxes, n, Family::Interface, bc);
    f_h.fill_ghosts(bc, GhostFill::Zero);
    let mut f_l = Pad1::from_owned(low_fluxes, n, Family::Interface, bc);
    f_l.fill_ghosts(bc, GhostFill::Zero);

    // Low-order stage and per-cell candidates.
    let mut lambdas = vec![[1.0f64; 2]; n];
    for i in 0..n {
        let k = i as isize;
        let low = averages[i] + lam * (f_l.at(k + 1) - f_l.at(k));
        if low < -1e-13 * averages[i].abs().max(1.0) {
            return Err(Error::PositivityViolated { min: low, step: 0 });
        }
        let h_l = -lam * (f_h.at(k) - f_l.at(k));
        let h_r = lam * (f_h.at(k + 1) - f_l.at(k + 1));
        lambdas[i] = lambda_candidates(low, [h_l, h_r]);
    }

    let n_ifaces = Family::Interface.owned_len(n, bc);
    let thetas = blend_thetas_1d(&lambdas, n_ifaces, bc);
    let mut f_lim = Pad1::zeros(n, Family::Interface, bc);
    for k in 0..n_ifaces as isize {
        let th = thetas[k as usize];
        f_lim.set(k, th * f_h.at(k) + (1.0 - th) * f_l.at(k));
    }
    f_lim.fill_ghosts(bc, GhostFill::Zero);

    let mut out = vec![0.0; n];
    for i in 0..n {
        let k = i as isize;
        out[i] = averages[i] + lam * (f_lim.at(k + 1) - f_lim.at(k));
        if out[i] < -1e-13 {
            return Err(Error::PositivityViolated {
                min: out[i],
                step: 0,
            });
        }
    }
    Ok(out)
}

/// Interface coefficients of the 2D blend from per-cell candidates (direction
/// order left, right, down, up): `theta` at an x-interface is the min of the
/// right candidate of the left cell and the left candidate of the right cell,
/// and correspondingly for y.
pub fn blend_thetas_2d(
    lambdas: &[[f64; 4]],
    nx: usize,
    ny: usize,
    bc: BoundaryCondition,
) -> (Vec<f64>, Vec<f64>) {
    let lam_at = |i: isize, j: isize| -> Option<[f64; 4]> {
        if bc.is_periodic() {
            let iw = i.rem_euclid(nx as isize) as usize;
            let jw = j.rem_euclid(ny as isize) as usize;
            Some(lambdas[jw * nx + iw])
        } else if (0..nx as isize).contains(&i) && (0..ny as isize).contains(&j) {
            Some(lambdas[j as usize * nx + i as usize])
        } else {
            None
        }
    };
    let ifx = Family::Interface.owned_len(nx, bc);
    let ify = Family::Interface.owned_len(ny, bc);
    let mut theta_x = vec![1.0; ifx * ny];
    for j in 0..ny as isize {
        for k in 0..ifx as isize {
            let right_of_left = lam_at(k - 1, j).map_or(1.0, |l| l[1]);
            let left_of_right = lam_at(k, j).map_or(1.0, |l| l[0]);
            theta_x[j as usize * ifx + k as usize] = right_of_left.min(left_of_right);
        }
    }
    let mut theta_y = vec![1.0; nx * ify];
    for l in 0..ify as isize {
        for i in 0..nx as isize {
            let up_of_below = lam_at(i, l - 1).map_or(1.0, |la| la[3]);
            let down_of_above = lam_at(i, l).map_or(1.0, |la| la[2]);
            theta_y[l as usize * nx + i as usize] = up_of_below.min(down_of_above);
        }
    }
    (theta_x, theta_y)
}

/// 2D limited forward-Euler update; per-cell direction order is
/// (left, right, down, up).
#[allow(clippy::too_many_arguments)]
pub fn limited_average_update_2d(
    averages: &[f64],
    high_flux_x: &[f64],
    low_flux_x: &[f64],
    high_flux_y: &[f64],
    low_flux_y: &[f64],
    dt: f64,
    grid: &Grid2D,
    bc: BoundaryCondition,
) -> Result<Vec<f64>> {
    let (nx, ny) = (grid.n_x(), grid.n_y());
    let (lx, ly) = (dt / grid.dx(), dt / grid.dy());

    let mut fh_x = Pad2::from_owned(high_flux_x, nx, ny, Family::Interface, Family::Cell, bc);
    fh_x.fill_ghosts(bc, GhostFill::Zero);
    let mut fl_x = Pad2::from_owned(low_flux_x, nx, ny, Family::Interface, Family::Cell, bc);
    fl_x.fill_ghosts(bc, GhostFill::Zero);
    let mut fh_y = Pad2::from_owned(high_flux_y, nx, ny, Family::Cell, Family::Interface, bc);
    fh_y.fill_ghosts(bc, GhostFill::Zero);
    let mut fl_y = Pad2::from_owned(low_flux_y, nx, ny, Family::Cell, Family::Interface, bc);
    fl_y.fill_ghosts(bc, GhostFill::Zero);

    let mut lambdas = vec![[1.0f64; 4]; nx * ny];
    for j in 0..ny {
        for i in 0..nx {
            let (ii, jj) = (i as isize, j as isize);
            let low = averages[j * nx + i]
                + lx * (fl_x.at(ii + 1, jj) - fl_x.at(ii, jj))
                + ly * (fl_y.at(ii, jj + 1) - fl_y.at(ii, jj));
            if low < -1e-13 * averages[j * nx + i].abs().max(1.0) {
                return Err(Error::PositivityViolated { min: low, step: 0 });
            }
            let h = [
                -lx * (fh_x.at(ii, jj) - fl_x.at(ii, jj)),
                lx * (fh_x.at(ii + 1, jj) - fl_x.at(ii + 1, jj)),
                -ly * (fh_y.at(ii, jj) - fl_y.at(ii, jj)),
                ly * (fh_y.at(ii, jj + 1) - fl_y.at(ii, jj + 1)),
            ];
            lambdas[j * nx + i] = lambda_candidates(low, h);
        }
    }

    let (theta_x, theta_y) = blend_thetas_2d(&lambdas, nx, ny, bc);
    let ifx = Family::Interface.owned_len(nx, bc);
    let ify = Family::Interface.owned_len(ny, bc);
    let mut flim_x = Pad2::zeros(nx, ny, Family::Interface, Family::Cell, bc);
    for j in 0..ny as isize {
        for k in 0..ifx as isize {
            let th = theta_x[j as usize * ifx + k as usize];
            flim_x.set(k, j, th * fh_x.at(k, j) + (1.0 - th) * fl_x.at(k, j));
        }
    }
    flim_x.fill_ghosts(bc, GhostFill::Zero);
    let mut flim_y = Pad2::zeros(nx, ny, Family::Cell, Family::Interface, bc);
    for l in 0..ify as isize {
        for i in 0..nx as isize {
            let th = theta_y[l as usize * nx + i as usize];
            flim_y.set(i, l, th * fh_y.at(i, l) + (1.0 - th) * fl_y.at(i, l));
        }
    }
    flim_y.fill_ghosts(bc, GhostFill::Zero);

    let mut out = vec![0.0; nx * ny];
    for j in 0..ny {
        for i in 0..nx {
            let (ii, jj) = (i as isize, j as isize);
            let v = averages[j * nx + i]
                + lx * (flim_x.at(ii + 1, jj) - flim_x.at(ii, jj))
                + ly * (flim_y.at(ii, jj + 1) - flim_y.at(ii, jj));
            if v < -1e-13 {
                return Err(Error::PositivityViolated { min: v, step: 0 });
            }
            out[j * nx + i] = v;
        }
    }
    Ok(out)
}

/// Clip point values to the admissible set (elementwise `max(., 0)`).
pub fn clip_points(points: &mut [f64]) {
    for p in points {
        *p = p.max(0.0);
    }
}
