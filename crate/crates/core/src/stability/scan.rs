//! Fully-discrete stability: RK stability polynomials applied to the
//! amplification matrices, maximum-CFL searches, and the 2D region scan.

use rayon::prelude::*;

use super::matrices::{mat_identity, mat_scale, CMat, C64};
use super::one_d::assemble_g_1d;
use super::roots::eigenvalues;
use super::two_d::assemble_g_2d;
use crate::error::Result;
use crate::operators::SchemeVariant;

/// Von Neumann threshold: spectral radii up to `1 + STABILITY_SLACK` count
/// as stable (rounding headroom only).
pub const STABILITY_SLACK: f64 = 1e-12;

/// Truncated-exponential stability polynomial of an explicit RK method of
/// order `p` evaluated at a scalar: `sum_{m=0}^{p} z^m / m!`.
pub fn rk_stability_scalar(p: u32, z: C64) -> C64 {
    let mut term = C64::ONE;
    let mut acc = C64::ONE;
    for m in 1..=p {
        term = term * z / m as f64;
        acc += term;
    }
    acc
}

/// Matrix form of the fully-discrete amplification:
/// `sum_{m=0}^{p} (nu G)^m / m!`.
pub fn rk_stability_matrix<const N: usize>(g: &CMat<N>, p: u32, nu: f64) -> CMat<N> {
    let scaled = mat_scale(g, C64::new(nu, 0.0));
    let mut term = mat_identity::<N>();
    let mut acc = mat_identity::<N>();
    for m in 1..=p {
        term = super::matrices::mat_mul(&term, &scaled);
        term = mat_scale(&term, C64::new(1.0 / m as f64, 0.0));
        super::matrices::mat_add_assign(&mut acc, &term);
    }
    acc
}

/// `count` uniform samples of `[-pi, pi]`, endpoints included.
pub fn uniform_symbols(count: usize) -> Vec<f64> {
    let n = count.max(2);
    (0..n)
        .map(|k| -std::f64::consts::PI + 2.0 * std::f64::consts::PI * k as f64 / (n - 1) as f64)
        .collect()
}

/// Largest amplification over the sampled symbols at CFL number `nu`
/// (spectral mapping: the eigenvalues of the fully-discrete matrix are the
/// stability polynomial evaluated at `nu` times the semi-discrete ones).
pub fn max_amplification_1d(
    variant: SchemeVariant,
    rk_order: u32,
    nu: f64,
    xi_samples: usize,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for xi in uniform_symbols(xi_samples) {
        let g = assemble_g_1d(variant, xi);
        for lambda in eigenvalues(&g)? {
            worst = worst.max(rk_stability_scalar(rk_order, lambda * nu).norm());
        }
    }
    Ok(worst)
}

/// Largest CFL number, on the grid `tol, 2 tol, ...`, for which every sampled
/// symbol satisfies the von Neumann bound. Scans upward and stops at the
/// first unstable grid point.
pub fn max_cfl_1d(
    variant: SchemeVariant,
    rk_order: u32,
    xi_samples: usize,
    tol: f64,
) -> Result<f64> {
    // Eigenvalues are independent of nu; compute them once per symbol.
    let mut spectra = Vec::with_capacity(xi_samples);
    for xi in uniform_symbols(xi_samples) {
        spectra.push(eigenvalues(&assemble_g_1d(variant, xi))?);
    }
    let stable = |nu: f64| {
        spectra.iter().flatten().all(|&lambda| {
            rk_stability_scalar(rk_order, lambda * nu).norm() <= 1.0 + STABILITY_SLACK
        })
    };
    let mut nu = 0.0;
    let mut k = 1usize;
    loop {
        let cand = k as f64 * tol;
        if cand > 1.0 || !stable(cand) {
            return Ok(nu);
        }
        nu = cand;
        k += 1;
    }
}

/// One scanned grid point of the 2D stability region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionPoint {
    pub nu_a: f64,
    pub nu_b: f64,
    pub theta: f64,
    pub stable: bool,
}

fn point_is_stable(
    rk_order: u32,
    nu_a: f64,
    nu_b: f64,
    theta: f64,
    symbols: &[f64],
) -> Result<bool> {
    for &xi1 in symbols {
        for &xi2 in symbols {
            // Delta_t * G carries the congruent weights directly in the
            // nondimensional numbers nu_a, nu_b.
            let m = assemble_g_2d(nu_a, nu_b, theta, xi1, xi2);
            for lambda in eigenvalues(&m)? {
                if rk_stability_scalar(rk_order, lambda).norm() > 1.0 + STABILITY_SLACK {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Scan the (nu_a, nu_b) plane for each rotation angle. Points are evaluated
/// concurrently and returned in row-major (theta, nu_a, nu_b) order.
pub fn stability_region_2d(
    rk_order: u32,
    nu_values: &[f64],
    thetas: &[f64],
    symbol_samples: usize,
) -> Result<Vec<RegionPoint>> {
    let symbols = uniform_symbols(symbol_samples);
    let mut tasks = Vec::new();
    for &theta in thetas {
        for &nu_a in nu_values {
            for &nu_b in nu_values {
                tasks.push((nu_a, nu_b, theta));
            }
        }
    }
    tasks
        .into_par_iter()
        .map(|(nu_a, nu_b, theta)| {
            Ok(RegionPoint {
                nu_a,
                nu_b,
                theta,
                stable: point_is_stable(rk_order, nu_a, nu_b, theta, &symbols)?,
            })
        })
        .collect()
}
