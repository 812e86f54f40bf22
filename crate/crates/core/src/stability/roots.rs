//! Eigenvalues of small complex matrices via characteristic polynomial
//! roots: closed form for 2x2, Faddeev-LeVerrier plus Durand-Kerner iteration
//! (with a Newton polish) for 3x3 and 4x4.

use super::matrices::{mat_mul, trace, CMat, C64};
use crate::error::{Error, Result};

/// Roots of `lambda^2 + b lambda + c`, cancellation-safe.
pub fn quadratic_roots(b: C64, c: C64) -> [C64; 2] {
    let disc = b * b - 4.0 * c;
    let mut s = disc.sqrt();
    // Pick the sqrt branch aligned with b so that b + s does not cancel.
    if b.re * s.re + b.im * s.im < 0.0 {
        s = -s;
    }
    let big = -(b + s) / 2.0;
    if big.norm() == 0.0 {
        [C64::ZERO, C64::ZERO]
    } else {
        [big, c / big]
    }
}

/// Monic characteristic polynomial coefficients `[1, c1, ..., cN]`
/// (descending powers) by the Faddeev-LeVerrier recurrence.
pub fn char_poly<const N: usize>(m: &CMat<N>) -> Vec<C64> {
    let mut coeffs = vec![C64::ONE];
    let mut mk = *m;
    for k in 1..=N {
        let ck = -trace(&mk) / k as f64;
        coeffs.push(ck);
        if k < N {
            let mut shifted = mk;
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] += ck;
            }
            mk = mat_mul(m, &shifted);
        }
    }
    coeffs
}

fn poly_eval(coeffs: &[C64], x: C64) -> C64 {
    coeffs.iter().fold(C64::ZERO, |acc, &c| acc * x + c)
}

fn poly_derive(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    coeffs[..n]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (n - i) as f64)
        .collect()
}

/// All roots of a monic polynomial by Durand-Kerner iteration.
pub fn durand_kerner(coeffs: &[C64]) -> Result<Vec<C64>> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let radius = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut roots: Vec<C64> = (0..n)
        .map(|k| seed.powu(k as u32 + 1) * radius)
        .collect();

    let tol = 1e-13;
    let mut converged = false;
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let xk = roots[k];
            let mut denom = C64::ONE;
            for (j, &xj) in roots.iter().enumerate() {
                if j != k {
                    denom *= xk - xj;
                }
            }
            if denom.norm() == 0.0 {
                // Perturb coincident iterates and keep going.
                roots[k] += C64::new(1e-8 * radius, 1e-8 * radius);
                max_step = f64::INFINITY;
                continue;
            }
            let w = poly_eval(coeffs, xk) / denom;
            roots[k] = xk - w;
            max_step = max_step.max(w.norm() / (1.0 + xk.norm()));
        }
        if max_step <= tol {
            converged = true;
            break;
        }
    }
    if !converged {
        // Accept if residuals are already tiny (multiple roots converge
        // slowly in the update norm while the residual is at rounding level).
        let scale = radius.powi(n as i32).max(1.0);
        let worst = roots
            .iter()
            .map(|&r| poly_eval(coeffs, r).norm())
            .fold(0.0, f64::max);
        if worst > 1e-8 * scale {
            return Err(Error::RootFindingFailed(format!(
                "Durand-Kerner residual {worst:.3e} after 500 iterations"
            )));
        }
    }

    // Newton polish.
    let deriv = poly_derive(coeffs);
    for r in &mut roots {
        for _ in 0..3 {
            let d = poly_eval(&deriv, *r);
            if d.norm() == 0.0 {
                break;
            }
            let step = poly_eval(coeffs, *r) / d;
            *r -= step;
            if step.norm() <= 1e-15 * (1.0 + r.norm()) {
                break;
            }
        }
    }
    Ok(roots)
}

/// Eigenvalues of an N x N complex matrix (N <= 4 in this crate).
pub fn eigenvalues<const N: usize>(m: &CMat<N>) -> Result<Vec<C64>> {
    match N {
        0 => Ok(Vec::new()),
        1 => Ok(vec![m[0][0]]),
        2 => {
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            Ok(quadratic_roots(-tr, det).to_vec())
        }
        _ => durand_kerner(&char_poly(m)),
    }
}

/// Spectral radius: maximum eigenvalue modulus.
pub fn spectral_radius<const N: usize>(m: &CMat<N>) -> Result<f64> {
    Ok(eigenvalues(m)?
        .iter()
        .map(|l| l.norm())
        .fold(0.0, f64::max))
}
