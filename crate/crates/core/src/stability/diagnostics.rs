//! Eigen-diagnostics of the 1D central scheme: physical/spurious eigenvalue
//! split and the projection of the discrete initial data onto the eigenbasis.

use super::matrices::{CMat, C64};
use super::one_d::assemble_g_1d_dimensional;
use super::roots::quadratic_roots;
use crate::operators::SchemeVariant;

/// Eigen-decomposition data for one Fourier mode of the dimensional 1D
/// amplification matrix.
///
/// `lambda_physical` is the root nearest the analytic decay rate
/// `-a omega^2`; the other root is spurious. `v_physical`/`v_spurious` are
/// the components of the discrete initial coefficients `u_hat0` in the
/// eigenbasis (`None` when the eigenbasis is numerically degenerate, which
/// happens at `xi = +-pi` where the two roots collide).
#[derive(Debug, Clone)]
pub struct EigenDiagnostics {
    pub lambda_physical: C64,
    pub lambda_spurious: C64,
    pub v_physical: Option<[C64; 2]>,
    pub v_spurious: Option<[C64; 2]>,
    pub u_hat0: [C64; 2],
}

fn eigenvector(g: &CMat<2>, lambda: C64) -> [C64; 2] {
    // Null vector of (G - lambda I); take the larger of the two row choices.
    let r1 = [g[0][1], lambda - g[0][0]];
    let r2 = [lambda - g[1][1], g[1][0]];
    let n1 = r1[0].norm() + r1[1].norm();
    let n2 = r2[0].norm() + r2[1].norm();
    let v = if n1 >= n2 { r1 } else { r2 };
    let scale = v[0].norm().max(v[1].norm());
    [v[0] / scale, v[1] / scale]
}

/// Discrete initial coefficients of the unit Fourier mode: cell-average and
/// interface-point transforms `[2 sin(xi/2)/xi, exp(i xi/2)]`.
pub fn discrete_initial_coefficients(xi: f64) -> [C64; 2] {
    let avg = if xi == 0.0 {
        C64::ONE
    } else {
        C64::new(2.0 * (xi / 2.0).sin() / xi, 0.0)
    };
    [avg, C64::from_polar(1.0, xi / 2.0)]
}

/// Eigenvalues and initial-data projection of the dimensional central-scheme
/// amplification matrix at mode `xi = omega dx`.
pub fn eigen_diagnostics_1d(xi: f64, a: f64, dx: f64) -> EigenDiagnostics {
    let omega = xi / dx;
    let g = assemble_g_1d_dimensional(SchemeVariant::Central4, omega, a, dx);
    let tr = g[0][0] + g[1][1];
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    let roots = quadratic_roots(-tr, det);

    let target = C64::new(-a * omega * omega, 0.0);
    let (lambda_physical, lambda_spurious) =
        if (roots[0] - target).norm() <= (roots[1] - target).norm() {
            (roots[0], roots[1])
        } else {
            (roots[1], roots[0])
        };

    let u_hat0 = discrete_initial_coefficients(xi);

    let v1 = eigenvector(&g, lambda_physical);
    let v2 = eigenvector(&g, lambda_spurious);
    // Solve [v1 v2] c = u_hat0 by Cramer; a tiny determinant flags a
    // (near-)degenerate eigenbasis and the projections are unavailable.
    let det_v = v1[0] * v2[1] - v2[0] * v1[1];
    let scale = (v1[0].norm() + v1[1].norm()) * (v2[0].norm() + v2[1].norm());
    if det_v.norm() <= 1e-8 * scale.max(1e-300) {
        return EigenDiagnostics {
            lambda_physical,
            lambda_spurious,
            v_physical: None,
            v_spurious: None,
            u_hat0,
        };
    }
    let c1 = (u_hat0[0] * v2[1] - v2[0] * u_hat0[1]) / det_v;
    let c2 = (v1[0] * u_hat0[1] - u_hat0[0] * v1[1]) / det_v;
    EigenDiagnostics {
        lambda_physical,
        lambda_spurious,
        v_physical: Some([c1 * v1[0], c1 * v1[1]]),
        v_spurious: Some([c2 * v2[0], c2 * v2[1]]),
        u_hat0,
    }
}

/// Least-squares fit of `y = coeff * x^slope` through `(x, y)` pairs (all
/// positive), returning `(slope, coeff)`.
pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in lx.iter().zip(&ly) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    let slope = num / den;
    let coeff = (my - slope * mx).exp();
    (slope, coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn physical_eigenvalue_approaches_heat_rate() {
        // lambda1 -> -a omega^2 with quartic convergence in dx; the spurious
        // root's leading term is -4 a omega^2.
        let (a, omega) = (1.0, 1.0);
        let mut prev_err = f64::INFINITY;
        for &dx in &[0.2, 0.1, 0.05] {
            let d = eigen_diagnostics_1d(omega * dx, a, dx);
            let err = (d.lambda_physical - C64::new(-a * omega * omega, 0.0)).norm();
            // Quartic decay: halving dx divides the error by ~16.
            assert!(err < prev_err / 12.0 || prev_err == f64::INFINITY);
            prev_err = err;
            let spur = d.lambda_spurious.re;
            assert!(
                (spur + 4.0 * a * omega * omega).abs() < 1.0 * dx * dx,
                "dx={dx}: lambda2={spur}"
            );
        }
    }

    #[test]
    fn expansion_coefficients() {
        // |lambda1 + a omega^2| ~ (a omega^6 / 540) dx^4 and
        // |lambda2 + 4 a omega^2| ~ (2 a omega^4 / 3) dx^2.
        let (a, omega) = (1.0, 1.0);
        let dxs = [0.2, 0.1, 0.05];
        let e1: Vec<f64> = dxs
            .iter()
            .map(|&dx| (eigen_diagnostics_1d(omega * dx, a, dx).lambda_physical.re + 1.0).abs())
            .collect();
        let (s1, c1) = fit_power_law(&dxs, &e1);
        assert!((s1 - 4.0).abs() < 0.2, "slope {s1}");
        assert!((c1 - 1.0 / 540.0).abs() < 0.2 / 540.0, "coeff {c1}");

        let e2: Vec<f64> = dxs
            .iter()
            .map(|&dx| (eigen_diagnostics_1d(omega * dx, a, dx).lambda_spurious.re + 4.0).abs())
            .collect();
        let (s2, c2) = fit_power_law(&dxs, &e2);
        assert!((s2 - 2.0).abs() < 0.2, "slope {s2}");
        assert!((c2 - 2.0 / 3.0).abs() < 0.2 * 2.0 / 3.0, "coeff {c2}");
    }

    #[test]
    fn spurious_projection_is_fourth_order() {
        // ||V2|| ~ sqrt(1/3240^2 + 1/1620^2) omega^4 dx^4 for u_hat0 = 1.
        let (a, omega) = (1.0, 1.0);
        let dxs = [0.2, 0.1, 0.05];
        let norms: Vec<f64> = dxs
            .iter()
            .map(|&dx| {
                let d = eigen_diagnostics_1d(omega * dx, a, dx);
                let v2 = d.v_spurious.expect("non-degenerate");
                (v2[0].norm_sqr() + v2[1].norm_sqr()).sqrt()
            })
            .collect();
        let (slope, coeff) = fit_power_law(&dxs, &norms);
        assert!((slope - 4.0).abs() < 0.2, "slope {slope}");
        let want = (1.0f64 / 3240.0_f64.powi(2) + 1.0 / 1620.0_f64.powi(2)).sqrt();
        assert!(
            (coeff - want).abs() < 0.25 * want,
            "coeff {coeff}, want {want}"
        );
        // Component pattern: first entry ~ -dx^4/3240, second ~ +dx^4/1620.
        let d = eigen_diagnostics_1d(0.05, a, 0.05);
        let v2 = d.v_spurious.unwrap();
        let dx4 = 0.05f64.powi(4);
        assert!((v2[0].re + dx4 / 3240.0).abs() < 0.05 * dx4 / 3240.0 + 1e-16);
        assert!((v2[1].re - dx4 / 1620.0).abs() < 0.05 * dx4 / 1620.0 + 1e-16);
    }

    #[test]
    fn degenerate_mode_flagged() {
        // At xi = pi the discriminant vanishes (double root -8 a / dx^2).
        let d = eigen_diagnostics_1d(std::f64::consts::PI, 1.0, 0.1);
        assert!(d.v_physical.is_none());
        assert!(d.v_spurious.is_none());
        assert!((d.lambda_physical.re - d.lambda_spurious.re).abs() < 1e-6 * 800.0);
    }

    #[test]
    fn physical_projection_approximates_initial_data() {
        let d = eigen_diagnostics_1d(0.1, 1.0, 0.1);
        let v1 = d.v_physical.unwrap();
        for (i, (a, b)) in v1.iter().zip(&d.u_hat0).enumerate() {
            assert!((a - b).norm() < 1e-4, "component {i}");
        }
    }
}
