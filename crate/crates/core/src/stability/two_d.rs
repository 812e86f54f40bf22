//! 2D amplification matrix acting on the Fourier coefficients of
//! `[average, face_x, face_y, corner]`.
//!
//! The full matrix is the weighted sum of four base matrices, one per entry
//! of the diffusion matrix: `G = a11/dx^2 G1 + a12/(dx dy) G2 +
//! a21/(dx dy) G3 + a22/dy^2 G4`. The entries below are cross-checked
//! against the real-space assembly by the discrete Fourier-mode tests.

use super::matrices::{mat_add_assign, mat_scale, CMat, C64};

fn g1(x: C64, y: C64) -> CMat<4> {
    let xm = x - 1.0;
    let xm2 = xm * xm;
    let xp = x + 1.0;
    let yp = y + 1.0;
    let x2 = x * x;
    [
        [
            2.0 * xm2 / x,
            -xm2 * xp / (3.0 * x2),
            C64::ZERO,
            -xm2 * xp * yp / (12.0 * x2 * y),
        ],
        [
            -3.0 * xm2 * xp / (2.0 * x),
            xm2 * (x * (x + 10.0) + 1.0) / (4.0 * x2),
            xm2 * xp * yp / (9.0 * x * y),
            xm2 * (x * (x + 3.0) + 1.0) * yp / (18.0 * x2 * y),
        ],
        [
            C64::ZERO,
            C64::ZERO,
            xm2 * (x * (x + 66.0) + 1.0) / (36.0 * x2),
            -4.0 * xm2 * xp / (9.0 * x2),
        ],
        [
            C64::ZERO,
            C64::ZERO,
            -4.0 * xm2 * xp / (9.0 * x),
            xm2 * (x * (x + 66.0) + 1.0) / (36.0 * x2),
        ],
    ]
}

fn g2(x: C64, y: C64) -> CMat<4> {
    let xm = x - 1.0;
    let ym = y - 1.0;
    let x2m1 = x * x - 1.0;
    let y2m1 = y * y - 1.0;
    let x2 = x * x;
    let y2 = y * y;
    [
        [
            C64::ZERO,
            xm * y2m1 / (9.0 * x * y),
            C64::ZERO,
            -xm * ym * ((y - 30.0) * y + 1.0) / (36.0 * x * y2),
        ],
        [
            -xm * y2m1 / y,
            x2m1 * y2m1 / (12.0 * x * y),
            xm * ym * (y * (y + 14.0) + 1.0) / (6.0 * y2),
            x2m1 * ym * ym * ym / (24.0 * x * y2),
        ],
        [
            -x2m1 * ym / (2.0 * x),
            xm * (x * (x + 34.0) + 1.0) * ym / (18.0 * x2),
            x2m1 * y2m1 / (12.0 * x * y),
            xm * ((x - 14.0) * x + 1.0) * y2m1 / (72.0 * x2 * y),
        ],
        [
            4.0 * xm * ym,
            -2.0 * x2m1 * ym / (3.0 * x),
            -2.0 * xm * y2m1 / (3.0 * y),
            -x2m1 * y2m1 / (12.0 * x * y),
        ],
    ]
}

fn g3(x: C64, y: C64) -> CMat<4> {
    let xm = x - 1.0;
    let ym = y - 1.0;
    let x2m1 = x * x - 1.0;
    let y2m1 = y * y - 1.0;
    let x2 = x * x;
    let y2 = y * y;
    [
        [
            C64::ZERO,
            C64::ZERO,
            x2m1 * ym / (9.0 * x * y),
            -xm * ((x - 30.0) * x + 1.0) * ym / (36.0 * x2 * y),
        ],
        [
            -xm * y2m1 / (2.0 * y),
            x2m1 * y2m1 / (12.0 * x * y),
            xm * ym * (y * (y + 34.0) + 1.0) / (18.0 * y2),
            x2m1 * ym * ((y - 14.0) * y + 1.0) / (72.0 * x * y2),
        ],
        [
            -x2m1 * ym / x,
            xm * (x * (x + 14.0) + 1.0) * ym / (6.0 * x2),
            x2m1 * y2m1 / (12.0 * x * y),
            xm * xm * xm * y2m1 / (24.0 * x2 * y),
        ],
        [
            4.0 * xm * ym,
            -2.0 * x2m1 * ym / (3.0 * x),
            -2.0 * xm * y2m1 / (3.0 * y),
            -x2m1 * y2m1 / (12.0 * x * y),
        ],
    ]
}

fn g4(x: C64, y: C64) -> CMat<4> {
    let ym = y - 1.0;
    let ym2 = ym * ym;
    let yp = y + 1.0;
    let xp = x + 1.0;
    let y2 = y * y;
    [
        [
            2.0 * ym2 / y,
            C64::ZERO,
            -ym2 * yp / (3.0 * y2),
            -xp * ym2 * yp / (12.0 * x * y2),
        ],
        [
            C64::ZERO,
            ym2 * (y * (y + 66.0) + 1.0) / (36.0 * y2),
            C64::ZERO,
            -4.0 * ym2 * yp / (9.0 * y2),
        ],
        [
            -3.0 * ym2 * yp / (2.0 * y),
            xp * ym2 * yp / (9.0 * x * y),
            ym2 * (y * (y + 10.0) + 1.0) / (4.0 * y2),
            xp * ym2 * (y * (y + 3.0) + 1.0) / (18.0 * x * y2),
        ],
        [
            C64::ZERO,
            -4.0 * ym2 * yp / (9.0 * y),
            C64::ZERO,
            ym2 * (y * (y + 66.0) + 1.0) / (36.0 * y2),
        ],
    ]
}

/// Amplification matrix for an arbitrary constant diffusion matrix on an
/// anisotropic grid.
pub fn assemble_g_2d_general(a: &[[f64; 2]; 2], dx: f64, dy: f64, xi1: f64, xi2: f64) -> CMat<4> {
    let x = C64::from_polar(1.0, xi1);
    let y = C64::from_polar(1.0, xi2);
    let mut g = mat_scale(&g1(x, y), C64::new(a[0][0] / (dx * dx), 0.0));
    mat_add_assign(&mut g, &mat_scale(&g2(x, y), C64::new(a[0][1] / (dx * dy), 0.0)));
    mat_add_assign(&mut g, &mat_scale(&g3(x, y), C64::new(a[1][0] / (dx * dy), 0.0)));
    mat_add_assign(&mut g, &mat_scale(&g4(x, y), C64::new(a[1][1] / (dy * dy), 0.0)));
    g
}

/// Diffusion matrix from its congruent diagonalization: eigenvalues `a, b`
/// and rotation angle `theta`.
pub fn diffusion_matrix_from_congruent(a: f64, b: f64, theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    let d = b - a;
    [
        [a + d * s * s, d * c * s],
        [d * c * s, a + d * c * c],
    ]
}

/// Amplification matrix in `dx = dy = 1` units for the congruent data
/// `(a, b, theta)`.
pub fn assemble_g_2d(a: f64, b: f64, theta: f64, xi1: f64, xi2: f64) -> CMat<4> {
    let m = diffusion_matrix_from_congruent(a, b, theta);
    assemble_g_2d_general(&m, 1.0, 1.0, xi1, xi2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_norm(m: &CMat<4>) -> f64 {
        m.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn vanishes_at_zero_symbol() {
        let g = assemble_g_2d(1.3, 0.4, 0.7, 0.0, 0.0);
        assert!(max_norm(&g) < 1e-14, "{g:?}");
    }

    #[test]
    fn isotropic_case_independent_of_theta() {
        let a = 0.8;
        let g0 = assemble_g_2d(a, a, 0.0, 1.1, -0.6);
        for &theta in &[0.3, std::f64::consts::FRAC_PI_4, 1.2] {
            let g = assemble_g_2d(a, a, theta, 1.1, -0.6);
            for i in 0..4 {
                for j in 0..4 {
                    assert!((g[i][j] - g0[i][j]).norm() < 1e-13, "entry ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn pure_x_mode_with_diagonal_matrix_reduces_to_g1() {
        // theta = 0 gives A = diag(a, b); with xi2 = 0 the mixed and y
        // matrices vanish, leaving a * G1(t_x, 1).
        let (a, b) = (0.9, 0.35);
        let xi1 = 1.7;
        let g = assemble_g_2d(a, b, 0.0, xi1, 0.0);
        let x = C64::from_polar(1.0, xi1);
        let base = g1(x, C64::ONE);
        for i in 0..4 {
            for j in 0..4 {
                let want = base[i][j] * a;
                assert!(
                    (g[i][j] - want).norm() <= 1e-13 * want.norm().max(1.0),
                    "entry ({i},{j}): {} vs {want}",
                    g[i][j]
                );
            }
        }
    }

    #[test]
    fn pure_x_mode_structure() {
        // For A = I and xi2 = 0: the average-average entry coincides with the
        // 1D one (the x-flux difference sees the same average coupling), and
        // the (face_y, corner) rows decouple from (average, face_x).
        let xi = 2.1;
        let g = assemble_g_2d(1.0, 1.0, 0.0, xi, 0.0);
        let g1d = crate::stability::assemble_g_1d(crate::operators::SchemeVariant::Central4, xi);
        assert!((g[0][0] - g1d[0][0]).norm() < 1e-13);
        assert!(g[2][0].norm() < 1e-14);
        assert!(g[2][1].norm() < 1e-14);
        assert!(g[3][0].norm() < 1e-14);
        assert!(g[3][1].norm() < 1e-14);
        assert!(g[0][2].norm() < 1e-14);
    }
}
