//! 1D amplification matrices for the four point-update variants.

use super::matrices::{CMat, C64};
use crate::operators::SchemeVariant;

/// A single Fourier mode: `xi = omega * dx` in `[-pi, pi]`, with unit phase
/// factor `t = exp(i xi)`.
#[derive(Debug, Clone, Copy)]
pub struct FourierSymbol {
    pub xi: f64,
}

impl FourierSymbol {
    pub fn new(xi: f64) -> Self {
        FourierSymbol { xi }
    }

    pub fn t(&self) -> C64 {
        C64::from_polar(1.0, self.xi)
    }
}

/// Semi-discrete amplification matrix acting on the Fourier coefficients of
/// `[average, point]`, in nondimensional units `a = dx = 1`.
pub fn assemble_g_1d(variant: SchemeVariant, xi: f64) -> CMat<2> {
    let t = C64::from_polar(1.0, xi);
    let ti = t.conj(); // 1/t on the unit circle
    let t2 = t * t;
    let ti2 = ti * ti;
    let one = C64::ONE;

    match variant {
        SchemeVariant::Central4 => [
            [
                2.0 * (ti - 2.0 + t),
                0.5 * (-ti2 + ti + one - t),
            ],
            [
                -ti + one + t - t2,
                0.25 * (ti2 + 8.0 * ti - 18.0 + 8.0 * t + t2),
            ],
        ],
        SchemeVariant::Alternating4 => [
            [
                ti - 4.0 + 3.0 * t,
                (-ti2 + 9.0 * ti - 3.0 - 5.0 * t) / 6.0,
            ],
            [
                (-5.0 * ti + 7.0 + 25.0 * t - 3.0 * t2) / 6.0,
                (5.0 * ti2 + 76.0 * ti - 234.0 + 4.0 * t + 5.0 * t2) / 36.0,
            ],
        ],
        SchemeVariant::Central3 => [
            [
                3.0 * (ti - 2.0 + t),
                -ti2 + ti + one - t,
            ],
            [
                3.0 * (-ti + one + t - t2),
                ti2 + 3.0 * ti - 8.0 + 3.0 * t + t2,
            ],
        ],
        SchemeVariant::Alternating3 => [
            [
                6.0 * (t - 1.0),
                2.0 * (2.0 * ti - 1.0 - t),
            ],
            [
                12.0 * (one + 2.0 * t),
                -2.0 * (ti + 13.0 + 4.0 * t),
            ],
        ],
    }
}

/// Dimensional amplification matrix `(a / dx^2) * G(omega * dx)`.
pub fn assemble_g_1d_dimensional(variant: SchemeVariant, omega: f64, a: f64, dx: f64) -> CMat<2> {
    let g = assemble_g_1d(variant, omega * dx);
    super::matrices::mat_scale(&g, C64::new(a / (dx * dx), 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn norm(m: &CMat<2>) -> f64 {
        m.iter()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max)
    }

    #[test]
    fn symbol_phase_is_unit_modulus() {
        for xi in [-std::f64::consts::PI, -1.3, 0.0, 0.7, 2.9] {
            let t = FourierSymbol::new(xi).t();
            assert!((t.norm() - 1.0).abs() < 1e-15, "xi={xi}");
        }
    }

    #[test]
    fn central_variants_vanish_at_zero_mode() {
        for variant in [SchemeVariant::Central4, SchemeVariant::Central3] {
            let g = assemble_g_1d(variant, 0.0);
            assert!(norm(&g) < 1e-15, "{variant:?}: {g:?}");
        }
    }

    #[test]
    fn constants_are_steady_for_all_variants() {
        // At xi = 0 a constant state has equal average and point coefficients;
        // G * (1, 1) must vanish even where individual entries do not (the
        // alternating variants have nonzero rows at t = 1).
        for variant in SchemeVariant::ALL {
            let g = assemble_g_1d(variant, 0.0);
            for row in g {
                let s = row[0] + row[1];
                assert!(s.norm() < 1e-13, "{variant:?}: row sum {s}");
            }
        }
    }

    #[test]
    fn central4_at_pi_is_minus_eight_diagonal() {
        let g = assemble_g_1d(SchemeVariant::Central4, std::f64::consts::PI);
        assert!((g[0][0] - C64::new(-8.0, 0.0)).norm() < 1e-13);
        assert!((g[1][1] - C64::new(-8.0, 0.0)).norm() < 1e-13);
        assert!(g[0][1].norm() < 1e-13);
        assert!(g[1][0].norm() < 1e-13);
    }

    #[test]
    fn central4_characteristic_coefficients() {
        // det(lambda I - G) = lambda^2 + c1 lambda + c2 with
        // |c1| = 2 (9 + cos xi) sin^2(xi/2) and c2 = 64 sin^4(xi/2)
        // in units a = dx = 1.
        for &xi in &[0.3, 1.0, 2.0, 2.9] {
            let g = assemble_g_1d(SchemeVariant::Central4, xi);
            let tr = g[0][0] + g[1][1];
            let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
            let s2 = (xi / 2.0).sin().powi(2);
            let c1_mag = 2.0 * (9.0 + xi.cos()) * s2;
            let c2 = 64.0 * s2 * s2;
            assert!(
                (tr.norm() - c1_mag).abs() < 1e-12 * c1_mag,
                "xi={xi}: |tr|={} want {c1_mag}",
                tr.norm()
            );
            assert!(tr.im.abs() < 1e-12, "xi={xi}");
            assert!((det.re - c2).abs() < 1e-12 * c2.max(1.0), "xi={xi}");
            assert!(det.im.abs() < 1e-12 * c2.max(1.0), "xi={xi}");
        }
    }
}
