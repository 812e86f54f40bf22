//! Diffusion coefficient models.
//!
//! The porous-medium power law evaluates as `a(u) = m * max(u,0)^(m-1)`; the
//! clip keeps the coefficient nonnegative when unlimited runs produce small
//! undershoots, and matches how cell-centered reconstructions are handled.

use crate::error::{Error, Result};

/// Diffusion coefficient `a(u)` (scalar form) or matrix `A` in 2D.
pub enum Coefficient {
    /// Constant scalar `a >= 0` (isotropic in 2D).
    ConstScalar(f64),
    /// Constant symmetric positive semi-definite 2x2 matrix.
    ConstMatrix([[f64; 2]; 2]),
    /// Spatially varying SPSD matrix field, evaluated pointwise at DoF and
    /// reconstruction coordinates.
    FieldMatrix(Box<dyn Fn(f64, f64) -> [[f64; 2]; 2] + Send + Sync>),
    /// Porous medium power law `a(u) = m u^(m-1)`, `m >= 2`.
    PmePower(u32),
}

impl std::fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficient::ConstScalar(a) => write!(f, "ConstScalar({a})"),
            Coefficient::ConstMatrix(m) => write!(f, "ConstMatrix({m:?})"),
            Coefficient::FieldMatrix(_) => write!(f, "FieldMatrix(<fn>)"),
            Coefficient::PmePower(m) => write!(f, "PmePower({m})"),
        }
    }
}

/// Spectral radius of a symmetric 2x2 matrix.
pub fn spd_spectral_radius(m: &[[f64; 2]; 2]) -> f64 {
    let mean = 0.5 * (m[0][0] + m[1][1]);
    let half_diff = 0.5 * (m[0][0] - m[1][1]);
    let disc = (half_diff * half_diff + m[0][1] * m[1][0]).max(0.0).sqrt();
    (mean + disc).abs().max((mean - disc).abs())
}

fn check_spsd(m: &[[f64; 2]; 2]) -> Result<()> {
    if (m[0][1] - m[1][0]).abs() > 1e-12 * spd_spectral_radius(m).max(1.0) {
        return Err(Error::InvalidCoefficient(format!(
            "matrix {m:?} is not symmetric"
        )));
    }
    let tr = m[0][0] + m[1][1];
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if tr < -1e-14 || det < -1e-12 * tr.abs().max(1.0) {
        return Err(Error::InvalidCoefficient(format!(
            "matrix {m:?} has a negative eigenvalue"
        )));
    }
    Ok(())
}

impl Coefficient {
    pub fn validate(&self) -> Result<()> {
        match self {
            Coefficient::ConstScalar(a) => {
                if *a >= 0.0 && a.is_finite() {
                    Ok(())
                } else {
                    Err(Error::InvalidCoefficient(format!(
                        "scalar coefficient must be >= 0, got {a}"
                    )))
                }
            }
            Coefficient::ConstMatrix(m) => check_spsd(m),
            Coefficient::FieldMatrix(_) => Ok(()),
            Coefficient::PmePower(m) => {
                if *m >= 2 {
                    Ok(())
                } else {
                    Err(Error::InvalidCoefficient(format!(
                        "porous-medium exponent must be >= 2, got {m}"
                    )))
                }
            }
        }
    }

    /// True when `a` depends on the solution value.
    pub fn is_nonlinear(&self) -> bool {
        matches!(self, Coefficient::PmePower(_))
    }

    /// Scalar coefficient at solution value `u` (1D form). Matrix variants
    /// are rejected.
    pub fn scalar_at(&self, u: f64) -> Result<f64> {
        match self {
            Coefficient::ConstScalar(a) => Ok(*a),
            Coefficient::PmePower(m) => Ok(pme_a(*m, u)),
            other => Err(Error::InvalidCoefficient(format!(
                "{other:?} is not a scalar coefficient"
            ))),
        }
    }

    /// Matrix coefficient at coordinates `(x, y)` and solution value `u`.
    pub fn matrix_at(&self, x: f64, y: f64, u: f64) -> [[f64; 2]; 2] {
        match self {
            Coefficient::ConstScalar(a) => [[*a, 0.0], [0.0, *a]],
            Coefficient::ConstMatrix(m) => *m,
            Coefficient::FieldMatrix(f) => f(x, y),
            Coefficient::PmePower(m) => {
                let a = pme_a(*m, u);
                [[a, 0.0], [0.0, a]]
            }
        }
    }
}

/// `a(u) = m * max(u, 0)^(m-1)`.
#[inline]
pub fn pme_a(m: u32, u: f64) -> f64 {
    m as f64 * u.max(0.0).powi(m as i32 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pme_clips_negative_argument() {
        assert_eq!(pme_a(2, 0.5), 1.0);
        assert_eq!(pme_a(2, -0.5), 0.0);
        assert_eq!(pme_a(5, 1.0), 5.0);
        assert_eq!(pme_a(6, 2.0), 6.0 * 32.0);
    }

    #[test]
    fn spectral_radius_formula() {
        let m = [[0.02, 0.01], [0.01, 0.04]];
        let want = 0.03 + 0.01 * 2.0_f64.sqrt();
        assert!((spd_spectral_radius(&m) - want).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        assert!(Coefficient::ConstScalar(-1.0).validate().is_err());
        assert!(Coefficient::PmePower(1).validate().is_err());
        assert!(Coefficient::ConstMatrix([[1.0, 2.0], [2.0, 1.0]])
            .validate()
            .is_err()); // indefinite
        assert!(Coefficient::ConstMatrix([[0.02, 0.01], [0.01, 0.04]])
            .validate()
            .is_ok());
    }
}
