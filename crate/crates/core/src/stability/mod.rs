//! Von Neumann stability laboratory.
//!
//! Assembles the semi-discrete amplification matrices of the scheme (2x2 in
//! 1D, 4x4 in 2D) over the Fourier symbols, applies Runge-Kutta stability
//! polynomials, computes spectral radii, searches maximum stable CFL numbers,
//! and produces the eigenvalue/eigenvector diagnostics of the 1D analysis.

mod diagnostics;
mod matrices;
mod one_d;
mod roots;
mod scan;
mod two_d;

pub use diagnostics::{eigen_diagnostics_1d, fit_power_law, EigenDiagnostics};
pub use matrices::{mat_identity, mat_mul, mat_scale, mat_vec, CMat, C64};
pub use one_d::{assemble_g_1d, assemble_g_1d_dimensional, FourierSymbol};
pub use roots::{eigenvalues, spectral_radius};
pub use scan::{
    max_amplification_1d, max_cfl_1d, rk_stability_matrix, rk_stability_scalar,
    stability_region_2d, uniform_symbols, RegionPoint,
};
pub use two_d::{assemble_g_2d, assemble_g_2d_general};
