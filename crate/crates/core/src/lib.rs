//! Fourth-order active flux finite-volume method for 1D/2D parabolic
//! problems, with a von Neumann stability laboratory and positivity
//! preservation for the porous medium equation.
//!
//! The scheme co-evolves cell averages (standard finite volume update, hence
//! conservative) and interface point values (compact fourth-order central
//! finite differences applied to the primal variable and its eliminated
//! gradient). Explicit SSP-RK3 supplies the time integration; a parametrized
//! flux limiter blends in a first-order positivity-preserving flux for
//! degenerate diffusion problems.

pub mod coefficient;
pub mod error;
pub mod grid;
pub mod limiter;
pub mod norms;
pub mod operators;
mod pad;
pub mod problems;
pub mod project;
pub mod reconstruct;
pub mod semidiscrete;
pub mod stability;
pub mod state;
pub mod time;

pub use coefficient::Coefficient;
pub use error::{Error, Result};
pub use grid::{BoundaryCondition, Grid1D, Grid2D};
pub use operators::SchemeVariant;
pub use semidiscrete::{rhs_1d, rhs_2d, Rhs1D, Rhs2D};
pub use state::{AFState1D, AFState2D};
pub use time::{RkScheme, StepControl};
