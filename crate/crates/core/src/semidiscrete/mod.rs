//! Semi-discrete right-hand sides of the active flux scheme.
//!
//! Cell averages evolve by flux differences of `f = a(u) q` at interfaces
//! (Simpson face integrals in 2D), point values by the variant's finite
//! difference operator applied to the flux field, with `q` obtained from the
//! companion operator applied to `u` and eliminated at assembly time.

mod one_d;
mod two_d;

pub use one_d::{q_points_1d, rhs_1d, Rhs1D};
pub use two_d::{rhs_2d, Rhs2D};
