//! Uniform Cartesian grids and boundary conditions.
//!
//! Interface `k` of a 1D grid sits at `x_min + k*dx`; cell `i` spans
//! `[x_min + i*dx, x_min + (i+1)*dx)` with center `x_min + (i+1/2)*dx`.
//! The 2D grid is the tensor product of two such axes.

use crate::error::{Error, Result};

/// Uniform 1D grid with `n_cells` cells on `[x_min, x_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    n_cells: usize,
    dx: f64,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_cells: usize) -> Result<Self> {
        if n_cells == 0 {
            return Err(Error::InvalidGrid("n_cells must be positive".into()));
        }
        let dx = (x_max - x_min) / n_cells as f64;
        if !dx.is_finite() || dx <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "cell width must be positive and finite, got {dx}"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_cells,
            dx,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Coordinate of interface `k` (may be outside `0..=n_cells` for ghosts).
    pub fn interface(&self, k: isize) -> f64 {
        self.x_min + k as f64 * self.dx
    }

    /// Coordinate of the center of cell `i`.
    pub fn cell_center(&self, i: isize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx
    }
}

/// Uniform 2D Cartesian grid with `n_x * n_y` cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    x_axis: Grid1D,
    y_axis: Grid1D,
}

impl Grid2D {
    pub fn new(
        x_min: f64,
        x_max: f64,
        y_min: f64,
        y_max: f64,
        n_x: usize,
        n_y: usize,
    ) -> Result<Self> {
        Ok(Self {
            x_axis: Grid1D::new(x_min, x_max, n_x)?,
            y_axis: Grid1D::new(y_min, y_max, n_y)?,
        })
    }

    pub fn x_axis(&self) -> &Grid1D {
        &self.x_axis
    }

    pub fn y_axis(&self) -> &Grid1D {
        &self.y_axis
    }

    pub fn n_x(&self) -> usize {
        self.x_axis.n_cells()
    }

    pub fn n_y(&self) -> usize {
        self.y_axis.n_cells()
    }

    pub fn dx(&self) -> f64 {
        self.x_axis.dx()
    }

    pub fn dy(&self) -> f64 {
        self.y_axis.dx()
    }
}

/// Boundary handling for ghost degrees of freedom.
///
/// `FarField(c)` fills every ghost average and ghost point with the constant
/// `c`; derived quantities (gradients, fluxes) are zero in the far field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Periodic,
    FarField(f64),
}

impl BoundaryCondition {
    pub fn is_periodic(&self) -> bool {
        matches!(self, BoundaryCondition::Periodic)
    }
}
