//! Degrees of freedom of the active flux scheme: cell averages plus point
//! values at cell interfaces (1D) or at face centers and corners (2D).
//!
//! Point storage convention: entry `k` of an interface-indexed family sits at
//! coordinate `min + k * h` along that axis. Periodic grids store one period
//! (`n` entries, entry `n` wraps to entry `0`); non-periodic grids store
//! `n + 1` entries. 2D families are row-major with the x index fastest.

use crate::grid::{BoundaryCondition, Grid1D, Grid2D};

/// 1D state: `averages[i]` over cell `i`, `points[k]` at interface `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct AFState1D {
    pub averages: Vec<f64>,
    pub points: Vec<f64>,
}

impl AFState1D {
    pub fn zeros(grid: &Grid1D, bc: BoundaryCondition) -> Self {
        let n = grid.n_cells();
        let np = if bc.is_periodic() { n } else { n + 1 };
        AFState1D {
            averages: vec![0.0; n],
            points: vec![0.0; np],
        }
    }

    pub fn min_dof(&self) -> f64 {
        let a = self.averages.iter().copied().fold(f64::INFINITY, f64::min);
        let p = self.points.iter().copied().fold(f64::INFINITY, f64::min);
        a.min(p)
    }

    pub fn max_dof(&self) -> f64 {
        let a = self
            .averages
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let p = self
            .points
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        a.max(p)
    }

    /// Total mass `sum(averages) * dx`, compensated summation.
    pub fn mass(&self, grid: &Grid1D) -> f64 {
        kahan_sum(&self.averages) * grid.dx()
    }
}

/// 2D state. Shapes (periodic): `averages` nx*ny, `face_x` nx*ny (x-interface
/// k, y-cell j), `face_y` nx*ny (x-cell i, y-interface l), `corners` nx*ny.
/// Non-periodic grids carry one extra slot per interface-indexed axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AFState2D {
    pub averages: Vec<f64>,
    pub face_x: Vec<f64>,
    pub face_y: Vec<f64>,
    pub corners: Vec<f64>,
}

impl AFState2D {
    pub fn shapes(grid: &Grid2D, bc: BoundaryCondition) -> [(usize, usize); 4] {
        let (nx, ny) = (grid.n_x(), grid.n_y());
        let (ix, iy) = if bc.is_periodic() {
            (nx, ny)
        } else {
            (nx + 1, ny + 1)
        };
        [(nx, ny), (ix, ny), (nx, iy), (ix, iy)]
    }

    pub fn zeros(grid: &Grid2D, bc: BoundaryCondition) -> Self {
        let [a, fx, fy, c] = Self::shapes(grid, bc);
        AFState2D {
            averages: vec![0.0; a.0 * a.1],
            face_x: vec![0.0; fx.0 * fx.1],
            face_y: vec![0.0; fy.0 * fy.1],
            corners: vec![0.0; c.0 * c.1],
        }
    }

    fn families(&self) -> [&Vec<f64>; 4] {
        [&self.averages, &self.face_x, &self.face_y, &self.corners]
    }

    pub fn min_dof(&self) -> f64 {
        self.families()
            .iter()
            .flat_map(|f| f.iter().copied())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_dof(&self) -> f64 {
        self.families()
            .iter()
            .flat_map(|f| f.iter().copied())
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Total mass `sum(averages) * dx * dy`, compensated summation.
    pub fn mass(&self, grid: &Grid2D) -> f64 {
        kahan_sum(&self.averages) * grid.dx() * grid.dy()
    }
}

/// Linear-space operations shared by both state dimensions; the RK stepper is
/// generic over this.
pub trait StateOps: Clone {
    /// `self += c * other` componentwise.
    fn scaled_add(&mut self, c: f64, other: &Self);
    /// Convex relaxation `base + c * (target - base)` componentwise. The
    /// incremental form keeps fixed points of the stage map bitwise fixed,
    /// and stays nonnegative for nonnegative inputs when `0 <= c <= 1`.
    fn blend_toward(base: &Self, c: f64, target: &Self) -> Self;
    fn all_finite(&self) -> bool;
    fn min_dof_value(&self) -> f64;
}

fn slice_scaled_add(dst: &mut [f64], c: f64, src: &[f64]) {
    debug_assert_eq!(dst.len(), src.len());
    for (d, s) in dst.iter_mut().zip(src) {
        *d += c * s;
    }
}

fn slice_blend(base: &[f64], c: f64, target: &[f64]) -> Vec<f64> {
    debug_assert_eq!(base.len(), target.len());
    base.iter()
        .zip(target)
        .map(|(b, t)| b + c * (t - b))
        .collect()
}

impl StateOps for AFState1D {
    fn scaled_add(&mut self, c: f64, other: &Self) {
        slice_scaled_add(&mut self.averages, c, &other.averages);
        slice_scaled_add(&mut self.points, c, &other.points);
    }

    fn blend_toward(base: &Self, c: f64, target: &Self) -> Self {
        AFState1D {
            averages: slice_blend(&base.averages, c, &target.averages),
            points: slice_blend(&base.points, c, &target.points),
        }
    }

    fn all_finite(&self) -> bool {
        self.averages.iter().chain(&self.points).all(|v| v.is_finite())
    }

    fn min_dof_value(&self) -> f64 {
        self.min_dof()
    }
}

impl StateOps for AFState2D {
    fn scaled_add(&mut self, c: f64, other: &Self) {
        slice_scaled_add(&mut self.averages, c, &other.averages);
        slice_scaled_add(&mut self.face_x, c, &other.face_x);
        slice_scaled_add(&mut self.face_y, c, &other.face_y);
        slice_scaled_add(&mut self.corners, c, &other.corners);
    }

    fn blend_toward(base: &Self, c: f64, target: &Self) -> Self {
        AFState2D {
            averages: slice_blend(&base.averages, c, &target.averages),
            face_x: slice_blend(&base.face_x, c, &target.face_x),
            face_y: slice_blend(&base.face_y, c, &target.face_y),
            corners: slice_blend(&base.corners, c, &target.corners),
        }
    }

    fn all_finite(&self) -> bool {
        self.families()
            .iter()
            .all(|f| f.iter().all(|v| v.is_finite()))
    }

    fn min_dof_value(&self) -> f64 {
        self.min_dof()
    }
}

pub(crate) fn kahan_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let y = v - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    sum
}
