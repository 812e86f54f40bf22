//! Ghost-padded work arrays used by the scheme assembly.
//!
//! Stencil loops index these with plain signed offsets; the halo is filled
//! once per pass (periodic wrap or far-field constant), so the inner loops
//! contain no branching.

use crate::grid::BoundaryCondition;

pub const GHOST: usize = 2;

/// How a 1D field family maps onto the owned index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cell-indexed: owned `0..n`, period `n`.
    Cell,
    /// Interface-indexed: owned `0..n` periodic (period `n`), `0..=n` otherwise.
    Interface,
}

impl Family {
    pub fn owned_len(&self, n: usize, bc: BoundaryCondition) -> usize {
        match (self, bc.is_periodic()) {
            (Family::Cell, _) => n,
            (Family::Interface, true) => n,
            (Family::Interface, false) => n + 1,
        }
    }
}

/// 1D array with `GHOST` halo slots on each side, indexed by signed offsets.
#[derive(Debug, Clone)]
pub struct Pad1 {
    data: Vec<f64>,
    n: usize,
    family: Family,
}

impl Pad1 {
    pub fn zeros(n: usize, family: Family, bc: BoundaryCondition) -> Self {
        let len = family.owned_len(n, bc) + 2 * GHOST;
        Pad1 {
            data: vec![0.0; len],
            n,
            family,
        }
    }

    pub fn from_owned(owned: &[f64], n: usize, family: Family, bc: BoundaryCondition) -> Self {
        debug_assert_eq!(owned.len(), family.owned_len(n, bc));
        let mut p = Self::zeros(n, family, bc);
        p.data[GHOST..GHOST + owned.len()].copy_from_slice(owned);
        p.fill_ghosts(bc, GhostFill::SameAsOwned);
        p
    }

    #[inline]
    pub fn at(&self, k: isize) -> f64 {
        self.data[(k + GHOST as isize) as usize]
    }

    #[inline]
    pub fn set(&mut self, k: isize, v: f64) {
        self.data[(k + GHOST as isize) as usize] = v;
    }

    pub fn owned(&self) -> &[f64] {
        &self.data[GHOST..self.data.len() - GHOST]
    }

    /// Fill the halo. For periodic grids every family wraps with period `n`.
    /// For far-field boundaries the fill value depends on whether this is a
    /// solution field (constant `c`) or a derived field (zero gradient/flux).
    pub fn fill_ghosts(&mut self, bc: BoundaryCondition, fill: GhostFill) {
        let n = self.n as isize;
        match bc {
            BoundaryCondition::Periodic => {
                for g in 1..=GHOST as isize {
                    self.set(-g, self.at(n - g));
                    self.set(n - 1 + g, self.at(g - 1));
                }
            }
            BoundaryCondition::FarField(c) => {
                let v = match fill {
                    GhostFill::SameAsOwned => c,
                    GhostFill::Zero => 0.0,
                };
                let hi_owned = match self.family {
                    Family::Cell => n - 1,
                    Family::Interface => n,
                };
                for g in 1..=GHOST as isize {
                    self.set(-g, v);
                    self.set(hi_owned + g, v);
                }
            }
        }
    }
}

/// Far-field halo policy for a pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhostFill {
    /// Solution fields: the far-field constant.
    SameAsOwned,
    /// Derived fields (gradients, fluxes): zero in the far field.
    Zero,
}

/// 2D array with a `GHOST` halo per axis. `fx`/`fy` say whether the x/y index
/// is interface-like (one extra owned slot under non-periodic boundaries).
#[derive(Debug, Clone)]
pub struct Pad2 {
    data: Vec<f64>,
    nx: usize,
    ny: usize,
    x_family: Family,
    y_family: Family,
    stride: usize,
}

impl Pad2 {
    pub fn zeros(
        nx: usize,
        ny: usize,
        x_family: Family,
        y_family: Family,
        bc: BoundaryCondition,
    ) -> Self {
        let lx = x_family.owned_len(nx, bc) + 2 * GHOST;
        let ly = y_family.owned_len(ny, bc) + 2 * GHOST;
        Pad2 {
            data: vec![0.0; lx * ly],
            nx,
            ny,
            x_family,
            y_family,
            stride: lx,
        }
    }

    pub fn from_owned(
        owned: &[f64],
        nx: usize,
        ny: usize,
        x_family: Family,
        y_family: Family,
        bc: BoundaryCondition,
    ) -> Self {
        let ox = x_family.owned_len(nx, bc);
        let oy = y_family.owned_len(ny, bc);
        debug_assert_eq!(owned.len(), ox * oy);
        let mut p = Self::zeros(nx, ny, x_family, y_family, bc);
        for j in 0..oy {
            for i in 0..ox {
                p.set(i as isize, j as isize, owned[j * ox + i]);
            }
        }
        p.fill_ghosts(bc, GhostFill::SameAsOwned);
        p
    }

    #[inline]
    fn idx(&self, i: isize, j: isize) -> usize {
        (j + GHOST as isize) as usize * self.stride + (i + GHOST as isize) as usize
    }

    #[inline]
    pub fn at(&self, i: isize, j: isize) -> f64 {
        self.data[self.idx(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: isize, j: isize, v: f64) {
        let k = self.idx(i, j);
        self.data[k] = v;
    }

    pub fn owned_to_vec(&self, bc: BoundaryCondition) -> Vec<f64> {
        let ox = self.x_family.owned_len(self.nx, bc);
        let oy = self.y_family.owned_len(self.ny, bc);
        let mut out = Vec::with_capacity(ox * oy);
        for j in 0..oy {
            for i in 0..ox {
                out.push(self.at(i as isize, j as isize));
            }
        }
        out
    }

    /// Fill the full halo ring (edges and corners of the padded rectangle).
    pub fn fill_ghosts(&mut self, bc: BoundaryCondition, fill: GhostFill) {
        let g = GHOST as isize;
        let (nx, ny) = (self.nx as isize, self.ny as isize);
        match bc {
            BoundaryCondition::Periodic => {
                // Wrap x for all owned rows, then wrap y for all columns
                // (including the x-halo), covering the corners.
                for j in 0..ny {
                    for gg in 1..=g {
                        self.set(-gg, j, self.at(nx - gg, j));
                        self.set(nx - 1 + gg, j, self.at(gg - 1, j));
                    }
                }
                for i in -g..nx + g {
                    for gg in 1..=g {
                        self.set(i, -gg, self.at(i, ny - gg));
                        self.set(i, ny - 1 + gg, self.at(i, gg - 1));
                    }
                }
            }
            BoundaryCondition::FarField(c) => {
                let v = match fill {
                    GhostFill::SameAsOwned => c,
                    GhostFill::Zero => 0.0,
                };
                let hx = match self.x_family {
                    Family::Cell => nx - 1,
                    Family::Interface => nx,
                };
                let hy = match self.y_family {
                    Family::Cell => ny - 1,
                    Family::Interface => ny,
                };
                for j in -g..hy + g + 1 {
                    for i in -g..hx + g + 1 {
                        let ghost = i < 0 || i > hx || j < 0 || j > hy;
                        if ghost {
                            self.set(i, j, v);
                        }
                    }
                }
            }
        }
    }
}
