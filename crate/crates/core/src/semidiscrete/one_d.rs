//! 1D assembly.
//!
//! Pipeline per evaluation: reconstruct cell-centered `u` (Simpson), apply
//! the variant's gradient operator for `q` at interfaces, recover cell
//! averages of `q` from the exact identity `q_bar_i = (u_right - u_left)/dx`,
//! reconstruct cell-centered `q`, form `f = a(u) q` at interfaces and cell
//! centers, then difference: averages get `(f_right - f_left)/dx`, points get
//! the variant's point-update operator applied to the flux field.

use crate::coefficient::Coefficient;
use crate::error::{Error, Result};
use crate::grid::{BoundaryCondition, Grid1D};
use crate::operators::{d3_variant, d4_central, d4_minus, d4_plus, SchemeVariant, ThirdOrderSide};
use crate::pad::{Family, GhostFill, Pad1};
use crate::reconstruct::cell_center_value_1d;
use crate::state::AFState1D;

/// Time derivatives of the 1D DoFs plus the interface fluxes that produced
/// the average update (the limiter blends those).
#[derive(Debug, Clone)]
pub struct Rhs1D {
    pub d_averages: Vec<f64>,
    pub d_points: Vec<f64>,
    /// High-order flux `f = a(u) q` at every owned interface.
    pub high_order_fluxes: Vec<f64>,
}

/// Evaluate one of the half-index operators at interface `k`, reading
/// interface samples from `pnt` and cell-centered samples from `cell`.
#[inline]
fn half_op(op: HalfOp, pnt: &Pad1, cell: &Pad1, k: isize, dx: f64) -> f64 {
    match op {
        HalfOp::D4Central => d4_central(
            [pnt.at(k - 1), cell.at(k - 1), cell.at(k), pnt.at(k + 1)],
            dx,
        ),
        HalfOp::D4Plus => d4_plus([pnt.at(k - 1), cell.at(k - 1), pnt.at(k), cell.at(k)], dx),
        HalfOp::D4Minus => d4_minus([cell.at(k - 1), pnt.at(k), cell.at(k), pnt.at(k + 1)], dx),
        HalfOp::D3Central => d3_variant(
            ThirdOrderSide::Central,
            &[pnt.at(k - 1), cell.at(k - 1), cell.at(k), pnt.at(k + 1)],
            dx,
        ),
        HalfOp::D3Plus => d3_variant(
            ThirdOrderSide::Plus,
            &[pnt.at(k - 1), cell.at(k - 1), pnt.at(k)],
            dx,
        ),
        HalfOp::D3Minus => d3_variant(
            ThirdOrderSide::Minus,
            &[pnt.at(k), cell.at(k), pnt.at(k + 1)],
            dx,
        ),
    }
}

#[derive(Clone, Copy)]
enum HalfOp {
    D4Central,
    D4Plus,
    D4Minus,
    D3Central,
    D3Plus,
    D3Minus,
}

/// (gradient operator for `q`, point-update operator for the flux field)
fn variant_ops(variant: SchemeVariant) -> (HalfOp, HalfOp) {
    match variant {
        SchemeVariant::Central4 => (HalfOp::D4Central, HalfOp::D4Central),
        SchemeVariant::Alternating4 => (HalfOp::D4Minus, HalfOp::D4Plus),
        SchemeVariant::Central3 => (HalfOp::D3Central, HalfOp::D3Central),
        SchemeVariant::Alternating3 => (HalfOp::D3Minus, HalfOp::D3Plus),
    }
}

struct Fields1D {
    u_pnt: Pad1,
    u_cell: Pad1,
    q_pnt: Pad1,
    n_pnt: usize,
}

fn build_q(
    state: &AFState1D,
    variant: SchemeVariant,
    grid: &Grid1D,
    bc: BoundaryCondition,
) -> Fields1D {
    let n = grid.n_cells();
    let dx = grid.dx();
    let n_pnt = Family::Interface.owned_len(n, bc);
    debug_assert_eq!(state.averages.len(), n);
    debug_assert_eq!(state.points.len(), n_pnt);

    let u_avg = Pad1::from_owned(&state.averages, n, Family::Cell, bc);
    let u_pnt = Pad1::from_owned(&state.points, n, Family::Interface, bc);

    let mut u_cell = Pad1::zeros(n, Family::Cell, bc);
    for c in 0..n as isize {
        u_cell.set(
            c,
            cell_center_value_1d(u_avg.at(c), u_pnt.at(c), u_pnt.at(c + 1)),
        );
    }
    u_cell.fill_ghosts(bc, GhostFill::SameAsOwned);

    let (q_op, _) = variant_ops(variant);
    let mut q_pnt = Pad1::zeros(n, Family::Interface, bc);
    for k in 0..n_pnt as isize {
        q_pnt.set(k, half_op(q_op, &u_pnt, &u_cell, k, dx));
    }
    q_pnt.fill_ghosts(bc, GhostFill::Zero);

    Fields1D {
        u_pnt,
        u_cell,
        q_pnt,
        n_pnt,
    }
}

/// Gradient point field `q` at every owned interface (the variant's operator
/// applied to `u`, with cell-centered samples from the Simpson relation).
pub fn q_points_1d(
    state: &AFState1D,
    variant: SchemeVariant,
    grid: &Grid1D,
    bc: BoundaryCondition,
) -> Result<Vec<f64>> {
    let f = build_q(state, variant, grid, bc);
    Ok(f.q_pnt.owned().to_vec())
}

/// Assemble the full 1D right-hand side.
///
/// For the porous medium coefficient, `a` at interfaces uses the point DoFs
/// and `a` at cell centers uses the Simpson-reconstructed value (clipped to
/// nonnegative inside the power law).
pub fn rhs_1d(
    state: &AFState1D,
    coeff: &Coefficient,
    variant: SchemeVariant,
    grid: &Grid1D,
    bc: BoundaryCondition,
) -> Result<Rhs1D> {
    match coeff {
        Coefficient::ConstScalar(_) | Coefficient::PmePower(_) => {}
        other => {
            return Err(Error::InvalidCoefficient(format!(
                "1D scheme requires a scalar coefficient, got {other:?}"
            )))
        }
    }

    let n = grid.n_cells();
    let dx = grid.dx();
    let fields = build_q(state, variant, grid, bc);
    let Fields1D {
        u_pnt,
        u_cell,
        q_pnt,
        n_pnt,
    } = fields;

    // Cell averages of q from the exact divergence identity, then the
    // Simpson center relation for cell-centered q.
    let mut q_cell = Pad1::zeros(n, Family::Cell, bc);
    for c in 0..n as isize {
        let q_bar = (u_pnt.at(c + 1) - u_pnt.at(c)) / dx;
        q_cell.set(
            c,
            cell_center_value_1d(q_bar, q_pnt.at(c), q_pnt.at(c + 1)),
        );
    }
    q_cell.fill_ghosts(bc, GhostFill::Zero);

    // Fluxes at interfaces and cell centers.
    let mut f_pnt = Pad1::zeros(n, Family::Interface, bc);
    for k in 0..n_pnt as isize {
        let a = coeff.scalar_at(u_pnt.at(k))?;
        f_pnt.set(k, a * q_pnt.at(k));
    }
    f_pnt.fill_ghosts(bc, GhostFill::Zero);

    let mut f_cell = Pad1::zeros(n, Family::Cell, bc);
    for c in 0..n as isize {
        let a = coeff.scalar_at(u_cell.at(c))?;
        f_cell.set(c, a * q_cell.at(c));
    }
    f_cell.fill_ghosts(bc, GhostFill::Zero);

    let mut d_averages = vec![0.0; n];
    for (i, d) in d_averages.iter_mut().enumerate() {
        let k = i as isize;
        *d = (f_pnt.at(k + 1) - f_pnt.at(k)) / dx;
    }

    let (_, point_op) = variant_ops(variant);
    let mut d_points = vec![0.0; n_pnt];
    for (k, d) in d_points.iter_mut().enumerate() {
        *d = half_op(point_op, &f_pnt, &f_cell, k as isize, dx);
    }

    Ok(Rhs1D {
        d_averages,
        d_points,
        high_order_fluxes: f_pnt.owned()[..n_pnt].to_vec(),
    })
}
