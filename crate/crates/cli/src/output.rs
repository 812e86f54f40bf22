//! CSV and metadata emission. Floats print with 17 significant digits so
//! readers round-trip them bit-exactly; identical configurations produce
//! byte-identical files.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use af_core::grid::{BoundaryCondition, Grid1D, Grid2D};
use af_core::norms::ConvergenceRow;
use af_core::stability::RegionPoint;
use af_core::state::{AFState1D, AFState2D};

/// 17 significant digits: enough for exact f64 round-trips.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_solution_csv_1d(
    state: &AFState1D,
    grid: &Grid1D,
    path: &Path,
) -> io::Result<()> {
    let mut text = String::from("x,kind,u\n");
    let n = grid.n_cells();
    for k in 0..state.points.len() {
        let _ = writeln!(
            text,
            "{},point,{}",
            fmt_f64(grid.interface(k as isize)),
            fmt_f64(state.points[k])
        );
        if k < n {
            let _ = writeln!(
                text,
                "{},avg,{}",
                fmt_f64(grid.cell_center(k as isize)),
                fmt_f64(state.averages[k])
            );
        }
    }
    std::fs::write(path, text)
}

pub fn write_solution_csv_2d(
    state: &AFState2D,
    grid: &Grid2D,
    bc: BoundaryCondition,
    path: &Path,
) -> io::Result<()> {
    let mut text = String::from("x,y,kind,u\n");
    let [a_sh, fx_sh, fy_sh, c_sh] = AFState2D::shapes(grid, bc);
    let (gx, gy) = (grid.x_axis(), grid.y_axis());
    for j in 0..a_sh.1 {
        for i in 0..a_sh.0 {
            let _ = writeln!(
                text,
                "{},{},avg,{}",
                fmt_f64(gx.cell_center(i as isize)),
                fmt_f64(gy.cell_center(j as isize)),
                fmt_f64(state.averages[j * a_sh.0 + i])
            );
        }
    }
    for j in 0..fx_sh.1 {
        for k in 0..fx_sh.0 {
            let _ = writeln!(
                text,
                "{},{},face_x,{}",
                fmt_f64(gx.interface(k as isize)),
                fmt_f64(gy.cell_center(j as isize)),
                fmt_f64(state.face_x[j * fx_sh.0 + k])
            );
        }
    }
    for l in 0..fy_sh.1 {
        for i in 0..fy_sh.0 {
            let _ = writeln!(
                text,
                "{},{},face_y,{}",
                fmt_f64(gx.cell_center(i as isize)),
                fmt_f64(gy.interface(l as isize)),
                fmt_f64(state.face_y[l * fy_sh.0 + i])
            );
        }
    }
    for l in 0..c_sh.1 {
        for k in 0..c_sh.0 {
            let _ = writeln!(
                text,
                "{},{},corner,{}",
                fmt_f64(gx.interface(k as isize)),
                fmt_f64(gy.interface(l as isize)),
                fmt_f64(state.corners[l * c_sh.0 + k])
            );
        }
    }
    std::fs::write(path, text)
}

pub fn write_converge_csv(rows: &[ConvergenceRow], path: &Path) -> io::Result<()> {
    let mut text = String::from("n,l2_avg,rate_avg,l2_pnt,rate_pnt,linf_avg,linf_pnt\n");
    let opt = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
    for r in rows {
        let _ = writeln!(
            text,
            "{},{},{},{},{},{},{}",
            r.n,
            fmt_f64(r.report.l2_avg),
            opt(r.rate_l2_avg),
            fmt_f64(r.report.l2_pnt),
            opt(r.rate_l2_pnt),
            fmt_f64(r.report.linf_avg),
            fmt_f64(r.report.linf_pnt),
        );
    }
    std::fs::write(path, text)
}

pub fn write_cfl1d_csv(variant: &str, rk: u32, max_cfl: f64, path: &Path) -> io::Result<()> {
    let text = format!("variant,rk,max_cfl\n{variant},{rk},{}\n", fmt_f64(max_cfl));
    std::fs::write(path, text)
}

pub fn write_region_csv(points: &[RegionPoint], path: &Path) -> io::Result<()> {
    let mut text = String::from("nu_a,nu_b,theta,stable\n");
    for p in points {
        let _ = writeln!(
            text,
            "{},{},{},{}",
            fmt_f64(p.nu_a),
            fmt_f64(p.nu_b),
            fmt_f64(p.theta),
            if p.stable { 1 } else { 0 }
        );
    }
    std::fs::write(path, text)
}

/// Per-step trace of a run: time, step size, minima, total mass.
pub struct TraceRow {
    pub step: usize,
    pub t: f64,
    pub dt: f64,
    pub min_avg: f64,
    pub min_pnt: f64,
    pub mass: f64,
}

pub fn write_trace_csv(rows: &[TraceRow], path: &Path) -> io::Result<()> {
    let mut text = String::from("step,t,dt,min_avg,min_pnt,mass\n");
    for r in rows {
        let _ = writeln!(
            text,
            "{},{},{},{},{},{}",
            r.step,
            fmt_f64(r.t),
            fmt_f64(r.dt),
            fmt_f64(r.min_avg),
            fmt_f64(r.min_pnt),
            fmt_f64(r.mass)
        );
    }
    std::fs::write(path, text)
}

/// Key-value pairs rendered as a JSON object; values are pre-rendered JSON
/// fragments (strings quoted by the caller via `json_str`).
pub fn write_meta(pairs: &[(&str, String)], notes: &[&str], path: &Path) -> io::Result<()> {
    let mut text = String::from("{\n");
    for (k, v) in pairs {
        let _ = writeln!(text, "  \"{k}\": {v},");
    }
    text.push_str("  \"notes\": [\n");
    for (i, n) in notes.iter().enumerate() {
        let comma = if i + 1 == notes.len() { "" } else { "," };
        let _ = writeln!(text, "    \"{n}\"{comma}");
    }
    text.push_str("  ]\n}\n");
    std::fs::write(path, text)
}

pub fn json_str(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "'"))
}
