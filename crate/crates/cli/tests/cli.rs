//! End-to-end checks of the `afpde` binary: exit codes, CSV schemas,
//! bit-exact round trips, determinism, and config-file merging.

use std::path::{Path, PathBuf};
use std::process::Command;

fn afpde() -> Command {
    Command::new(env!("CARGO_BIN_EXE_afpde"))
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("afpde_test_{tag}_{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn exit_codes() {
    // Missing --problem: configuration error.
    let out = afpde().arg("run").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Unknown flag value.
    let out = afpde().args(["run", "--problem", "bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // Help succeeds.
    let out = afpde().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    // A CFL far beyond the stability threshold must abort numerically.
    let dir = tmp_dir("blowup");
    let out = afpde()
        .args(["run", "--problem", "accuracy1d", "--n", "128", "--cfl", "0.40"])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn run_outputs_and_determinism() {
    let dir_a = tmp_dir("det_a");
    let dir_b = tmp_dir("det_b");
    for dir in [&dir_a, &dir_b] {
        let out = afpde()
            .args([
                "run",
                "--problem",
                "barenblatt",
                "--m",
                "2",
                "--n",
                "50",
                "--tfinal",
                "2",
                "--snapshots",
                "1.5",
            ])
            .arg("--outdir")
            .arg(dir)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{out:?}");
    }
    for name in [
        "solution_t1.000000.csv",
        "solution_t1.500000.csv",
        "solution_t2.000000.csv",
        "trace.csv",
        "meta.json",
    ] {
        let a = read(&dir_a.join(name));
        let b = read(&dir_b.join(name));
        assert_eq!(a, b, "{name} differs between identical runs");
    }

    // Round trip: every value parses back to the identical f64.
    let text = read(&dir_a.join("solution_t2.000000.csv"));
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 3);
        let x: f64 = fields[0].parse().unwrap();
        let u: f64 = fields[2].parse().unwrap();
        let reprinted = format!("{x:.16e}");
        assert_eq!(reprinted, fields[0]);
        assert!(u.is_finite());
        rows += 1;
    }
    // Periodic N = 50: 50 point rows + 50 average rows.
    assert_eq!(rows, 100);
}

#[test]
fn converge_rates_near_four() {
    let dir = tmp_dir("conv");
    let out = afpde()
        .args([
            "converge",
            "--problem",
            "accuracy1d",
            "--meshes",
            "20,40,80",
        ])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = read(&dir.join("converge.csv"));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,l2_avg,rate_avg,l2_pnt,rate_pnt,linf_avg,linf_pnt");
    assert_eq!(lines.len(), 4);
    // First data row has empty rate cells.
    assert!(lines[1].split(',').nth(2).unwrap().is_empty());
    let last: Vec<&str> = lines[3].split(',').collect();
    let rate_avg: f64 = last[2].parse().unwrap();
    let rate_pnt: f64 = last[4].parse().unwrap();
    assert!((3.5..4.5).contains(&rate_avg), "avg rate {rate_avg}");
    assert!((3.5..4.5).contains(&rate_pnt), "pnt rate {rate_pnt}");
}

#[test]
fn cfl1d_table() {
    let dir = tmp_dir("cfl");
    let out = afpde()
        .args(["cfl1d", "--variant", "central4", "--rk", "3"])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = read(&dir.join("cfl1d.csv"));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "variant,rk,max_cfl");
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields[0], "central4");
    assert_eq!(fields[1], "3");
    let c: f64 = fields[2].parse().unwrap();
    assert!((0.27..0.28).contains(&c), "max cfl {c}");
    // Too few symbol samples is a configuration error.
    let out = afpde()
        .args(["cfl1d", "--samples", "100"])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn region2d_small_scan() {
    let dir = tmp_dir("region");
    let out = afpde()
        .args([
            "region2d",
            "--step",
            "0.15",
            "--max",
            "0.3",
            "--samples",
            "10",
        ])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = read(&dir.join("region2d.csv"));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "nu_a,nu_b,theta,stable");
    // 3 nu values squared, 4 angles.
    assert_eq!(lines.len() - 1, 3 * 3 * 4);
    // nu = 0 rows are stable.
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        let (a, b): (f64, f64) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        if a == 0.0 && b == 0.0 {
            assert_eq!(f[3], "1");
        }
    }
}

#[test]
fn solution_csv_2d_schema() {
    let dir = tmp_dir("schema2d");
    let out = afpde()
        .args([
            "run",
            "--problem",
            "accuracy2d",
            "--n",
            "8",
            "--tfinal",
            "0.01",
        ])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = read(&dir.join("solution_t0.010000.csv"));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "x,y,kind,u");
    let mut counts = std::collections::HashMap::new();
    for line in lines {
        let kind = line.split(',').nth(2).unwrap().to_string();
        *counts.entry(kind).or_insert(0usize) += 1;
    }
    // Periodic 8x8: every family carries one entry per cell.
    assert_eq!(counts["avg"], 64);
    assert_eq!(counts["face_x"], 64);
    assert_eq!(counts["face_y"], 64);
    assert_eq!(counts["corner"], 64);
}

#[test]
fn config_file_merge_and_rejection() {
    let dir = tmp_dir("cfg");
    let cfg = dir.join("run.cfg");
    std::fs::write(
        &cfg,
        "# sample config\nproblem = waiting-time\nn = 50\ntfinal = 0.05\n",
    )
    .unwrap();
    // Flag overrides the file's n.
    let out = afpde()
        .arg("--config")
        .arg(&cfg)
        .args(["run", "--n", "40"])
        .arg("--outdir")
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let meta = read(&dir.join("meta.json"));
    assert!(meta.contains("\"n\": 40"), "{meta}");
    assert!(meta.contains("waiting-time"), "{meta}");

    // Unknown keys are rejected.
    let bad = dir.join("bad.cfg");
    std::fs::write(&bad, "problem = waiting-time\nwidgets = 7\n").unwrap();
    let out = afpde()
        .arg("--config")
        .arg(&bad)
        .arg("run")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("widgets"), "{stderr}");
}
