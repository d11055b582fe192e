use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nodus::io::frames::write_stack;
use nodus_core::blurvision::{synth_frames, SynthConfig};
use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn nodus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nodus")).args(args).output().expect("binary runs")
}

fn with_config(out: &Path, args: &[&str]) -> Output {
    let cfg = data("config.json");
    let mut all = vec!["--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()];
    all.extend_from_slice(args);
    nodus(&all)
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Rows of a CSV file as header-keyed maps of numbers (non-numeric cells skipped).
fn csv_rows(path: &Path) -> Vec<std::collections::HashMap<String, f64>> {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    lines
        .map(|l| header.iter().zip(l.split(',')).filter_map(|(h, v)| Some((h.to_string(), v.parse().ok()?))).collect())
        .collect()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn fit_writes_report() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["fit"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let report = json(&tmp.path().join("fit.json"));
    assert_eq!(report["segments"].as_array().unwrap().len(), 2);
    assert_eq!(report["segments"][1]["order"], 4);
}

#[test]
fn fit_missing_geometry_is_input_error() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["fit", "--geometry", "/nonexistent/blade.csv"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("/nonexistent/blade.csv"));
}

#[test]
fn fit_order_too_high_names_segment() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["fit", "--orders", "6,4"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("segment 0"), "{}", stderr(&o));
}

#[test]
fn missing_config_and_bad_usage() {
    let tmp = TempDir::new().unwrap();
    let o = nodus(&["--out", tmp.path().to_str().unwrap(), "solve", "--rigid", "--rpm", "1000"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--config"));
    assert_eq!(code(&nodus(&["solve", "--rigid", "--tombo", "--rpm", "1"])), 2);
    assert_eq!(code(&nodus(&["frobnicate"])), 2);
}

#[test]
fn rigid_at_rest_is_all_zero() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["solve", "--rigid", "--rpm", "0"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = csv_rows(&tmp.path().join("solve.csv"));
    for k in ["f_n", "f_t", "f_l", "f_d", "t_or"] {
        assert_eq!(rows[0][k], 0.0);
    }
}

#[test]
fn stiff_tombo_matches_rigid() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    assert_eq!(code(&with_config(a.path(), &["solve", "--rigid", "--rpm", "2500"])), 0);
    let o = with_config(b.path(), &["solve", "--tombo", "--rpm", "2500", "--e-pa", "1e9", "--g-pa", "1e9"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let (r, t) = (&csv_rows(&a.path().join("solve.csv"))[0], &csv_rows(&b.path().join("solve.csv"))[0]);
    for k in ["f_n", "f_t", "f_l", "f_d"] {
        assert!((r[k] / t[k] - 1.0).abs() < 1e-3, "{k}: {} vs {}", r[k], t[k]);
    }
}

#[test]
fn tombo_regression_snapshot() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["solve", "--tombo", "--rpm", "2500"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(tmp.path().join("solve.csv")).unwrap();
    assert!(text.lines().nth(1).unwrap().ends_with(",true,12"), "{text}");
    let row = &csv_rows(&tmp.path().join("solve.csv"))[0];
    // fixed after the first verified run on the sample blade with the DS10 nodus
    for (k, v) in [("f_t", 0.05490311833889567), ("beta_deg", 1.435887440840992), ("gamma_deg", 7.696038644347402)] {
        assert!((row[k] / v - 1.0).abs() < 1e-9, "{k}: {}", row[k]);
    }
    let summary = json(&tmp.path().join("solve.json"));
    assert_eq!(summary["converged"], true);
    assert!(summary["residual_n"].as_f64().unwrap() < 1e-6);
}

#[test]
fn unconverged_solve_warns_but_succeeds() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["--max-iters", "2", "solve", "--tombo", "--rpm", "3000"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("warning"));
    assert!(fs::read_to_string(tmp.path().join("solve.csv")).unwrap().contains(",false,2"));
}

#[test]
fn invalid_solver_flags() {
    let tmp = TempDir::new().unwrap();
    assert_eq!(code(&with_config(tmp.path(), &["--tol", "0", "solve", "--rigid", "--rpm", "100"])), 2);
    assert_eq!(code(&with_config(tmp.path(), &["--quad", "2", "solve", "--rigid", "--rpm", "100"])), 2);
    assert_eq!(code(&with_config(tmp.path(), &["solve", "--rigid", "--rpm", "-5"])), 2);
}

#[test]
fn rigid_sweep_has_constant_lift_over_drag() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["sweep", "--rigid", "--step", "500"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = csv_rows(&tmp.path().join("sweep.csv"));
    assert_eq!(rows.len(), 24);
    let e0 = rows[0]["eps_lod"];
    assert!(rows.iter().all(|r| (r["eps_lod"] / e0 - 1.0).abs() < 1e-9));
    assert_eq!(json(&tmp.path().join("sweep.json"))["max_thrust"]["at_boundary"], true);
}

#[test]
fn stiffer_materials_raise_the_thrust_maximum() {
    let mut prev = (0.0, 0.0);
    for name in ["ds10.txt", "ds20.txt", "ds30.txt"] {
        let tmp = TempDir::new().unwrap();
        let m = data(name);
        let o = with_config(tmp.path(), &["sweep", "--step", "250", "--material", m.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let s = json(&tmp.path().join("sweep.json"));
        let (t, w) = (s["max_thrust"]["value"].as_f64().unwrap(), s["max_thrust"]["omega_rpm"].as_f64().unwrap());
        assert_eq!(s["max_thrust"]["at_boundary"], false);
        assert!(t > prev.0 && w > prev.1, "{name}");
        prev = (t, w);
    }
}

#[test]
fn narrow_grid_flags_boundary_maximum() {
    let tmp = TempDir::new().unwrap();
    let o = with_config(tmp.path(), &["sweep", "--start", "500", "--stop", "1500", "--step", "100"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("grid boundary"));
    assert_eq!(json(&tmp.path().join("sweep.json"))["max_thrust"]["at_boundary"], true);
}

#[test]
fn sweep_output_is_byte_identical() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    for t in [&a, &b] {
        assert_eq!(code(&with_config(t.path(), &["sweep", "--step", "200"])), 0);
    }
    for f in ["sweep.csv", "sweep.json"] {
        assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap());
    }
}

#[test]
fn beta_on_sample_frames() {
    let tmp = TempDir::new().unwrap();
    let frames = data("frames_beta10");
    let o = nodus(&["--out", tmp.path().to_str().unwrap(), "beta", frames.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows = csv_rows(&tmp.path().join("beta.csv"));
    assert_eq!(rows.len(), 2);
    for r in &rows {
        assert!((r["beta_deg"] - 10.0).abs() < 1.0, "{}", r["beta_deg"]);
        assert!((r["omega_rpm_est"] / 2500.0 - 1.0).abs() < 0.02);
    }
}

#[test]
fn beta_on_pgm_frames_with_noise() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path().join("frames");
    let (stack, truth) = synth_frames(&SynthConfig::example(20f64.to_radians(), 2.0, 5)).unwrap();
    write_stack(&dir, &stack, false).unwrap();
    let o = nodus(&["--out", tmp.path().to_str().unwrap(), "--seed", "9", "beta", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    for r in csv_rows(&tmp.path().join("beta.csv")) {
        assert!((r["beta_deg"] - truth.beta.to_degrees()).abs() < 1.0, "{}", r["beta_deg"]);
    }
}

#[test]
fn beta_input_errors() {
    let tmp = TempDir::new().unwrap();
    let empty = tmp.path().join("empty");
    fs::create_dir(&empty).unwrap();
    let out = tmp.path().to_str().unwrap();
    assert_eq!(code(&nodus(&["--out", out, "beta", empty.to_str().unwrap()])), 2);

    let dir = tmp.path().join("frames");
    let (stack, _) = synth_frames(&SynthConfig::example(0.0, 0.0, 1)).unwrap();
    write_stack(&dir, &stack, false).unwrap();
    fs::write(dir.join("metadata.txt"), "fps = 960\nmm_per_px = 0.25\nr_rest_mm = 114.3\n").unwrap();
    let o = nodus(&["--out", out, "beta", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("r_nodus_mm"), "{}", stderr(&o));
}

#[test]
fn react_recovers_and_is_deterministic() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    let ev = data("event.json");
    for t in [&a, &b] {
        let o = nodus(&["--out", t.path().to_str().unwrap(), "react", ev.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
    }
    let m = json(&a.path().join("recovery.json"));
    assert_eq!(m["crashed"], false);
    assert!(m["dh_fall_m"].as_f64().unwrap() <= 0.5);
    assert!((m["setpoint_m"][1].as_f64().unwrap() - 0.9).abs() < 1e-12);
    for f in ["trajectory.csv", "recovery.json"] {
        assert_eq!(fs::read(a.path().join(f)).unwrap(), fs::read(b.path().join(f)).unwrap());
    }
    let traj = fs::read_to_string(a.path().join("trajectory.csv")).unwrap();
    assert!(traj.starts_with("t,x,y,z,vx,vy,vz\n"));
}

#[test]
fn react_zero_velocity_is_model_error() {
    let tmp = TempDir::new().unwrap();
    let ev = tmp.path().join("ev.json");
    fs::write(&ev, r#"{"x_c_m": [0, 1.7, -2], "v_pre_m_s": [0, 0, 0], "d_r_m": 0.8}"#).unwrap();
    let o = nodus(&["--out", tmp.path().to_str().unwrap(), "react", ev.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    fs::write(&ev, r#"{"x_c_m": [0, 1.7, -2], "v_pre_m_s": [0, 1, 0]}"#).unwrap();
    assert_eq!(code(&nodus(&["--out", tmp.path().to_str().unwrap(), "react", ev.to_str().unwrap()])), 2);
}

#[test]
fn metrics_normalizes_sample_table() {
    let tmp = TempDir::new().unwrap();
    let (t, i) = (data("characteristics.csv"), data("impact.csv"));
    let o = nodus(&[
        "--out",
        tmp.path().to_str().unwrap(),
        "metrics",
        t.to_str().unwrap(),
        "--impact",
        i.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = fs::read_to_string(tmp.path().join("normalized.csv")).unwrap();
    let conf5 = text.lines().find(|l| l.starts_with("5,")).unwrap();
    let thrust: f64 = conf5.split(',').nth(1).unwrap().parse().unwrap();
    assert!((thrust - 0.997).abs() < 1e-3);
    let mean = text.lines().last().unwrap();
    assert!(mean.starts_with("Mean,"));
    let collision: f64 = mean.split(',').nth(3).unwrap().parse().unwrap();
    assert!((collision - 0.472).abs() < 2e-3);
    let impact = csv_rows(&tmp.path().join("impact.csv"));
    assert!((impact[1]["force_per_thickness_n_mm"] / 54.4 - 1.0).abs() < 0.01);

    let o = nodus(&["--out", tmp.path().to_str().unwrap(), "metrics", t.to_str().unwrap(), "--reference", "99"]);
    assert_eq!(code(&o), 1);
}
