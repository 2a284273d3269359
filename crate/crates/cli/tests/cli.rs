//! End-to-end tests of the `cyclo` binary: output contracts, exit codes,
//! and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn cyclo() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclo"))
}

fn run(args: &[&str]) -> Output {
    cyclo().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cyclo-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn data_rows(path: &Path) -> Vec<String> {
    let text = std::fs::read_to_string(path).unwrap();
    assert!(
        text.starts_with("# command: "),
        "CSV must open with the metadata block"
    );
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(str::to_owned)
        .collect()
}

#[test]
fn numfun_table_anchors() {
    let v = stdout_json(&run(&["numfun", "--fn", "carmichael", "--n", "8"]));
    assert_eq!(v["n"], 8);
    assert_eq!(v["value"], 2);
    assert_eq!(v["meta"]["seed"], 0);

    let v = stdout_json(&run(&["numfun", "--fn", "mult-order", "--a", "3", "--n", "7"]));
    assert_eq!(v["value"], 6);

    let v = stdout_json(&run(&["numfun", "--fn", "factorize", "--n", "12"]));
    assert_eq!(v["value"], serde_json::json!([[2, 2], [3, 1]]));
}

#[test]
fn numfun_domain_errors_exit_2() {
    let out = run(&["numfun", "--fn", "totient", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["numfun", "--fn", "mult-order", "--a", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    // Missing companion argument is also a parameter problem.
    let out = run(&["numfun", "--fn", "mult-order", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kms_surface_contract() {
    let dir = temp_dir("surface");
    let path = dir.join("surf.csv");
    let out = run(&[
        "kms-surface",
        "--q-max",
        "40",
        "--beta-min",
        "0.5",
        "--beta-max",
        "1.5",
        "--beta-steps",
        "41",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let rows = data_rows(&path);
    assert_eq!(rows.len(), 40 * 41, "one row per (q, beta) cell");
    for row in &rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 3);
        let q: u64 = fields[0].parse().unwrap();
        let beta: f64 = fields[1].parse().unwrap();
        let psi: f64 = fields[2].parse().unwrap();
        if q == 1 {
            assert_eq!(psi, 1.0);
        }
        if beta == 1.0 && q >= 2 {
            assert_eq!(psi, 0.0, "critical line must be exactly zero (q={q})");
        }
    }
}

#[test]
fn kms_surface_gnuplot_blocks() {
    let dir = temp_dir("gnuplot");
    let path = dir.join("surf.csv");
    run(&[
        "kms-surface",
        "--q-max",
        "3",
        "--beta-steps",
        "3",
        "--gnuplot",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    let blanks = text.lines().filter(|l| l.is_empty()).count();
    assert_eq!(blanks, 2, "one separator between consecutive q blocks");
}

#[test]
fn identical_configs_are_byte_identical() {
    let dir = temp_dir("determinism");
    let run_to = |name: &str| {
        let path = dir.join(name);
        run(&[
            "kms-surface",
            "--q-max",
            "12",
            "--beta-steps",
            "11",
            "--out",
            path.to_str().unwrap(),
        ]);
        std::fs::read(&path).unwrap()
    };
    assert_eq!(run_to("a.csv"), run_to("b.csv"));
}

#[test]
fn staircase_columns_and_locks() {
    let dir = temp_dir("staircase");
    let path = dir.join("st.csv");
    run(&[
        "staircase",
        "--c",
        "0.8",
        "--points",
        "101",
        "--n-iter",
        "2000",
        "--out",
        path.to_str().unwrap(),
    ]);
    let rows = data_rows(&path);
    assert_eq!(rows.len(), 101);
    // Endpoints of the canonical window lock to 0/1 and 1/1.
    assert!(rows[0].ends_with(",0,1"), "Omega=0 row: {}", rows[0]);
    assert!(rows[100].ends_with(",1,1"), "Omega=1 row: {}", rows[100]);
    // Unlocked rows leave the rational columns empty.
    assert!(
        rows.iter().any(|r| r.ends_with(",,")),
        "expected some unlocked rows"
    );
}

#[test]
fn adler_trajectory_and_summary() {
    let dir = temp_dir("adler");
    let path = dir.join("tr.csv");
    let out = run(&[
        "adler",
        "--coupling",
        "1",
        "--detuning",
        "2",
        "--t-end",
        "100",
        "--dt",
        "0.005",
        "--out",
        path.to_str().unwrap(),
    ]);
    let v = stdout_json(&out);
    let analytic = v["analytic_mean_frequency"].as_f64().unwrap();
    let measured = v["mean_frequency"].as_f64().unwrap();
    assert!((analytic - 3.0f64.sqrt()).abs() < 1e-12);
    assert!((measured - analytic).abs() / analytic < 0.01);

    let rows = data_rows(&path);
    assert_eq!(rows.len(), 20_001, "t_end/dt + 1 samples");
    assert!(rows[0].starts_with("0.0000000000000000e0,"));
}

#[test]
fn mangoldt_map_emits_beat_and_spectrum() {
    let dir = temp_dir("mangoldt");
    let beat = dir.join("beat.csv");
    let spec = dir.join("spec.csv");
    let out = run(&[
        "mangoldt-map",
        "--n-iter",
        "2048",
        "--out",
        beat.to_str().unwrap(),
        "--spectrum",
        spec.to_str().unwrap(),
    ]);
    let v = stdout_json(&out);
    assert!(v["winding"].is_f64());
    assert_eq!(data_rows(&beat).len(), 2048);
    assert_eq!(data_rows(&spec).len(), 1024);
}

#[test]
fn carmichael_spectrum_files() {
    let dir = temp_dir("spectrum");
    let out = run(&[
        "carmichael-spectrum",
        "--t-max",
        "1024",
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(data_rows(&dir.join("carmichael_series.csv")).len(), 1024);
    assert_eq!(data_rows(&dir.join("carmichael_periodogram.csv")).len(), 512);
    let fit: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.join("carmichael_slopefit.json")).unwrap(),
    )
    .unwrap();
    for key in [
        "exponent",
        "intercept",
        "f_lo",
        "f_hi",
        "residual_rms",
        "n_points",
        "growth_exponent",
    ] {
        assert!(!fit[key].is_null(), "slope-fit JSON missing {key}");
    }
}

#[test]
fn verify_operators_suite_passes() {
    let out = run(&["verify", "--suite", "operators"]);
    let v = stdout_json(&out);
    assert_eq!(v["failed"], 0);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.iter().any(|n| n.contains("eigenresidual")));
}

#[test]
fn verify_dynamics_suite_passes() {
    let out = run(&["verify", "--suite", "dynamics"]);
    let v = stdout_json(&out);
    assert_eq!(v["failed"], 0);
}

#[test]
fn operators_verify_dump_shape() {
    let dir = temp_dir("dump");
    let path = dir.join("mu.csv");
    run(&[
        "operators-verify",
        "--dump",
        "mu",
        "--q",
        "7",
        "--a",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    let rows = data_rows(&path);
    assert_eq!(rows.len(), 49, "dense 7x7 dump");
    // mu_3 |1> = |3>: the (3, 1) entry is 1.
    assert!(rows
        .iter()
        .any(|r| r.starts_with("3,1,1.0000000000000000e0,")));
}

#[test]
fn unwritable_output_exits_1() {
    let dir = temp_dir("unwritable");
    let blocker = dir.join("blocker");
    std::fs::write(&blocker, "not a directory").unwrap();
    let path = blocker.join("sub").join("out.csv");
    let out = run(&[
        "kms-surface",
        "--q-max",
        "2",
        "--beta-steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "I/O failure maps to exit 1");
}

#[test]
fn out_dir_env_var_is_honored() {
    let dir = temp_dir("envvar");
    let out = cyclo()
        .args(["kms-surface", "--q-max", "2", "--beta-steps", "3"])
        .env("CYCLO_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.join("kms_surface.csv").exists());
}
