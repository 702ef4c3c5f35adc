//! End-to-end CLI behavior: exit codes, config precedence, per-point error
//! collection, output schemas.

use std::process::{Command, Output};

fn qshje(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshje"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn classical_trajectory_w_equals_x() {
    let out = qshje(&["trajectory", "--abc", "1,1,0", "--x-grid", "0:1:11"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "x,W,Wx,Wxx,Wxxx,quantum_term,t_minus_t0,S,residual"
    );
    for line in lines {
        let cols: Vec<f64> = line
            .split(',')
            .map(|c| c.parse::<f64>().unwrap())
            .collect();
        assert!((cols[0] - cols[1]).abs() < 1e-12, "W != x in {line}");
    }
}

#[test]
fn malformed_microstate_exits_2_naming_invariant() {
    let out = qshje(&["trajectory", "--abc", "1,1,2", "--x-grid", "0:1:3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_str(&out);
    assert!(
        err.contains("positive definite"),
        "stderr should name the violated invariant: {err}"
    );
}

#[test]
fn empty_hbar_grid_exits_2() {
    let out = qshje(&[
        "sweep", "--abc", "1,1,0", "--x", "1", "--hbar-grid", "1e-1:1e-3:0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = qshje(&[
        "sweep", "--abc", "1,1,0", "--x", "1", "--hbar-grid", "1e-1:1e-3:1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn forbidden_region_average_exits_2() {
    let out = qshje(&[
        "average",
        "--potential",
        "step",
        "--U",
        "1",
        "--abc",
        "1,1,0",
        "--x",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("no oscillation cycle"));
}

#[test]
fn both_microstate_sources_rejected() {
    let out = qshje(&[
        "trajectory",
        "--abc",
        "1,1,0",
        "--initials",
        "0,1,0",
        "--x",
        "0.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("exactly one"));
}

#[test]
fn initials_resolve_to_classical_triple() {
    // free particle, Wx0 = sqrt(2mE) = 1, Wxx0 = 0 -> (1, 1, 0)
    let out = qshje(&[
        "trajectory",
        "--initials",
        "0.3,1,0",
        "--x",
        "0.8",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let abc = json["config"]["abc"].as_array().unwrap();
    assert!((abc[0].as_f64().unwrap() - 1.0).abs() < 1e-10);
    assert!((abc[1].as_f64().unwrap() - 1.0).abs() < 1e-10);
    assert!(abc[2].as_f64().unwrap().abs() < 1e-10);
    assert_eq!(json["schema"], 1);
}

#[test]
fn trajectory_json_reports_residual_footer() {
    let out = qshje(&[
        "trajectory",
        "--potential",
        "linear",
        "--f",
        "1",
        "--abc",
        "2,1,0.5",
        "--hbar",
        "0.05",
        "--x-grid",
        "0.1:0.9:25",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let max_residual = json["summary"]["max_abs_residual"].as_f64().unwrap();
    assert!(max_residual < 1e-7, "max residual {max_residual}");
    assert_eq!(json["summary"]["points_failed"], 0);
}

#[test]
fn per_point_errors_are_collected_not_fatal() {
    // step interior grid reaching into x < 0: bad points are reported on
    // stderr, good points still produced, exit 0
    let out = qshje(&[
        "trajectory",
        "--potential",
        "step",
        "--U",
        "1",
        "--abc",
        "1,1,0",
        "--hbar",
        "0.1",
        "--x-grid=-0.2:0.6:5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr_str(&out).contains("warning"));
    let text = stdout_str(&out);
    assert_eq!(text.lines().count(), 1 + 4); // header + surviving points
}

#[test]
fn all_points_failing_exits_3() {
    let out = qshje(&[
        "trajectory",
        "--potential",
        "step",
        "--U",
        "1",
        "--abc",
        "1,1,0",
        "--x-grid=-2:-1:4",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn config_file_merges_under_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "abc=2,1,0\nhbar=0.5\nx-grid=0:1:4\n# comment\n").unwrap();
    // flag overrides the file's microstate; the file supplies the rest
    let out = qshje(&[
        "trajectory",
        "--config",
        path.to_str().unwrap(),
        "--abc",
        "1,1,0",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(json["config"]["abc"][0], 1.0);
    assert_eq!(json["config"]["hbar"], 0.5);

    // unknown keys are config errors
    std::fs::write(&path, "abz=1,1,0\n").unwrap();
    let out = qshje(&["trajectory", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_csv_columns_are_stable() {
    let out = qshje(&[
        "sweep",
        "--potential",
        "step",
        "--U",
        "1",
        "--abc",
        "1,1,0",
        "--x",
        "1",
        "--hbar-grid",
        "1e-1:1e-2:5",
        "--observable",
        "quantum_term",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert_eq!(
        text.lines().next().unwrap(),
        "hbar,x,observable,value,envelope_min,envelope_max"
    );
    assert_eq!(text.lines().count(), 1 + 5);
}

#[test]
fn unknown_observable_exits_2() {
    let out = qshje(&[
        "sweep", "--abc", "1,1,0", "--x", "1", "--hbar-grid", "1e-1:1e-2:5",
        "--observable", "bogus",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eta_sweep_rejects_conflicting_observable() {
    let out = qshje(&[
        "sweep", "--eta", "hbar", "--x", "1", "--hbar-grid", "1e-3:1e-5:5",
        "--observable", "quantum_term",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn residual_audit_fail_above_controls_exit() {
    let ok = qshje(&["residual-audit", "--samples", "5", "--fail-above", "1e-7"]);
    assert_eq!(ok.status.code(), Some(0));
    let fail = qshje(&["residual-audit", "--samples", "5", "--fail-above", "1e-30"]);
    assert_eq!(fail.status.code(), Some(3));
}

#[test]
fn maslov_sweep_example() {
    // the sweep example: step-barrier W/hbar approaches pi/2
    let out = qshje(&[
        "sweep",
        "--potential",
        "step",
        "--U",
        "1",
        "--abc",
        "1.3,0.9,0.4",
        "--x",
        "1",
        "--hbar-grid",
        "1e-1:1e-4:10",
        "--observable",
        "W_over_hbar",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let last = text.lines().last().unwrap();
    let value: f64 = last.split(',').nth(3).unwrap().parse().unwrap();
    assert!((value - 1.5707963).abs() < 1e-6, "final W/hbar {value}");
}
