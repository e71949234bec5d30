use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-gadget"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON object")
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    json_of(&out)
}

fn f(v: &Value) -> f64 {
    v.as_f64().expect("number")
}

fn usage_error(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?}");
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn prepare_north_pole_uses_zero_input() {
    let v = ok(&["prepare", "--theta", "0", "--phi", "0"]);
    assert_eq!(v["command"], "prepare");
    assert_eq!(v["outputs"]["input"], "zero");
    assert_eq!(f(&v["outputs"]["state"]["a"]["re"]), 1.0);
    assert_eq!(f(&v["outputs"]["state"]["b"]["re"]), 0.0);
    assert!((f(&v["outputs"]["plates"]["q1"]) - FRAC_PI_4).abs() < 1e-15);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["passed"], true);
    }
}

#[test]
fn prepare_eastern_hemisphere() {
    let v = ok(&["prepare", "--theta", &FRAC_PI_2.to_string(), "--phi", &FRAC_PI_2.to_string()]);
    assert_eq!(v["outputs"]["input"], "one");
    assert_eq!(f(&v["outputs"]["euler"]["eta"]), FRAC_PI_2);
    assert_eq!(f(&v["outputs"]["euler"]["zeta"]), FRAC_PI_2);
}

#[test]
fn degrees_flag_matches_radians() {
    let deg = ok(&["--degrees", "prepare", "--theta", "90", "--phi", "90"]);
    let rad = ok(&["prepare", "--theta", &FRAC_PI_2.to_string(), "--phi", &FRAC_PI_2.to_string()]);
    assert_eq!(deg, rad);
    // Global flags may also follow the subcommand.
    let after = ok(&["prepare", "--theta", "180", "--phi", "0", "--degrees"]);
    assert_eq!(f(&after["inputs"]["theta"]), PI);
    assert_eq!(after["outputs"]["input"], "zero");
}

#[test]
fn project_examples() {
    let v = ok(&["project", "--a-re", "1", "--a-im", "0", "--b-re", "0", "--b-im", "0"]);
    assert_eq!(v["outputs"]["sphere_point"], serde_json::json!([0.0, 0.0, -1.0]));
    assert_eq!(v["outputs"]["chart"], serde_json::json!({ "re": 0.0, "im": 0.0 }));

    let v = ok(&["project", "--a-re", "0", "--a-im", "0", "--b-re", "1", "--b-im", "0"]);
    assert_eq!(v["outputs"]["sphere_point"], serde_json::json!([0.0, 0.0, 1.0]));
    assert_eq!(v["outputs"]["chart"], "infinity");
    assert_eq!(v["outputs"]["bloch_vector"], serde_json::json!([0.0, 0.0, -1.0]));

    let v = ok(&["project", "--a-re", "0.6", "--a-im", "0", "--b-re", "0.8", "--b-im", "0"]);
    let p: Vec<f64> = serde_json::from_value(v["outputs"]["sphere_point"].clone()).unwrap();
    assert!((p[0] - 0.96).abs() < 1e-15 && p[1] == 0.0 && (p[2] - 0.28).abs() < 1e-15);
}

#[test]
fn project_accepts_negative_amplitudes() {
    let v = ok(&["project", "--a-re", "-0.6", "--a-im", "0", "--b-re", "0", "--b-im", "-0.8"]);
    let p: Vec<f64> = serde_json::from_value(v["outputs"]["sphere_point"].clone()).unwrap();
    // b·a* = 0.48i, so the point is (0, 0.96, 0.28).
    assert!(p[0].abs() < 1e-15 && (p[1] - 0.96).abs() < 1e-15 && (p[2] - 0.28).abs() < 1e-15);
}

#[test]
fn fiber_over_south_pole() {
    let v = ok(&["fiber", "--x", "0", "--y", "0", "--z", "-1", "--n", "4"]);
    let csv = v["outputs"]["csv"].as_str().unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "alpha,x1,x2,x3,x4");
    for row in &lines[1..] {
        let vals: Vec<f64> = row.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(vals.len(), 5);
        // Over the south pole b = 0.
        assert_eq!(vals[3], 0.0);
        assert_eq!(vals[4], 0.0);
        assert!((vals[1].hypot(vals[2]) - 1.0).abs() < 1e-15);
    }
}

#[test]
fn fiber_out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fiber.csv");
    let v = ok(&["fiber", "--x", "1", "--y", "0", "--z", "0", "--n", "64", "--out", path.to_str().unwrap()]);
    assert!(v["outputs"].get("csv").is_none());
    assert_eq!(v["outputs"]["csv_path"], path.to_str().unwrap());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 65);
    let inline = ok(&["fiber", "--x", "1", "--y", "0", "--z", "0", "--n", "64"]);
    assert_eq!(inline["outputs"]["csv"].as_str().unwrap(), text);
    assert!(f(&v["checks"][0]["residual"]) <= 1e-10);
    assert_eq!(v["checks"][1]["name"], "great_circle_rank");
    assert_eq!(v["checks"][1]["passed"], true);
}

#[test]
fn decompose_identity() {
    let v = ok(&["decompose", "--xi", "0", "--eta", "0", "--zeta", "0"]);
    let up = &v["outputs"]["plates"]["upper"];
    assert_eq!(f(&up["q1"]), FRAC_PI_4);
    assert_eq!(f(&up["h1"]), -FRAC_PI_4);
    assert_eq!(f(&up["q2"]), -FRAC_PI_4);
    assert_eq!(f(&up["h2"]), FRAC_PI_4);
    assert_eq!(v["outputs"]["validated_branch"], "upper");
    assert!((f(&v["outputs"]["phase_agreement"]) - 1.0).abs() <= 1e-10);
}

#[test]
fn usage_errors_exit_with_two() {
    assert!(usage_error(&["prepare", "--theta", "4", "--phi", "0"]).contains("[0, π]"));
    assert!(usage_error(&["project", "--a-re", "1", "--a-im", "0", "--b-re", "1", "--b-im", "0"]).contains("|a|²+|b|² = 2"));
    usage_error(&["fiber", "--x", "0", "--y", "0", "--z", "0.5", "--n", "8"]);
    usage_error(&["fiber", "--x", "0", "--y", "0", "--z", "1", "--n", "1"]);
    assert!(usage_error(&["decompose", "--xi", "0", "--eta", "3.5", "--zeta", "0"]).contains("η is restricted to [0, π]"));
    usage_error(&["verify", "--samples", "0"]);
    usage_error(&["prepare", "--theta", "nope", "--phi", "0"]);
    usage_error(&["frobnicate"]);
    usage_error(&["--tolerance-scale", "-1", "verify"]);
}

#[test]
fn verify_passes_and_reports_on_stderr() {
    let out = run(&["verify", "--seed", "7", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["outputs"]["all_passed"], true);
    let families = v["outputs"]["families"].as_array().unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), families.len());
    assert!(stderr.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn verify_fails_with_exit_one_under_impossible_tolerances() {
    let out = run(&["--tolerance-scale", "1e-9", "verify", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["outputs"]["all_passed"], false);
    assert!(String::from_utf8(out.stderr).unwrap().contains("FAIL"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["verify", "--seed", "3", "--samples", "15"],
        &["prepare", "--theta", "1.1", "--phi", "4.2"],
        &["fiber", "--x", "0.6", "--y", "0", "--z", "0.8", "--n", "17"],
        &["decompose", "--xi", "5.9", "--eta", "0.3", "--zeta", "2.2"],
    ];
    for args in cases {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

#[test]
fn echoed_inputs_reproduce_outputs() {
    let cases: [&[&str]; 4] = [
        &["--degrees", "prepare", "--theta", "33.3", "--phi", "301"],
        &["project", "--a-re", "0.28", "--a-im", "-0.96", "--b-re", "0", "--b-im", "0"],
        &["fiber", "--x", "0", "--y", "-0.6", "--z", "0.8", "--n", "5"],
        &["--degrees", "decompose", "--xi", "200", "--eta", "45", "--zeta", "10"],
    ];
    for args in cases {
        let first = ok(args);
        let command = first["command"].as_str().unwrap();
        let mut replay = vec![command.to_owned()];
        for (key, value) in first["inputs"].as_object().unwrap() {
            replay.push(format!("--{}", key.replace('_', "-")));
            replay.push(value.to_string());
        }
        let replay: Vec<&str> = replay.iter().map(String::as_str).collect();
        let second = ok(&replay);
        assert_eq!(first, second, "{args:?}");
    }
}
