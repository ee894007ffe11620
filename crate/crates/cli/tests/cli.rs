//! End-to-end CLI tests: exit code contract, round trips, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multilin"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p.to_string_lossy().into_owned()
}

const BETA_NOT_GAMMA: &str = r#"{
  "nodes": ["1", "2", "3"],
  "edges": [["1", "2"], ["2", "3"], ["1", "2", "3"]],
  "node_costs": {"1": "1", "2": "2", "3": "-3"},
  "edge_costs": {"1,2": "4", "2,3": "-5", "1,2,3": "6"}
}"#;

const TRIANGLE: &str = r#"{
  "nodes": ["1", "2", "3"],
  "edges": [["1", "2"], ["1", "3"], ["2", "3"]],
  "edge_costs": {"1,2": 1, "1,3": 1, "2,3": 1}
}"#;

#[test]
fn classify_prints_class_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "i.json", BETA_NOT_GAMMA);
    let out = run(&["classify", &path]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("class: beta-acyclic (not gamma)"));
    assert!(text.contains("gamma-cycle:"));
    assert!(text.contains("nest-point-order:"));
}

#[test]
fn classify_rejects_malformed_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "bad.json",
        r#"{"nodes": ["1"], "edges": [["1"]], "edge_costs": {"1": 1}}"#,
    );
    let out = run(&["classify", &path]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_exit_3() {
    let out = run(&["classify", "/nonexistent/nowhere.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn formulate_beta_on_triangle_is_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "t.json", TRIANGLE);
    let lp = dir.path().join("t.lp");
    let out = run(&[
        "formulate",
        &path,
        "--kind",
        "beta",
        "--out",
        lp.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn formulate_std_census() {
    let dir = tempfile::tempdir().unwrap();
    let single = r#"{
      "nodes": ["1", "2", "3"],
      "edges": [["1", "2", "3"]],
      "edge_costs": {"1,2,3": "-1"}
    }"#;
    let path = write(dir.path(), "s.json", single);
    let lp = dir.path().join("s.lp");
    let out = run(&[
        "formulate",
        &path,
        "--kind",
        "std",
        "--out",
        lp.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("paper-inequalities: 8"));
    assert!(lp.exists());
}

#[test]
fn solve_matches_between_strategies() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "i.json", BETA_NOT_GAMMA);
    let auto = run(&["solve", &path, "--json"]);
    assert!(auto.status.success());
    let brute = run(&["solve", &path, "--strategy", "brute", "--json"]);
    assert!(brute.status.success());
    let a: serde_json::Value = serde_json::from_slice(&auto.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&brute.stdout).unwrap();
    assert_eq!(a["value"], b["value"]);
    assert_eq!(a["formulation"], "beta");
    assert_eq!(a["certificate"], "exact-lp");
}

#[test]
fn solve_brute_guard_is_exit_5() {
    // 30 nodes exceeds the brute enumeration guard
    let mut nodes = Vec::new();
    for i in 1..=30 {
        nodes.push(format!("\"{i}\""));
    }
    let text = format!(
        r#"{{"nodes": [{}], "edges": [["1","2"]], "edge_costs": {{"1,2": 1}}}}"#,
        nodes.join(",")
    );
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "big.json", &text);
    let out = run(&["solve", &path, "--strategy", "brute"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn solve_repeated_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "i.json", BETA_NOT_GAMMA);
    let a = run(&["solve", &path, "--json"]);
    let b = run(&["solve", &path, "--json"]);
    let mut ja: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let mut jb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    // wall time may differ; everything else must agree byte for byte
    ja["stats"]["wall_ms"] = 0.into();
    jb["stats"]["wall_ms"] = 0.into();
    assert_eq!(ja, jb);
}

#[test]
fn gen_is_byte_stable_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    for (p, _) in [(&p1, 0), (&p2, 1)] {
        let out = run(&[
            "gen",
            "--class",
            "beta",
            "-n",
            "12",
            "-m",
            "15",
            "-r",
            "4",
            "--seed",
            "7",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("classified=beta-acyclic"));
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert_eq!(a, b);
    // classify accepts the generated file
    let out = run(&["classify", p1.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn gen_infeasible_is_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("x.json");
    let out = run(&[
        "gen",
        "--class",
        "berge",
        "-n",
        "2",
        "-m",
        "9",
        "-r",
        "2",
        "--seed",
        "1",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn guard_scale_env_var_shrinks_guards() {
    // scaling the guards down makes brute force refuse even tiny instances
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "i.json", BETA_NOT_GAMMA);
    let out = bin()
        .args(["solve", &path, "--strategy", "brute"])
        .env("MULTILIN_GUARD_SCALE", "0.05")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
    // and the default scale accepts it
    let out = run(&["solve", &path, "--strategy", "brute"]);
    assert!(out.status.success());
}

#[test]
fn verify_unknown_suite_is_exit_2() {
    let out = run(&["verify", "nosuchsuite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_padberg_passes() {
    let out = run(&["verify", "padberg"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("padberg: PASS"));
}

#[test]
fn solve_cuts_on_triangle_reports_bound() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "t.json", TRIANGLE);
    let out = run(&["solve", &path, "--strategy", "cuts", "--json"]);
    assert!(out.status.success());
    let j: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["certificate"], "brute-force");
    assert_eq!(j["value"], "3");
    assert!(j["lp_bound"].is_string());
}
