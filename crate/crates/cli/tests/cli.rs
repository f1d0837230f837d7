//! End-to-end tests of the `eil` binary: real process spawns, JSON
//! output parsing, and the exit-code contract (0 ok, 1 usage, 2 budget,
//! 3 consistency violation).

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn eil() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eil"))
}

fn run(args: &[&str]) -> Output {
    eil().args(args).output().expect("spawn eil")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_c5(dir: &Path) -> String {
    let path = dir.join("c5.elist");
    let out = run(&["construct", "cycle", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    path.to_str().unwrap().to_string()
}

#[test]
fn construct_then_invariants_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());

    let text = std::fs::read_to_string(&c5).unwrap();
    assert!(text.starts_with("5 5\n"));
    assert_eq!(text.lines().count(), 6);

    let v = stdout_json(&run(&["invariants", &c5]));
    let inv = &v["invariants"];
    assert_eq!(inv["ind_match"], 1);
    assert_eq!(inv["ind_match_k2c5"], 2);
    assert_eq!(inv["min_match"], 2);
    assert_eq!(inv["min_match_k2c5"], 2);
    assert_eq!(inv["match"], 2);
    assert_eq!(inv["cochord"], 2);
    assert_eq!(inv["girth"], 5);
    assert_eq!(inv["independence_number"], 2);
    assert_eq!(inv["is_cm_girth5"], true);
    assert_eq!(v["graph"]["n"], 5);
}

#[test]
fn regularity_values_and_fields() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());

    let v1 = stdout_json(&run(&["regularity", &c5, "--power", "1"]));
    assert_eq!(v1["reg"], 3);
    assert_eq!(v1["betti"]["reg_quotient"], 2);

    let v1q = stdout_json(&run(&["regularity", &c5, "--power", "1", "--field", "rational"]));
    assert_eq!(v1q["reg"], 3);
    assert_eq!(v1q["betti"]["field"], "rational");

    let v2 = stdout_json(&run(&["regularity", &c5, "--power", "2"]));
    assert_eq!(v2["reg"], 4);
}

#[test]
fn verify_reports_all_checks_holding() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());

    let out = run(&["verify", &c5, "--power", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["reg_ideal"], 4);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["status"], "holds", "check {c}");
    }
}

#[test]
fn witness_search_and_bad_lemma() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());

    let v = stdout_json(&run(&["witness", &c5, "--lemma", "cochord"]));
    assert_eq!(v["witness"]["f"], 3);
    assert_eq!(v["witness"]["f_minus_closed_neighborhood"], 2);

    let bad = run(&["witness", &c5, "--lemma", "bogus"]);
    assert_eq!(bad.status.code(), Some(1));

    // Edgeless input violates the witness precondition: usage error.
    let empty = dir.path().join("empty.elist");
    std::fs::write(&empty, "3 0\n").unwrap();
    let out = run(&["witness", empty.to_str().unwrap(), "--lemma", "minmatch"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_c5(dir.path());

    let flagged = run(&["regularity", &c5, "--power", "1", "--budget", "3"]);
    assert_eq!(flagged.status.code(), Some(2));

    let env = eil()
        .args(["regularity", &c5, "--power", "1"])
        .env("EIL_BUDGET_SUBSET", "3")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
}

#[test]
fn scan_exhaustive_stream_and_summary() {
    let out = run(&["scan", "--exhaustive", "4", "--smax", "1"]);
    assert!(out.status.success());
    let lines: Vec<Value> = String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSONL"))
        .collect();
    // 1 + 1 + 2 + 6 connected graphs on 1..=4 vertices, plus the summary.
    assert_eq!(lines.len(), 11);
    let summary = &lines[10]["summary"];
    assert_eq!(summary["graphs"], 10);
    assert_eq!(summary["reports"], 10);
    assert_eq!(summary["checks"]["violated"], 0);
    assert_eq!(summary["checks"]["skipped"], 0);

    let again = run(&["scan", "--exhaustive", "4", "--smax", "1"]);
    assert_eq!(out.stdout, again.stdout, "scan output must be deterministic");
}

#[test]
fn scan_random_is_seeded_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let args = [
        "scan", "--random", "7,8,5", "--smax", "1", "--out",
        path.to_str().unwrap(),
    ];
    assert!(run(&args).status.success());
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(run(&args).status.success());
    let second = std::fs::read_to_string(&path).unwrap();
    assert_eq!(first, second);

    let last: Value = serde_json::from_str(first.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["seed"], 7);
    assert_eq!(last["summary"]["graphs"], 5);
    let report: Value = serde_json::from_str(first.lines().next().unwrap()).unwrap();
    assert_eq!(report["graph"]["name"], "random[0]");
}

#[test]
fn scan_generator_flags_are_exclusive_and_required() {
    let none = run(&["scan", "--smax", "1"]);
    assert_eq!(none.status.code(), Some(1));

    let both = run(&["scan", "--exhaustive", "3", "--family", "cycle"]);
    assert_eq!(both.status.code(), Some(1));

    let malformed = run(&["scan", "--random", "7,8"]);
    assert_eq!(malformed.status.code(), Some(1));
}

#[test]
fn construct_families_and_formats() {
    let dir = tempfile::tempdir().unwrap();

    // graph6 output is readable back, explicitly and by sniffing.
    let g6 = dir.path().join("c5.g6");
    assert!(run(&["construct", "cycle", "5", "--format", "graph6", "--out", g6.to_str().unwrap()])
        .status
        .success());
    let v = stdout_json(&run(&["invariants", g6.to_str().unwrap(), "--format", "graph6"]));
    assert_eq!(v["invariants"]["girth"], 5);

    // Whiskering the pentagon gives the 10-vertex, 10-edge wheel of pendants.
    let c5 = write_c5(dir.path());
    let w = dir.path().join("wc5.elist");
    assert!(run(&["construct", "whisker", &c5, "--out", w.to_str().unwrap()])
        .status
        .success());
    let v = stdout_json(&run(&["invariants", w.to_str().unwrap()]));
    assert_eq!(v["graph"]["n"], 10);
    assert_eq!(v["invariants"]["ind_match"], 2);

    // hn 1 is the 5-vertex ladder member == C5.
    let hn = stdout_json(&run(&["construct", "hn", "1", "--format", "json"]).clone());
    assert_eq!(hn["n"], 5);

    // gn glues the host onto the whiskered ladder member: C5 glued at
    // one vertex onto the 10-vertex W(H_1) shares a vertex, so 14
    // vertices and all 5 + 10 edges survive.
    let v = stdout_json(&run(&["construct", "gn", &c5, "0", "1", "0", "--format", "json"]));
    assert_eq!(v["n"], 14);
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);

    // Unknown family and missing parameters are usage errors.
    assert_eq!(run(&["construct", "moebius", "5"]).status.code(), Some(1));
    assert_eq!(run(&["construct", "cycle"]).status.code(), Some(1));
}

#[test]
fn stdin_dash_reads_a_graph() {
    use std::io::Write;
    use std::process::Stdio;

    let mut child = eil()
        .args(["regularity", "-", "--power", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"2 1\n0 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["reg"], 2);
}
