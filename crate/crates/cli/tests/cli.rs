//! End-to-end runs of the binary: exit codes, report shapes, and the
//! find -> validate and generate -> find pipelines.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const BOOK2: &str = "4 5\n0 1\n0 2\n1 2\n0 3\n1 3\n";
const PATH3: &str = "3 2\n0 1\n1 2\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parity-cycles"))
}

fn work_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("parity-cycles-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("temp dir is writable");
    let path = dir.join(name);
    fs::write(&path, contents).expect("temp file is writable");
    path
}

/// Runs the binary, asserting it exits with `expect_code`, and parses the
/// stdout report when there is one.
fn run(args: &[&str], expect_code: i32) -> Option<Value> {
    let output = bin().args(args).output().expect("binary runs");
    let stdout = String::from_utf8(output.stdout).expect("stdout is text");
    let stderr = String::from_utf8(output.stderr).expect("stderr is text");
    assert_eq!(
        output.status.code(),
        Some(expect_code),
        "args {args:?}\nstdout: {stdout}\nstderr: {stderr}"
    );
    if stdout.trim().is_empty() {
        None
    } else {
        Some(serde_json::from_str(&stdout).expect("stdout is one JSON report"))
    }
}

fn outcome(report: &Value) -> &Value {
    &report["outcome"]
}

#[test]
fn find_emits_a_witness_that_validate_accepts() {
    let graph = work_file("k4.txt", K4);
    let graph = graph.to_str().unwrap();
    for parity in ["even", "odd"] {
        let report = run(
            &["find", "--input", graph, "--target", "edge:0,1", "--parity", parity],
            0,
        )
        .unwrap();
        let witness = &outcome(&report)["witness"];
        assert_eq!(witness["parity"], *parity);
        assert_eq!(witness["target"], serde_json::json!({"edge": 0}));

        let witness_path = work_file(&format!("k4-{parity}.witness.json"), &witness.to_string());
        let report = run(
            &["validate", "--input", graph, "--witness", witness_path.to_str().unwrap()],
            0,
        )
        .unwrap();
        assert_eq!(outcome(&report)["validation"]["valid"], true);
    }
}

#[test]
fn validate_rejects_a_tampered_witness() {
    let graph = work_file("k4-tamper.txt", K4);
    let graph = graph.to_str().unwrap();
    let report = run(
        &["find", "--input", graph, "--target", "edge:0,1", "--parity", "even"],
        0,
    )
    .unwrap();
    let tampered = outcome(&report)["witness"]
        .to_string()
        .replace("\"parity\":\"even\"", "\"parity\":\"odd\"");
    let witness_path = work_file("k4-tampered.witness.json", &tampered);
    let report = run(
        &["validate", "--input", graph, "--witness", witness_path.to_str().unwrap()],
        1,
    )
    .unwrap();
    assert_eq!(outcome(&report)["validation"]["valid"], false);
    assert!(outcome(&report)["validation"]["defect"].is_string());
}

#[test]
fn shared_book_edge_fails_with_degree_violation() {
    let graph = work_file("book2.txt", BOOK2);
    let report = run(
        &["find", "--input", graph.to_str().unwrap(), "--target", "edge:0,1", "--parity", "even"],
        2,
    )
    .unwrap();
    let violations = outcome(&report)["violations"].as_array().unwrap();
    assert!(violations
        .iter()
        .any(|v| v["which"] == "degree_not_divisible"));
}

#[test]
fn generate_then_find_reproduces_the_family_outcomes() {
    let dir = std::env::temp_dir().join(format!("parity-cycles-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let out = dir.join("bowtie.txt");
    let out_str = out.to_str().unwrap();
    let report = run(
        &["generate", "--family", "friendship", "--params", "t=2", "--out", out_str],
        0,
    )
    .unwrap();
    assert_eq!(outcome(&report)["generated"]["vertices"], 5);

    let sidecar: Value =
        serde_json::from_str(&fs::read_to_string(format!("{out_str}.target.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["target"], serde_json::json!({"vertex": 0}));

    // No even cycle passes through the center, and the searches say why.
    let report = run(
        &["find", "--input", out_str, "--target", "vertex:0", "--parity", "even"],
        2,
    )
    .unwrap();
    let violations = outcome(&report)["violations"].as_array().unwrap();
    assert!(violations.iter().any(|v| v["which"] == "degree_even"));
    assert!(violations.iter().any(|v| v["which"] == "not_two_connected"));

    // An even circuit through the center does exist, with six edges.
    let report = run(
        &["find", "--input", out_str, "--target", "vertex:0", "--parity", "even", "--object", "circuit"],
        0,
    )
    .unwrap();
    let witness = &outcome(&report)["witness"];
    assert_eq!(witness["theorem_tag"], "thm6");
    assert_eq!(witness["object"]["circuit"]["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn oracle_reports_frozen_k4_counts() {
    let graph = work_file("k4-oracle.txt", K4);
    let report = run(
        &["oracle", "--input", graph.to_str().unwrap(), "--target", "vertex:0"],
        0,
    )
    .unwrap();
    let oracle = &outcome(&report)["oracle"];
    assert_eq!(oracle["count"], 6);
    assert_eq!(oracle["lengths"], serde_json::json!([3, 3, 3, 4, 4, 4]));
    assert_eq!(oracle["exists_even"], true);
    assert_eq!(oracle["exists_odd"], true);
}

#[test]
fn oracle_accepts_trail_as_a_synonym_for_circuit() {
    let graph = work_file("k4-trail.txt", K4);
    let graph = graph.to_str().unwrap();
    let a = run(&["oracle", "--input", graph, "--target", "edge:0,1", "--object", "trail"], 0)
        .unwrap();
    let b = run(&["oracle", "--input", graph, "--target", "edge:0,1", "--object", "circuit"], 0)
        .unwrap();
    assert_eq!(outcome(&a)["oracle"], outcome(&b)["oracle"]);
    assert_eq!(outcome(&a)["oracle"]["object"], "circuit");
}

#[test]
fn usage_errors_exit_one_without_a_report() {
    let graph = work_file("k4-usage.txt", K4);
    let graph = graph.to_str().unwrap();
    // Malformed target syntax.
    assert!(run(&["find", "--input", graph, "--target", "edge:0", "--parity", "even"], 1).is_none());
    // Nonadjacent endpoints are an input error, not a violation.
    let path3 = work_file("p3.txt", PATH3);
    assert!(run(
        &["find", "--input", path3.to_str().unwrap(), "--target", "edge:0,2", "--parity", "even"],
        1
    )
    .is_none());
    // No routine searches for odd objects through a vertex.
    assert!(run(&["find", "--input", graph, "--target", "vertex:0", "--parity", "odd"], 1).is_none());
    // A witness search needs a parity.
    assert!(run(&["find", "--input", graph, "--target", "edge:0,1"], 1).is_none());
    // Explicit routine given the wrong target kind.
    assert!(run(
        &["find", "--input", graph, "--target", "vertex:0", "--parity", "even", "--theorem", "thm1"],
        1
    )
    .is_none());
    // Unknown theorem names are rejected by the parser.
    assert!(run(
        &["find", "--input", graph, "--target", "edge:0,1", "--parity", "even", "--theorem", "thm9"],
        1
    )
    .is_none());
}

#[test]
fn help_exits_zero() {
    let output = bin().arg("--help").output().expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn stdin_input_and_dot_rendering_work() {
    let dir = std::env::temp_dir().join(format!("parity-cycles-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let dot = dir.join("k4.dot");
    let mut child = bin()
        .args([
            "find",
            "--input",
            "-",
            "--target",
            "edge:0,1",
            "--parity",
            "even",
            "--emit-dot",
            dot.to_str().unwrap(),
        ])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(K4.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let rendered = fs::read_to_string(&dot).unwrap();
    assert!(rendered.contains("--"));
    assert!(rendered.contains("color=red"));
}

#[test]
fn sweeps_cover_every_target_in_id_order() {
    let graph = work_file("k4-sweep.txt", K4);
    let report = run(
        &["find", "--input", graph.to_str().unwrap(), "--targets", "all-edges", "--parity", "odd"],
        0,
    )
    .unwrap();
    let entries = outcome(&report)["sweep"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    for (i, entry) in entries.iter().enumerate() {
        assert_eq!(entry["target"], serde_json::json!({"edge": i}));
        assert_eq!(entry["witness"]["parity"], "odd");
    }
}

#[test]
fn sweeps_exit_two_when_any_target_fails() {
    let pendant = work_file("pendant-sweep.txt", "4 4\n0 1\n1 2\n0 2\n0 3\n");
    let report = run(
        &["find", "--input", pendant.to_str().unwrap(), "--targets", "all-vertices", "--parity", "even"],
        2,
    )
    .unwrap();
    let entries = outcome(&report)["sweep"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert!(entries.iter().all(|e| e["witness"].is_null()));
}

#[test]
fn paths_mode_reports_both_flavors() {
    let graph = work_file("k4-paths.txt", K4);
    let graph = graph.to_str().unwrap();
    for flavor in ["vertex", "edge"] {
        let report = run(
            &[
                "find", "--input", graph, "--mode", "paths", "--target", "vertex:0",
                "--target2", "vertex:2", "--disjoint", flavor,
            ],
            0,
        )
        .unwrap();
        let paths = &outcome(&report)["paths"];
        assert_eq!(paths["found"], true);
        assert_eq!(paths["disjoint"], *flavor);
        assert!(paths["first"].is_array() && paths["second"].is_array());
    }
    // Edge-to-edge flavor.
    let report = run(
        &[
            "find", "--input", graph, "--mode", "paths", "--target", "edge:0,1",
            "--target2", "edge:2,3", "--disjoint", "vertex",
        ],
        0,
    )
    .unwrap();
    assert_eq!(outcome(&report)["paths"]["found"], true);

    // A path graph has no two disjoint routes between its ends.
    let path3 = work_file("p3-paths.txt", PATH3);
    let report = run(
        &[
            "find", "--input", path3.to_str().unwrap(), "--mode", "paths",
            "--target", "vertex:0", "--target2", "vertex:2",
        ],
        0,
    )
    .unwrap();
    assert_eq!(outcome(&report)["paths"]["found"], false);
}

#[test]
fn check_reports_structure_fields() {
    let bowtie = work_file("bowtie-check.txt", "5 6\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n");
    let report = run(&["check", "--input", bowtie.to_str().unwrap()], 0).unwrap();
    let check = &outcome(&report)["check"];
    assert_eq!(check["two_connected"], false);
    assert_eq!(check["two_edge_connected"], true);
    assert_eq!(check["bipartite"], false);
    assert_eq!(check["articulation_vertices"], serde_json::json!([0]));
    assert_eq!(check["bridges"], serde_json::json!([]));
    assert_eq!(check["degree_divisor"], 2);
}

#[test]
fn json_format_inputs_parse_and_digests_match_the_edge_list_form() {
    let text = work_file("k4-digest.txt", K4);
    let json = work_file("k4-digest.json", r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#);
    let a = run(&["check", "--input", text.to_str().unwrap()], 0).unwrap();
    let b = run(&["check", "--input", json.to_str().unwrap(), "--format", "json"], 0).unwrap();
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["outcome"], b["outcome"]);
}

#[test]
fn repeat_runs_are_deterministic_modulo_timing() {
    let graph = work_file("k4-determinism.txt", K4);
    let graph = graph.to_str().unwrap();
    let args = ["find", "--input", graph, "--target", "edge:1,2", "--parity", "odd", "--seed", "7"];
    let a = run(&args, 0).unwrap();
    let b = run(&args, 0).unwrap();
    assert_eq!(a["outcome"], b["outcome"]);
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert_eq!(a["command"], b["command"]);
}

#[test]
fn explicit_theorems_are_honored_in_the_report() {
    let graph = work_file("k4-explicit.txt", K4);
    let graph = graph.to_str().unwrap();
    for (theorem, target, object) in [
        ("thm1", "edge:0,1", "cycle"),
        ("thm5", "edge:0,1", "circuit"),
        ("thm2", "vertex:0", "cycle"),
        ("thm3", "vertex:0", "cycle"),
        ("thm6", "vertex:0", "circuit"),
    ] {
        let report = run(
            &[
                "find", "--input", graph, "--target", target, "--parity", "even",
                "--object", object, "--theorem", theorem,
            ],
            0,
        )
        .unwrap();
        assert_eq!(outcome(&report)["witness"]["theorem_tag"], theorem);
    }
    for (theorem, object) in [("cor1", "cycle"), ("thm7", "circuit")] {
        let report = run(
            &[
                "find", "--input", graph, "--target", "edge:0,1", "--parity", "odd",
                "--object", object, "--theorem", theorem,
            ],
            0,
        )
        .unwrap();
        assert_eq!(outcome(&report)["witness"]["theorem_tag"], theorem);
    }
}

#[test]
fn oracle_budget_overruns_exit_one() {
    let graph = work_file("k4-budget.txt", K4);
    assert!(run(
        &["oracle", "--input", graph.to_str().unwrap(), "--target", "vertex:0", "--budget", "2,3,3"],
        1
    )
    .is_none());
}
