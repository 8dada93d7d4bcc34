use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_greedy-edge")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(text: &str) -> Value {
    serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text}"))
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn k33_order_then_verify() {
    let k33 = fixture("k33.json");
    let k33 = k33.to_str().unwrap();
    let (code, out, _) = run(&["order", k33, "--start", "0", "--bipartite"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["colours_used"], 3);
    let dir = tempfile::tempdir().unwrap();
    let ordering = write(dir.path(), "ordering.json", &out);
    let (code, out, _) = run(&["verify", k33, &ordering, "--max-colours", "3"]);
    assert_eq!(code, 0);
    let report = json(&out);
    assert_eq!(report["valid"], true);
    assert_eq!(report["connected"], true);
    let (code, out, _) = run(&["verify", k33, &ordering, "--max-colours", "2"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["within_bound"], false);
}

#[test]
fn h3_rejects_top_colour_on_su() {
    let h3 = fixture("h3.json");
    let h3 = h3.to_str().unwrap();
    let (code, out, _) = run(&["oracle", h3, "--k", "3", "--start-edge", "su", "--precolour", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"], false);
    let (code, out, _) = run(&["oracle", h3, "--k", "3", "--start-edge", "s-u", "--precolour", "1"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"], true);
    assert_eq!(v["order"].as_array().unwrap().len(), 16);
}

#[test]
fn gadget_counterexample_shape() {
    let (code, out, _) = run(&["gadget", "counterexample"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["n"], 60);
    assert_eq!(v["edges"].as_array().unwrap().len(), 85);
    assert_eq!(out.trim(), std::fs::read_to_string(fixture("counterexample.json")).unwrap().trim());
}

#[test]
fn outputs_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (graph, args) in [
        ("petersen.json", vec!["colour", "--exact"]),
        ("petersen.json", vec!["colour", "--vizing"]),
        ("k33.json", vec!["colour", "--bipartite"]),
        ("petersen.json", vec!["order", "--start", "0"]),
        ("counterexample.json", vec!["order", "--start", "c0", "--subcubic"]),
        ("c5.json", vec!["oracle", "--k", "3"]),
    ] {
        let path = fixture(graph);
        let path = path.to_str().unwrap();
        let mut full = vec![args[0], path];
        full.extend_from_slice(&args[1..]);
        let (code, out, err) = run(&full);
        assert_eq!(code, 0, "{full:?}: {err}");
        let doc = write(dir.path(), "out.json", &out);
        let (code, report, _) = run(&["verify", path, &doc]);
        assert_eq!(code, 0, "{full:?}: {report}");
    }
}

#[test]
fn oracle_without_k_reports_the_index() {
    let c5 = fixture("c5.json");
    let (code, out, _) = run(&["oracle", c5.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["connected_chromatic_index"], 3);
}

#[test]
fn budget_exhaustion_exits_three() {
    let p = fixture("petersen.json");
    let (code, out, _) = run(&["oracle", p.to_str().unwrap(), "--k", "3", "--budget", "5"]);
    assert_eq!(code, 3);
    assert_eq!(json(&out)["result"], "indeterminate");
}

#[test]
fn reduce_and_dot() {
    let k4 = fixture("k4.json");
    let k4 = k4.to_str().unwrap();
    let (code, out, _) = run(&["reduce", k4, "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["n"], 428);
    let (code, _, err) = run(&["reduce", fixture("petersen.json").to_str().unwrap(), "--d", "4"]);
    assert_eq!(code, 2);
    assert!(json(&err)["error"]["message"].is_string());
    let (code, out, _) = run(&["dot", k4]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph G {") && out.matches("--").count() == 6);
}

#[test]
fn malformed_input_is_a_json_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 2, \"edges\": [[0, 5]]}");
    let (code, out, err) = run(&["colour", &bad]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(json(&err)["error"]["kind"], "input");
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(json(&err)["error"]["kind"], "usage");
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle"));
}
