use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lamplight")).args(args).output().expect("binary runs")
}

fn run_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lamplight"))
        .args(args)
        .env("LAMPLIGHT_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn star_generation() {
    let dir = tempfile::tempdir().unwrap();
    let path = gen(dir.path(), "g.json", &["--family", "star", "--n", "8", "--k", "4"]);
    let graph: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(graph["vertices"].as_array().unwrap().len(), 33);
    assert_eq!(graph["edges"].as_array().unwrap().len(), 32);
    assert_eq!(graph["basepoint"], "v0");
}

#[test]
fn dot_output() {
    let out = run(&["gen", "--family", "cycle", "--k", "3", "--dot"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph \"cycle\" {"));
    assert_eq!(text.matches(" -- ").count(), 3);
}

#[test]
fn tsp_round_trip_on_p3() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen(dir.path(), "p3.json", &["--family", "path", "--k", "3"]);
    let out = run(&["tsp", "--graph", &p3, "--from", "v0", "--to", "v0", "--targets", "v3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"length":6}"#);

    let out = run(&["dist", "--graph", &p3, "--from", "v0", "--to", "v3"]);
    assert_eq!(stdout_json(&out)["distance"], 3);

    let out = run(&["lamp-dist", "--graph", &p3, "--from", r#"{"lamps":[],"pos":"v0"}"#, "--to", r#"{"lamps":["v3"],"pos":"v0"}"#]);
    assert_eq!(stdout_json(&out)["distance"], 7);
}

#[test]
fn lamplighter_graph_of_p1() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = gen(dir.path(), "p1.json", &["--family", "path", "--k", "1"]);
    let out = run(&["lamp-graph", "--graph", &p1]);
    let la = stdout_json(&out);
    assert_eq!(la["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(la["edges"].as_array().unwrap().len(), 8);
}

#[test]
fn certify_tree_to_hamming_passes() {
    let out = run(&["certify", "--map", "tree-to-hamming", "--tree", "random", "--size", "6", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["pairs"], 384 * 383 / 2);
    assert_eq!(report["claimed_exact"], serde_json::json!(["1/2", "3"]));
}

#[test]
fn failed_verdict_exits_with_one() {
    let out = run(&["certify", "--map", "hamming-to-lamp-complete", "--params", "k=2,m=1", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], "fail");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["certify", "--map", "no-such-map"]).status.code(), Some(2));
    assert_eq!(run(&["certify", "--map", "path-to-trees"]).status.code(), Some(2));
    assert_eq!(run(&["dist", "--graph", "/nonexistent.json", "--from", "a", "--to", "b"]).status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let p3 = gen(dir.path(), "p3.json", &["--family", "path", "--k", "3"]);
    assert_eq!(run(&["dist", "--graph", &p3, "--from", "v0", "--to", "v9"]).status.code(), Some(1));
}

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    let args = ["certify", "--map", "path-to-trees", "--params", "k=7", "--sample", "5000", "--seed", "3"];
    let first = run_with_threads(&args, "1");
    let second = run_with_threads(&args, "4");
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let random = ["gen", "--family", "random", "--n", "7", "--seed", "42"];
    assert_eq!(run(&random).stdout, run(&random).stdout);
}

#[test]
fn embeddings_of_single_points() {
    let out = run(&["embed", "--map", "binary-to-lamp-path", "--params", "k=3", "--point", r#""1""#]);
    assert_eq!(stdout_json(&out), serde_json::json!({"lamps": ["v0"], "pos": "v1"}));

    let out = run(&["embed", "--map", "complete-to-binary", "--params", "k=3,eps=1", "--point", r#""v1""#]);
    assert_eq!(stdout_json(&out)["vertex"], "0100");

    let out = run(&["embed", "--map", "hamming-to-lamp-complete", "--params", "k=2,m=2", "--point", "[2]"]);
    assert_eq!(stdout_json(&out), serde_json::json!({"lamps": ["v2", "v3"], "pos": "v0"}));

    let out = run(&["embed", "--map", "path-to-trees", "--params", "k=2", "--point", r#"{"lamps":["v0"],"pos":"v1"}"#]);
    assert_eq!(stdout_json(&out), serde_json::json!({"left": "1", "right": "00"}));

    let out = run(&["embed", "--map", "star-to-normed", "--params", "n=3,k=4,p=inf", "--point", r#""2:v4""#]);
    assert_eq!(stdout_json(&out), serde_json::json!([0.0, 0.0, 4.0]));
}

#[test]
fn point_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let point = dir.path().join("p.json");
    std::fs::write(&point, r#"{"lamps":["v1","v2"],"pos":"v0"}"#).unwrap();
    let out = run(&["embed", "--map", "lamp-complete-to-lamp-binary", "--params", "k=3", "--point", point.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let image = stdout_json(&out);
    assert_eq!(image["pos"], "0000");
    assert_eq!(image["lamps"].as_array().unwrap().len(), 6);
}

#[test]
fn suite_selection_and_verdicts() {
    let out = run(&["suite", "quick", "--only", "A1,A4,A10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("A1   PASS"));
    assert!(text.contains("3 of 3 criteria passed"));

    let out = run(&["suite", "quick", "--only", "A9a", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)[0]["passed"], false);

    assert_eq!(run(&["suite", "quick", "--only", "Z9"]).status.code(), Some(2));
}
