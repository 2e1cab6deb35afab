use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

const SQUARE: &str = "[[0,0],[1,0],[0,1],[1,1]]";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbstrata"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn labels(v: &Value, label: &str) -> Vec<Value> {
    v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|g| g["label"] == label)
        .cloned()
        .collect()
}

/// Distinct provenances with the column index dropped.
fn classes(v: &Value, label: &str) -> usize {
    labels(v, label)
        .into_iter()
        .map(|g| {
            let mut p = g["provenance"].clone();
            p.as_object_mut().unwrap().remove("beta");
            p.to_string()
        })
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn staircase_report() {
    let v = json(&["staircase", "--delta", SQUARE]);
    let border2: BTreeSet<String> = v["border2"].as_array().unwrap().iter().map(Value::to_string).collect();
    for e in ["[3,0]", "[3,1]", "[2,2]", "[1,3]", "[0,3]"] {
        assert!(border2.contains(e), "{e}");
    }
    assert_eq!(v["counts"]["border"], 4);
    assert_eq!(v["edge_points"], serde_json::json!([[1, 1]]));
    let origin = json(&["staircase", "--delta", r#"{"n":3,"elements":[[0,0,0]]}"#]);
    assert_eq!(origin["corners"], serde_json::json!([[0, 0, 1], [0, 1, 0], [1, 0, 0]]));
}

#[test]
fn invalid_input() {
    assert_eq!(run(&["staircase", "--delta", "[[1,0]]"]).status.code(), Some(2));
    assert_eq!(
        run(&["staircase", "--delta", "/nonexistent/delta.json"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["equations", "--delta", SQUARE, "--which", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["equations", "--delta", SQUARE, "--order", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["equations", "--delta", SQUARE, "--which", "homog"]).status.code(),
        Some(2)
    );
}

#[test]
fn equation_counts() {
    let v = json(&["equations", "--delta", SQUARE, "--which", "fewer"]);
    assert_eq!(labels(&v, "I2").len(), 8);
    assert_eq!(labels(&v, "I3e").len(), 4);
    let axis = json(&[
        "equations",
        "--delta",
        "[[0,0],[1,0],[2,0]]",
        "--which",
        "minimal",
        "--vars",
        "2,1",
    ]);
    assert_eq!(axis["variables"].as_array().unwrap().len(), 6);
    assert!(axis["generators"].as_array().unwrap().is_empty());
    let delta = r#"[[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[0,0,2],[0,0,3],[0,0,4],[1,0,1],[1,0,2],[1,0,3],[1,0,4],
        [0,1,1],[0,2,0],[0,2,1],[0,3,0],[0,3,1],[0,4,0],[0,4,1],[0,0,5],[0,0,6],[0,0,7]]"#;
    let v = json(&["equations", "--delta", delta, "--which", "fewer"]);
    assert_eq!(classes(&v, "I2"), 30);
    assert_eq!(classes(&v, "I3e"), 6);
}

#[test]
fn other_modes() {
    for which in ["full", "stratum", "minimal", "universal"] {
        let v = json(&["equations", "--delta", SQUARE, "--which", which, "--order", "grevlex"]);
        assert_eq!(v["mode"], which);
    }
    let u = json(&["equations", "--delta", SQUARE, "--which", "universal", "--groebner"]);
    assert_eq!(u["generators"].as_array().unwrap().len(), 2);
    let h = json(&["equations", "--delta", SQUARE, "--which", "homog", "--weights", "1,1"]);
    assert!(!h["generators"].as_array().unwrap().is_empty());
}

#[test]
fn cas_export_to_file() {
    let dir = std::env::temp_dir().join(format!("hilbstrata-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("square.sing");
    let out = run(&[
        "equations",
        "--delta",
        SQUARE,
        "--export",
        "cas",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("ring R = 0, ("));
    assert_eq!(text.matches(",\n  ").count(), 11);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let a = run(&[
        "equations",
        "--delta",
        "[[0,0],[1,0],[0,1],[2,0]]",
        "--which",
        "stratum",
    ]);
    let b = run(&[
        "equations",
        "--delta",
        "[[0,0],[1,0],[0,1],[2,0]]",
        "--which",
        "stratum",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn glue_deform_classify() {
    let g = json(&["glue", "--delta", "[[0,0],[1,0]]", "--epsilon", "[[0,0],[0,1]]"]);
    assert_eq!(g["denominator"], "T[(0,1)|(1,0)]");
    let d = json(&["deform", "--delta", SQUARE]);
    assert!(d["generators"]
        .as_array()
        .unwrap()
        .iter()
        .all(|g| g["weight"].as_u64().unwrap() > 0));
    let c = json(&["classify", "--points", "[[0,0],[1,0],[2,0],[5,0]]"]);
    assert_eq!(c["delta"], serde_json::json!([[0, 0], [1, 0], [2, 0], [3, 0]]));
    assert_eq!(c["certified"], true);
    assert_eq!(run(&["classify", "--points", "[[0,0],[0,0]]"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "golden"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["failed"], 0);
    let out = run(&["verify", "--suite", "fewer", "--max-n", "2", "--max-r", "4"]);
    assert_eq!(out.status.code(), Some(0));
    // {1, x, y, z} fails the reduced relations.
    let out = run(&["verify", "--suite", "fewer", "--max-n", "3", "--max-r", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("FAIL"), "{stderr}");
    let out = run(&["verify", "--suite", "strata", "--samples", "5", "--max-r", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
