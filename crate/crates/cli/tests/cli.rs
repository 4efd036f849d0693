use std::process::{Command, Output};

use serde_json::Value;

fn minorkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = minorkit(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not one JSON document ({e}): {}", stdout(&o)))
}

fn scratch(name: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("minorkit-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&p);
    p
}

#[test]
fn petersen_has_a_w6_minor() {
    let o = minorkit(&["minor", "catalog:petersen", "catalog:w6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("MINOR FOUND\n"));
    assert_eq!(out.lines().count(), 8);

    let doc = json(&["minor", "catalog:petersen", "catalog:w6"]);
    assert_eq!(doc["verdict"], "minor-found");
    let cert = doc["certificate"].as_object().unwrap();
    assert_eq!(cert.len(), 7);
    let mut used: Vec<u64> = cert.values().flat_map(|v| v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap())).collect();
    used.sort_unstable();
    used.dedup();
    assert_eq!(used.len(), cert.values().map(|v| v.as_array().unwrap().len()).sum::<usize>());
}

#[test]
fn minor_absence_is_not_an_error() {
    let o = minorkit(&["minor", "K5", "K33"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "NO MINOR\n");
}

#[test]
fn dw4_plus_is_k33_with_two_edges_per_side() {
    let o = minorkit(&["iso", "catalog:dw+4", "family:k3,3+12,13/12,13"]);
    assert!(stdout(&o).starts_with("ISOMORPHIC\n"));
    let o = minorkit(&["iso", "catalog:dw+4", "family:k3,3+12,13/12"]);
    assert_eq!(stdout(&o), "NOT ISOMORPHIC\n");
}

#[test]
fn canon_ignores_relabeling() {
    let dir = scratch("relabel");
    std::fs::create_dir_all(&dir).unwrap();
    // V8 with its vertices listed in two different orders.
    let a = dir.join("a.txt");
    let b = dir.join("b.txt");
    std::fs::write(&a, "8 12\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 1\n1 5\n2 6\n3 7\n4 8\n").unwrap();
    std::fs::write(&b, "8 12\n3 8\n8 1\n1 6\n6 2\n2 5\n5 7\n7 4\n4 3\n3 2\n8 5\n1 7\n6 4\n").unwrap();
    let ca = stdout(&minorkit(&["canon", a.to_str().unwrap()]));
    let cb = stdout(&minorkit(&["canon", b.to_str().unwrap()]));
    let cv = stdout(&minorkit(&["canon", "V8"]));
    assert_eq!(ca, cb);
    assert_eq!(ca, cv);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn formats_round_trip() {
    let g6 = stdout(&minorkit(&["canon", "Petersen"]));
    let el = stdout(&minorkit(&["canon", "Petersen", "--format", "edge-list"]));
    assert!(el.starts_with("10 15\n"));
    let dir = scratch("formats");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("p.txt");
    std::fs::write(&f, &el).unwrap();
    assert_eq!(stdout(&minorkit(&["canon", f.to_str().unwrap()])), g6);
    let dot = stdout(&minorkit(&["export-dot", "Petersen"]));
    assert!(dot.starts_with("graph Petersen {"));
    assert_eq!(dot.matches(" -- ").count(), 15);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_prints_the_v8_headline() {
    let o = minorkit(&["verify", "S1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("49/49 classes, profile 1,2,10,20,14,2 — PASS"), "{out}");
    assert!(out.ends_with("overall: pass-with-skips\n"));
}

#[test]
fn verify_failure_exits_one_and_writes_the_report() {
    let dir = scratch("report");
    let o = minorkit(&["verify", "S4", "--out", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(dir.join("report.json").is_file());
    assert!(dir.join("witnesses.g6").is_file());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_json_is_a_single_document() {
    let doc = json(&["verify", "S6", "S15", "--manifest"]);
    assert_eq!(doc["schema"], "minorkit-verify/1");
    assert_eq!(doc["verdict"], "pass-with-skips");
    assert_eq!(doc["invocation"]["budget"], 10_000_000);
    assert_eq!(doc["config"]["suites"], serde_json::json!(["S6", "S15"]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(minorkit(&["verify", "S99"]).status.code(), Some(2));
    assert_eq!(minorkit(&["canon", "not-a-graph"]).status.code(), Some(2));
    assert_eq!(minorkit(&["canon", "K4", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(minorkit(&["canon", "K4", "--format", "svg"]).status.code(), Some(2));
    assert_eq!(minorkit(&[]).status.code(), Some(2));
    let doc = json(&["catalog", "no-such-entry"]);
    assert!(doc["error"].as_str().unwrap().contains("no-such-entry"));
}

#[test]
fn gen_closes_v8_under_edge_additions() {
    let dir = scratch("gen");
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("v8.g6");
    let o = minorkit(&[
        "gen", "--seed", "V8", "--rule", "add-edge", "--max-order", "8", "--max-edges", "28",
        "--keep", "3-connected & w6-free", "--out", out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 49);
    let manifest: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("v8.g6.manifest.json")).unwrap()).unwrap();
    let counts: Vec<u64> = manifest["profile"].as_array().unwrap().iter().map(|p| p["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [1, 2, 10, 20, 14, 2]);
    assert_eq!(manifest["keep"], serde_json::json!(["3-connected@1", "w6-free@1"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_from_wheels_is_deterministic() {
    let args = ["gen", "--seed", "wheels", "--max-order", "8", "--max-edges", "16", "--keep", "3-connected & planar"];
    let a = json(&args);
    let b = json(&args);
    assert_eq!(a["graphs"], b["graphs"]);
    assert!(a["graphs"].as_array().unwrap().len() > 10);
}

#[test]
fn enum_lists_additions_splits_and_t_sums() {
    let adds = json(&["enum", "additions", "V8"]);
    assert_eq!(adds.as_array().unwrap().len(), 16);
    let classes = json(&["enum", "additions", "V8", "--classes"]);
    assert_eq!(classes.as_array().unwrap().len(), 2);
    let splits = json(&["enum", "splits", "W5", "--classes"]);
    assert!(!splits.as_array().unwrap().is_empty());
    let t = json(&["enum", "tsums", "K4", "K4", "--classes"]);
    let forms: Vec<&str> = t.as_array().unwrap().iter().map(|x| x["canonical"].as_str().unwrap()).collect();
    let expected: Vec<String> = ["Prism", "W4", "K4"]
        .iter()
        .map(|n| stdout(&minorkit(&["canon", n])).trim().to_string())
        .collect();
    for e in &expected {
        assert!(forms.contains(&e.as_str()), "{e} missing from {forms:?}");
    }
}

#[test]
fn catalog_lists_shows_and_exports() {
    let list = json(&["catalog", "list"]);
    assert!(list.as_array().unwrap().iter().any(|e| e["name"] == "Petersen"));
    let entry = json(&["catalog", "V8"]);
    assert_eq!(entry["entry"]["name"], "V8");
    let dir = scratch("export");
    let o = minorkit(&["catalog", "export", "--format", "dot", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(dir.join("index.json").is_file());
    let g6 = std::fs::read_to_string(dir.join("graphs.g6")).unwrap();
    assert_eq!(g6.lines().count(), list.as_array().unwrap().len());
    assert!(std::fs::read_dir(&dir).unwrap().any(|e| e.unwrap().file_name().to_string_lossy().ends_with("-Petersen.dot")));
    std::fs::remove_dir_all(&dir).unwrap();
}
