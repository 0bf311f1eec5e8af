use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lexpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = lexpack(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn bounds_for_p8_p6() {
    let (code, v) = json(&["bounds", "--g", "path:8", "--h", "path:6"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["lex-lower"]["value"], 31);
    assert_eq!(r["lex-upper"]["value"], 33);
    assert_eq!(r["path-upper"]["value"], 32);
    assert_eq!(r["exact"], Value::Null);
    assert_eq!(r["lex-lower"]["exactness"], "LOWER");
    assert_eq!(r["lex-lower"]["terms"]["rho_range"], serde_json::json!([2, 6]));
}

#[test]
fn bounds_closed_form_and_gates() {
    let (_, v) = json(&["bounds", "--g", "complete:3", "--h", "path:3"]);
    assert_eq!(v["results"]["exact"]["value"], 8);
    assert_eq!(v["results"]["exact"]["exactness"], "EXACT");

    let (code, v) = json(&["bounds", "--g", "path:4", "--h", "empty:2"]);
    assert_eq!(code, 0);
    assert!(v["results"]["lex-upper"]["error"].as_str().unwrap().contains("edgeless"));
    assert_eq!(v["results"]["lex-lower"]["value"], 4);

    let out = lexpack(&["bounds", "--g", "empty:3", "--h", "path:2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("connected"));

    let out = lexpack(&["bounds", "--g", "star:3", "--h", "path:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn human_breakdown_is_aligned() {
    let out = lexpack(&["bounds", "--g", "path:8", "--h", "path:6"]);
    let text = stdout(&out);
    assert!(text.contains("lex-lower [Lower] = 31"));
    assert!(text.contains("path-upper [Upper] = 32"));
    let value_columns: Vec<usize> = text
        .lines()
        .skip(2)
        .take(4)
        .map(|l| l.chars().count())
        .collect();
    assert!(value_columns.windows(2).all(|w| w[0] == w[1]), "{text}");
}

#[test]
fn exact_values() {
    let (code, v) = json(&["exact", "--g", "complete:5"]);
    assert_eq!((code, v["results"]["chi_rho"].clone()), (0, 5.into()));
    let (_, v) = json(&["exact", "--g", "path:4"]);
    assert_eq!(v["results"]["chi_rho"], 3);
    let (code, v) = json(&["exact", "--product", "path:8", "path:6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["chi_rho"], 31);
    assert_eq!(v["results"]["optimal"], true);
    assert_eq!(v["results"]["best"]["n"], 48);
}

#[test]
fn exact_exit_codes() {
    let (code, v) = json(&["exact", "--g", "complete:3", "--k", "2"]);
    assert_eq!((code, v["results"]["outcome"].clone()), (1, "none".into()));
    let (code, v) = json(&["exact", "--g", "complete:3", "--k", "3"]);
    assert_eq!((code, v["results"]["outcome"].clone()), (0, "found".into()));
    let (code, v) = json(&["exact", "--g", "petersen", "--budget-nodes", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["results"]["status"], "timeout");
    assert_eq!(v["status"], "timeout");
    let out = lexpack(&["exact", "--g", "path:3", "--budget-seconds", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lexpack(&["exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p8p6.json");
    let f = file.to_str().unwrap();
    let (code, v) = json(&["construct", "--method", "theorem5", "--n", "8", "--h", "path:6", "--out", f]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["k"], 32);
    assert_eq!(v["results"]["verdict"]["verdict"], "valid");
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(written["k"], 32);
    assert_eq!(written["n"], 48);

    let out = lexpack(&["verify", "--product", "path:8", "path:6", "--coloring", f]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "valid");

    // Give the neighbours (0,0) and (0,1) the same color 1.
    let mut tampered = written.clone();
    tampered["colors"][1] = 1.into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, tampered.to_string()).unwrap();
    let (code, v) = json(&["verify", "--product", "path:8", "path:6", "--coloring", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let verdict = &v["results"]["verdict"];
    assert_eq!(
        (verdict["u"].clone(), verdict["v"].clone(), verdict["color"].clone()),
        (0.into(), 1.into(), 1.into())
    );

    let out = lexpack(&["verify", "--product", "path:8", "path:5", "--coloring", f]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_layered_and_gates() {
    let (code, v) = json(&["construct", "--method", "theorem2", "--g", "complete:3", "--h", "path:3"]);
    assert_eq!((code, v["results"]["k"].clone()), (0, 8.into()));
    let out = lexpack(&["construct", "--method", "theorem5", "--n", "8", "--h", "empty:2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("edgeless"));
    let out = lexpack(&["construct", "--method", "nope", "--n", "8", "--h", "path:2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rho_and_product() {
    let (_, v) = json(&["rho", "--g", "path:8", "--t", "2"]);
    assert_eq!(v["results"]["rho"], 3);
    let (_, v) = json(&["rho", "--g", "path:13", "--t", "3"]);
    assert_eq!(v["results"]["rho"], 4);
    let w: Vec<u64> = serde_json::from_value(v["results"]["witness"].clone()).unwrap();
    assert!(w.contains(&0) && w.contains(&12));

    let out = lexpack(&["product", "--g", "path:2", "--h", "path:2"]);
    let text = stdout(&out);
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data, vec!["4 6", "0 1", "0 2", "0 3", "1 2", "1 3", "2 3"]);
    assert!(text.contains("g * 2 + h"));
}

#[test]
fn edge_list_files_as_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let prod = dir.path().join("k4.txt");
    let out = lexpack(&["product", "--g", "path:2", "--h", "path:2", "--out", prod.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(&prod).exists());
    let (_, v) = json(&["exact", "--g", prod.to_str().unwrap()]);
    assert_eq!(v["results"]["chi_rho"], 4);

    let coloring = dir.path().join("c.json");
    std::fs::write(&coloring, r#"{"n":4,"k":4,"colors":[1,2,3,4]}"#).unwrap();
    let out = lexpack(&["verify", "--g", prod.to_str().unwrap(), "--coloring", coloring.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deterministic_json() {
    for args in [
        &["bounds", "--g", "path:8", "--h", "path:6", "--json"][..],
        &["construct", "--method", "theorem2", "--g", "path:8", "--h", "path:6", "--json"][..],
        &["rho", "--g", "petersen", "--t", "2", "--json"][..],
    ] {
        assert_eq!(lexpack(args).stdout, lexpack(args).stdout);
    }
}
