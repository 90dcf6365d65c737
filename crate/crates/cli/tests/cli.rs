use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use sqpow_core::TheoremReport;
use tempfile::TempDir;

fn sqpow(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqpow")).current_dir(dir).args(args).output().unwrap()
}

fn json(dir: &Path, args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = sqpow(dir, &all);
    let value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value)
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    fs::write(dir.path().join(name), text).unwrap();
    name.to_string()
}

#[test]
fn construct_writes_edge_list_and_roles() {
    let dir = TempDir::new().unwrap();
    let (code, v) = json(dir.path(), &["construct", "gpcq", "2", "3", "4"]);
    assert_eq!(code, 0);
    assert_eq!((v["vertices"].as_u64(), v["nu1"].as_u64(), v["nu"].as_u64()), (Some(8), Some(2), Some(4)));
    let roles: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("gpcq-2-3-4.json")).unwrap()).unwrap();
    assert_eq!(roles["roles"]["c1"]["role"], "c");
    assert!(fs::read_to_string(dir.path().join("gpcq-2-3-4.edges")).unwrap().contains("c1 d1"));

    let (code, v) = json(dir.path(), &["construct", "lemma", "3", "1", "--out", "lem"]);
    assert_eq!((code, v["vertices"].as_u64()), (0, Some(6)));
    assert!(dir.path().join("lem.edges").exists());

    let (code, v) = json(dir.path(), &["construct", "whiskered-complete", "3"]);
    assert_eq!((code, v["nu1"].as_u64()), (0, Some(1)));

    let out = sqpow(dir.path(), &["construct", "gpcq", "3", "2", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_records() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("a b\nb c\nc d\n", [2, 1, 1, 1, 1], true),
        ("a b\nb c\nc d\nd e\ne a\n", [2, 1, 2, 2, 2], false),
        ("a b\n", [1, 1, 1, 1, 1], true),
    ];
    for (i, (text, expected, cochordal)) in cases.into_iter().enumerate() {
        let f = write(&dir, &format!("g{i}.edges"), text);
        let (code, v) = json(dir.path(), &["invariants", &f]);
        assert_eq!(code, 0);
        let got: Vec<u64> =
            ["nu", "nu1", "nu2", "reg", "linearity_index"].iter().map(|k| v[k].as_u64().unwrap()).collect();
        assert_eq!(got, expected.map(|x| x as u64));
        assert_eq!(v["cochordal"], cochordal);
        assert_eq!(v["schema_version"], 1);
    }
}

#[test]
fn verify_theorem_reports_reverify() {
    let dir = TempDir::new().unwrap();
    for triple in [["2", "2", "2"], ["2", "3", "4"], ["3", "4", "5"]] {
        let mut args = vec!["verify-theorem"];
        args.extend(triple);
        let out = sqpow(dir.path(), &["--json"].into_iter().chain(args).collect::<Vec<_>>());
        assert_eq!(out.status.code(), Some(0));
        let report: TheoremReport = serde_json::from_slice(&out.stdout).unwrap();
        assert!(report.passed);
        assert!(report.recheck_evidence().unwrap());
    }
    let out = sqpow(dir.path(), &["verify-theorem", "1", "1", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("whiskered"));
}

#[test]
fn refutations_exit_one() {
    let dir = TempDir::new().unwrap();
    sqpow(dir.path(), &["construct", "gpcq", "2", "3", "4", "--out", "g"]);
    let (code, v) = json(dir.path(), &["check-lr", "g.json", "2"]);
    assert_eq!((code, &v["linearly_related"]), (1, &Value::Bool(false)));
    assert_eq!(v["pair"].as_array().unwrap().len(), 2);

    let (code, _) = json(dir.path(), &["check-lq", "g.edges", "2"]);
    assert_eq!(code, 1);
    let (code, v) = json(dir.path(), &["check-lq", "g.edges", "2", "--order", "search"]);
    assert_eq!((code, &v["search"]), (1, &Value::from("exhausted")));

    let (code, v) = json(dir.path(), &["check-lq", "g.edges", "3", "--witness"]);
    assert_eq!((code, &v["linear_quotients"]), (0, &Value::Bool(true)));
    let (code, _) = json(dir.path(), &["check-lr", "g.edges", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn power_output_feeds_back_as_an_ideal() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c5.edges", "a b\nb c\nc d\nd e\ne a\n");
    let out = sqpow(dir.path(), &["--json", "power", &f, "2"]);
    assert_eq!(out.status.code(), Some(0));
    fs::write(dir.path().join("i.json"), &out.stdout).unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);

    let (code, v) = json(dir.path(), &["betti", "i.json"]);
    assert_eq!((code, &v["linear_resolution"]), (0, &Value::Bool(true)));
    assert_eq!(sqpow(dir.path(), &["betti", "i.json", "2"]).status.code(), Some(2));
}

#[test]
fn betti_and_linearity_index_over_fields() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c5.edges", "a b\nb c\nc d\nd e\ne a\n");
    let (code, v) = json(dir.path(), &["betti", &f]);
    assert_eq!((code, v["regularity"].as_u64()), (0, Some(2)));
    for field in ["q", "2", "3", "5"] {
        let (code, v) = json(dir.path(), &["--field", field, "linearity-index", &f, "--profile"]);
        assert_eq!((code, v["linearity_index"].as_u64()), (0, Some(2)));
    }
    assert_eq!(sqpow(dir.path(), &["--field", "7", "betti", &f]).status.code(), Some(2));
}

#[test]
fn scan_checks_and_caps() {
    let dir = TempDir::new().unwrap();
    let (code, v) = json(dir.path(), &["scan", "5", "froberg", "sandwich"]);
    assert_eq!(code, 0);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["counterexamples"].as_array().unwrap().len(), 0);
    }
    let (code, v) = json(dir.path(), &["scan", "4", "persistence"]);
    assert_eq!(code, 0);
    assert_eq!(v["persistence"].as_array().unwrap().len(), v["graphs"].as_u64().unwrap() as usize);

    assert_eq!(sqpow(dir.path(), &["scan", "8", "froberg"]).status.code(), Some(2));
    let a = json(dir.path(), &["--seed", "7", "scan", "8", "froberg", "--sample", "4"]);
    let b = json(dir.path(), &["--seed", "7", "scan", "8", "froberg", "--sample", "4"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.edges", "a b\nb\n");
    let out = sqpow(dir.path(), &["invariants", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(sqpow(dir.path(), &["invariants", "missing.edges"]).status.code(), Some(2));
    assert_eq!(sqpow(dir.path(), &["frobnicate"]).status.code(), Some(2));
    let f = write(&dir, "empty.edges", "vertex a\n");
    assert_eq!(sqpow(dir.path(), &["invariants", &f]).status.code(), Some(2));
}
