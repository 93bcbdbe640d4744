use std::process::{Command, Output};

use serde_json::Value;
use symcoh::AbGroup;

fn symcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcoh")).args(args).env_remove("SYMCOH_GUARD_ENTRIES").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cohomology_values() {
    let o = symcoh(&["cohomology", "--group", "C4", "--module", "trivial:Z", "--degree", "2", "--symmetric"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Z/2");
    let o = symcoh(&["cohomology", "--group", "C2", "--module", "trivial:Z", "--degree", "2"]);
    assert_eq!(stdout(&o).trim(), "Z/2");
    let o = symcoh(&["cohomology", "--group", "C1", "--module", "trivial:Z", "--degree", "3"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn comparison_report() {
    let o = symcoh(&["cohomology", "--group", "C4", "--module", "trivial:Z", "--degree", "2", "--compare"]);
    let text = stdout(&o);
    assert!(text.contains("H^2 = Z/4"));
    assert!(text.contains("HS^2 = Z/2"));
    assert!(text.contains("kernel = 0"));
    assert!(text.contains("image = Z/2"));
}

#[test]
fn json_round_trips() {
    for (g, m, n, sym) in [("C4", "trivial:Z", "2", false), ("S3", "trivial:Z/4", "3", true), ("C2xC2", "trivial:Z", "4", false)] {
        let mut plain = vec!["cohomology", "--group", g, "--module", m, "--degree", n];
        if sym {
            plain.push("--symmetric");
        }
        let args: Vec<&str> = plain.iter().copied().chain(["--json", "--representatives"]).collect();
        let o = symcoh(&args);
        assert_eq!(o.status.code(), Some(0));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let factors: AbGroup = serde_json::from_value(v["invariant_factors"].clone()).unwrap();
        let text = symcoh(&plain);
        assert_eq!(factors.to_string(), stdout(&text).trim());
        assert_eq!(v["representatives"].as_array().unwrap().len(), factors.ngens());
        assert_eq!(v["symmetric"], Value::Bool(sym));
    }
    let o = symcoh(&["cohomology", "--group", "C4", "--module", "trivial:Z", "--degree", "2", "--compare", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["comparison"]["image"], serde_json::json!([2]));
    assert_eq!(v["ordinary"]["invariant_factors"], serde_json::json!([4]));
}

#[test]
fn verify_suites() {
    let o = symcoh(&["verify", "--suite", "norm", "--group", "S3", "--module", "trivial:Z/4", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = symcoh(&["verify", "--suite", "actions", "--group", "C3", "--module", "trivial:Z", "--max-degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    for suite in ["relations", "homogeneous"] {
        let o = symcoh(&["verify", "--suite", suite, "--group", "C2xC2", "--module", "trivial:Z/2", "--max-degree", "2"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
    }
}

#[test]
fn corrupted_fixture_fails() {
    let o = symcoh(&["verify", "--suite", "relations", "--group", "S3", "--module", "trivial:Z/4", "--max-degree", "2", "--fixture", "sign-flipped-tau"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL") && l.contains("tau_i d^(i-1) = -d^i")));
}

#[test]
fn extensions_report() {
    let o = symcoh(&["extensions", "--group", "C2", "--module", "trivial:Z/2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().filter(|l| l.starts_with("class")).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("symmetric=yes") && !lines[0].contains("section=none"));
    assert!(lines[1].contains("symmetric=no") && lines[1].contains("section=none"));

    let o = symcoh(&["extensions", "--group", "C3", "--module", "trivial:Z/3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    assert!(classes.iter().all(|c| c["symmetric_class"] == Value::Bool(true) && !c["symmetric_section"].is_null()));

    let o = symcoh(&["extensions", "--group", "C1", "--module", "trivial:Z/2"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("class")).count(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(symcoh(&["cohomology", "--group", "Q9", "--module", "trivial:Z", "--degree", "1"]).status.code(), Some(2));
    assert_eq!(symcoh(&["cohomology", "--group", "C2", "--module", "weird", "--degree", "1"]).status.code(), Some(2));
    assert_eq!(symcoh(&["cohomology", "--group", "C2"]).status.code(), Some(2));
    assert_eq!(symcoh(&["extensions", "--group", "C2", "--module", "trivial:Z"]).status.code(), Some(2));
    assert_eq!(symcoh(&["cohomology", "--group", "D4", "--module", "trivial:Z", "--degree", "7"]).status.code(), Some(3));
    assert_eq!(symcoh(&["extensions", "--group", "C4", "--module", "trivial:Z/64"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_symcoh"))
        .args(["cohomology", "--group", "C4", "--module", "trivial:Z", "--degree", "2"])
        .env("SYMCOH_GUARD_ENTRIES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_symcoh"))
        .args(["cohomology", "--group", "C4", "--module", "trivial:Z", "--degree", "2"])
        .env("SYMCOH_GUARD_ENTRIES", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
