//! End-to-end tests of the command-line tool.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("braidrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_output(args: &[&str], path: &Path) {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    std::fs::write(path, &out.stdout).unwrap();
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_passes_on_a_catalog_sample() {
    let (pres, rep) = (scratch("tvb2.json"), scratch("zeta1.json"));
    write_output(&["presentation", "TVB", "2"], &pres);
    write_output(&["catalog", "zeta1", "--seed", "3"], &rep);
    let out = run(&["check", path(&pres), path(&rep)]);
    assert_eq!(out.status.code(), Some(0));
    let checks = json(&out)["checks"].as_array().unwrap().clone();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn check_fails_on_a_corrupted_representation() {
    let (pres, rep) = (scratch("stvb2.json"), scratch("eta1-bad.json"));
    write_output(&["presentation", "STVB", "2"], &pres);
    write_output(&["catalog", "eta1", "--seed", "5"], &rep);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    v["images"]["tau:1"]["entries"][0][0] = Value::String("17/3".into());
    std::fs::write(&rep, v.to_string()).unwrap();
    let out = run(&["check", path(&pres), path(&rep)]);
    assert_eq!(out.status.code(), Some(1));
    let checks = json(&out)["checks"].as_array().unwrap().clone();
    assert!(checks
        .iter()
        .any(|c| c["status"] == "fail" && c.get("difference").is_some()));
}

#[test]
fn mismatched_structure_is_an_input_error() {
    let (pres, rep) = (
        scratch("stvb2-mismatch.json"),
        scratch("zeta1-mismatch.json"),
    );
    write_output(&["presentation", "STVB", "2"], &pres);
    write_output(&["catalog", "zeta1"], &rep);
    assert_eq!(
        run(&["check", path(&pres), path(&rep)]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["presentation", "TVB"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "zeta99"]).status.code(), Some(2));
}

#[test]
fn identity_classifies_as_the_trivial_family() {
    let rep = scratch("identity.json");
    write_output(&["catalog", "zeta4", "--params", "a=1,b=0,c=0,d=1"], &rep);
    let out = run(&["classify", path(&rep)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["family"], "zeta4");
}

#[test]
fn representation_json_round_trips() {
    let (first, second) = (scratch("eta3-a.json"), scratch("eta3-b.json"));
    write_output(&["catalog", "eta3", "--seed", "11"], &first);
    let promoted = run(&["promote", path(&first)]);
    assert!(matches!(promoted.status.code(), Some(0 | 1)));
    let original: Value = serde_json::from_str(&std::fs::read_to_string(&first).unwrap()).unwrap();
    std::fs::write(&second, original.to_string()).unwrap();
    let out = run(&["classify", path(&second)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["all_matches"]
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f == "eta3"));
}

#[test]
fn generated_system_has_thirty_one_equations() {
    let out = run(&["gen-system", "TVB"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["equations"].as_array().unwrap().len(), 31);
    assert_eq!(v["unknowns"].as_array().unwrap().len(), 12);
}

#[test]
fn audit_filter_runs_one_entry() {
    let out = run(&["audit", "--only", "phi-coefficient-match"]);
    assert_eq!(out.status.code(), Some(0));
    let entries = json(&out)["entries"].as_array().unwrap().clone();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["id"], "phi-coefficient-match");
    assert_eq!(entries[0]["verdict"], "pass");
}

#[test]
fn audit_verdicts_do_not_depend_on_seed() {
    let verdicts = |seed: &str| {
        let out = run(&["audit", "--seed", seed, "--samples", "10"]);
        json(&out)["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["id"].clone(), e["verdict"].clone()))
            .collect::<Vec<_>>()
    };
    assert_eq!(verdicts("1"), verdicts("7"));
}

#[test]
fn phi_match_reports_singular_locus() {
    let out = run(&["phi-match", "a=2,b=1,x=1,f=3,g=1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["phi-match", "--symbolic"]);
    assert_eq!(out.status.code(), Some(0));
}
