use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ghecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghecke")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = ghecke(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write_module(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = ghecke(args);
    assert!(out.status.success());
    let path = dir.join(name);
    std::fs::write(&path, out.stdout).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn twisted_classes_of_a2() {
    let v = json(&["classes", "--type", "A", "2", "--twisted", "--json"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["elliptic_count"], 2);
    let sizes: u64 = v["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).sum();
    assert_eq!(sizes, 6);
}

#[test]
fn plain_classes_of_a1() {
    let v = json(&["classes", "--type", "A", "1", "--json"]);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["elliptic_count"], 1);
}

#[test]
fn e6_elliptic_count() {
    assert_eq!(json(&["classes", "--type", "E", "6", "--twisted", "--json"])["elliptic_count"], 9);
}

#[test]
fn steinberg_self_ext() {
    let v = json(&["ext", "--type", "A", "2", "st", "st", "--json"]);
    assert_eq!(v["dims"], serde_json::json!([1, 0, 0]));
    assert_eq!(v["ep"], 1);
}

#[test]
fn principal_series_with_theta() {
    let v = json(&["ext", "--type", "A", "2", "principal", "principal", "--theta", "--json"]);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["theta_traces"], serde_json::json!(["1", "0", "-1"]));
    assert_eq!(v["ep_theta"], "0");
}

#[test]
fn induced_module_file_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_module(dir.path(), "m.json", &["induce", "--type", "A", "2", "--subset", "1"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&m).unwrap()).unwrap();
    assert_eq!(v["dim"], 3);
    let e = json(&["ext", &m, &m, "--json"]);
    assert_eq!(e["dims"], serde_json::json!([1, 1, 0]));
    assert_eq!(e["ep"], 0);
}

#[test]
fn mismatched_data_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_module(dir.path(), "a.json", &["induce", "--type", "A", "2", "--spec", "st"]);
    let b = write_module(dir.path(), "b.json", &["induce", "--type", "B", "2", "--spec", "st"]);
    let out = ghecke(&["ext", &a, &b]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_input_exit_2() {
    assert_eq!(ghecke(&["classes", "--type", "Z", "2"]).status.code(), Some(2));
    assert_eq!(ghecke(&["classes", "--type", "E", "9"]).status.code(), Some(2));
}

#[test]
fn rigid_pairing() {
    let v = json(&["pairing", "--type", "A", "2", "rigid:1", "rigid:1", "--theta", "--json"]);
    assert_eq!(v["ep"], "0");
    assert_eq!(v["ep_theta"], "2");
}

#[test]
fn core_suite_passes() {
    let out = ghecke(&["verify", "--suite", "core"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
}
