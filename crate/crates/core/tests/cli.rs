use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const E8: &str = "11110000\n00111100\n00001111\n01010101\n";

fn sdcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = sdcodes(&full);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (out.status.code().unwrap(), value)
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn check_extended_hamming() {
    let dir = TempDir::new().unwrap();
    let e8 = write(dir.path(), "e8.txt", E8);
    let (code, v) = json(&["code", "check", &e8]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["selfdual"], true);
    assert_eq!(r["class"], "DoublyEven");
    assert_eq!(r["d"], 4);
    assert_eq!(v["budget"]["exhausted"], false);
}

#[test]
fn check_reports_non_self_dual_without_failing() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "m.txt", "1100\n1010\n");
    let (code, v) = json(&["code", "check", &path]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["selfdual"], false);
}

#[test]
fn missing_file_is_an_error() {
    let out = sdcodes(&["code", "check", "/nonexistent/code.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn tsai_then_shadow() {
    let dir = TempDir::new().unwrap();
    let e8 = write(dir.path(), "e8.txt", E8);
    let cx = dir.path().join("cx.txt");
    let out = sdcodes(&["construct", "tsai", &e8, "--x", "1", "-o", cx.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let (_, v) = json(&["code", "check", cx.to_str().unwrap(), "--shadow"]);
    assert_eq!(v["results"]["n"], 10);
    assert_eq!(v["results"]["class"], "SinglyEven");
    assert_eq!(v["results"]["selfdual"], true);
    let (code, v) = json(&["code", "shadow", cx.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v["results"].to_string().contains("\"1\""), "{v}");
}

#[test]
fn circulant_border_is_rejected() {
    let out = sdcodes(&["construct", "circulant", "--first-row", "1000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn neighbor_of_extended_hamming() {
    let dir = TempDir::new().unwrap();
    let e8 = write(dir.path(), "e8.txt", E8);
    let out = sdcodes(&["construct", "neighbor", &e8, "--x", "1,2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.len() == 8));
    let bad = sdcodes(&["construct", "neighbor", &e8, "--x", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn possible_enumerators_json() {
    let (code, v) = json(&["wef", "possible", "--n", "82", "--dmin", "14", "--shadow-case", "min5"]);
    assert_eq!(code, 0);
    let wc = v["results"]["W_C"].as_array().unwrap();
    let a14 = wc.iter().find(|c| c["deg"] == 14).unwrap();
    assert_eq!(a14["const"], "3280/1");
    assert_eq!(a14["terms"]["β"], "2/1");
    assert_eq!(v["results"]["congruences"][0], "β ≡ 0 (mod 2)");
    let ineq = v["results"]["inequalities"].as_array().unwrap();
    assert!(ineq.iter().any(|i| i == "α ≥ 18"));
}

#[test]
fn unsupported_case_lists_alternatives() {
    let out = sdcodes(&["wef", "possible", "--n", "50", "--dmin", "10", "--shadow-case", "weight1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("n=82, d=14, d(S)=1"), "{err}");
}

#[test]
fn reproduce_families() {
    let (code, v) = json(&["reproduce", "families"]);
    assert_eq!(code, 0);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 20);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn reproduce_c82() {
    let (code, v) = json(&["reproduce", "c82"]);
    assert_eq!(code, 0, "{v}");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}
