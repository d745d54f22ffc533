use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use perm_witness::corpus::GroupCatalog;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_perm-witness"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn catalog(n: usize) -> GroupCatalog {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../core/fixtures/catalog_s{n}.json"));
    GroupCatalog::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn solve_args<'a>(n: &'a str, ambient: &'a str, gens: &'a [String]) -> Vec<&'a str> {
    let mut args = vec!["solve", "--degree", n, "--ambient", ambient, "--gens"];
    args.extend(gens.iter().map(String::as_str));
    args
}

#[test]
fn affine_solve() {
    let out = run(&["solve", "--degree", "5", "--ambient", "symmetric", "--gens", "(1,2,3,4,5)", "(2,3,5,4)"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = json(&out);
    assert_eq!(cert["conjugators"], serde_json::json!(["()", "(1,2)", "(1,3)"]));
    assert_eq!(cert["verified"], Value::Bool(true));
    let text = String::from_utf8(out.stdout).unwrap();
    let positions: Vec<usize> = ["degree", "ambient", "generators", "conjugators", "regular_tuples", "trace", "verified"]
        .iter()
        .map(|k| text.find(&format!("\"{k}\"")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn wreath_intersection() {
    let out = run(&[
        "intersect", "--degree", "6", "--gens", "(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)", "(1,4)(2,5)(3,6)",
        "--conj", "()", "(1,2,3,4,5,6)", "(1,3,5)(2,4,6)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["order"], 2);
    assert_eq!(doc["generators"], serde_json::json!(["(1,4)(2,5)(3,6)"]));
}

#[test]
fn solve_then_verify_round_trips_over_the_corpus() {
    for n in [5, 6] {
        let cat = catalog(n);
        let degree = n.to_string();
        for e in &cat.entries {
            for ambient in ["symmetric", "alternating"] {
                if ambient == "alternating" && !e.tags.iter().any(|t| t == "even") {
                    continue;
                }
                let solved = run(&solve_args(&degree, ambient, &e.generators));
                assert_eq!(solved.status.code(), Some(0), "{:?}", e.generators);
                let verified = run_with_stdin(&["verify", "-"], &solved.stdout);
                assert_eq!(verified.status.code(), Some(0), "{:?} {ambient}", e.generators);
                assert_eq!(json(&verified)["certificate_ok"], Value::Bool(true));
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["solve", "--family", "wreath(4,2)", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reg = ["reg", "--family", "direct(4,4)", "--mode", "bound", "--seed", "3"];
    assert_eq!(run(&reg).stdout, run(&reg).stdout);
}

#[test]
fn tampered_certificate_is_refuted() {
    let solved = run(&["solve", "--family", "agl1(5)"]);
    let mut cert = json(&solved);
    cert["conjugators"] = serde_json::json!(["()", "(1,2)"]);
    cert["regular_tuples"] = Value::Null;
    let dir = std::env::temp_dir().join(format!("perm-witness-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tampered.json");
    std::fs::write(&path, serde_json::to_string(&cert).unwrap()).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["certificate_ok"], Value::Bool(false));
    assert_eq!(report["intersection_order"], 4);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.starts_with("error: refuted"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    let usage = run(&["solve", "--degree", "5", "--gens", "(1,2,3"]);
    assert_eq!(usage.status.code(), Some(2));
    assert_eq!(String::from_utf8(usage.stderr).unwrap().lines().count(), 1);
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--family", "agl1(5)", "--ambient", "alternating"]).status.code(), Some(2));
    let cap = run(&["intersect", "--family", "wreath(4,3)", "--cap-group", "10", "--conj", "()"]);
    assert_eq!(cap.status.code(), Some(3));
    assert!(String::from_utf8(cap.stderr).unwrap().starts_with("error: cap"));
    assert_eq!(run(&["reg", "--family", "direct(2,3)", "--cap-iter", "5"]).status.code(), Some(3));
    let exhausted = run(&["solve", "--family", "agl(2,3)", "--budget", "0"]);
    assert_eq!(exhausted.status.code(), Some(4));
}

#[test]
fn reg_reports_exact_counts() {
    let out = run(&["reg", "--family", "direct(2,3)", "--m", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["count"]["mode"], "exact");
    assert_eq!(doc["count"]["value"], 752);
    let text = run(&["reg", "--family", "agl1(5)", "--m", "3", "--format", "text"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap().trim(), "reg 1");
}

#[test]
fn enumerate_matches_checked_in_catalog() {
    let out = run(&["enumerate", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let printed = GroupCatalog::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(printed, catalog(5));
    assert_eq!(run(&["enumerate", "--degree", "9"]).status.code(), Some(2));
}
