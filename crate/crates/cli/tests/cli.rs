//! End-to-end checks of the command-line surface: exit codes, text/json
//! agreement, and the input-echo round trip.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_inertia"))
}

fn run_with_input(args: &[&str], input: &str) -> Output {
    let mut tmp = tempfile_path(args);
    std::fs::write(&tmp, input).unwrap();
    let out = bin().args(args).arg(&tmp).output().unwrap();
    tmp.pop();
    out
}

fn tempfile_path(tag: &[&str]) -> std::path::PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!(
        "inertia-test-{}-{}.txt",
        tag.join("-").replace(['/', '.'], "_"),
        std::process::id()
    ));
    p
}

const W123: &str = "mode circle\nweights 1 2 3\nlevel 1\n";
const W113: &str = "mode circle\nweights 1 1 3\nlevel 1\n";
const DISCONNECTED: &str = "mode polytope\ndim 1\nfacet 1 ; 0 ; 2\nfacet -1 ; -1 ; 2\n";
const SQUARE: &str = "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 0 ; -1 ; 1\nfacet 0 -1 ; -1 ; 1\n";

#[test]
fn sectors_text_reproduces_logweight_table() {
    let out = run_with_input(&["sectors"], W123);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("a_C(1)    0  1/6  1/3  1/2  2/3  5/6"));
    assert!(text.contains("a_C(2)    0  1/3  2/3  0    1/3  2/3"));
    assert!(text.contains("a_C(3)    0  1/2  0    1/2  0    1/2"));
    assert!(text.contains("2 age(g)  0  2    2    2    2    4"));
}

#[test]
fn stdin_dash_works() {
    let mut child = bin()
        .args(["sectors", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(W113.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("exponent 3"));
}

#[test]
fn exit_codes() {
    // invalid input
    let out = run_with_input(&["sectors"], "mode polytope\ndim 1\nfacet 2 ; 0 ; 1\n");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("primitive"), "stderr: {err}");
    // unsupported: disconnected subtorus
    let out = run_with_input(&["sectors"], DISCONNECTED);
    assert_eq!(out.status.code(), Some(2));
    // unsupported: integral mode for a rank-2 quotient
    let out = run_with_input(&["cohomology", "--coeff", "z"], SQUARE);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("circle"), "stderr: {err}");
    // rational mode on the same input is fine
    let out = run_with_input(&["cohomology", "--coeff", "q"], SQUARE);
    assert_eq!(out.status.code(), Some(0));
    // bad sector element name
    let out = run_with_input(&["multiply"], W123);
    assert_eq!(out.status.code(), Some(2)); // clap: missing g/h arguments
    let mut tmp = tempfile_path(&["mul"]);
    std::fs::write(&tmp, W123).unwrap();
    let out = bin()
        .args(["multiply", tmp.to_str().unwrap(), "1/7", "1/6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    tmp.pop();
}

#[test]
fn json_round_trip_through_input_echo() {
    let out = run_with_input(&["sectors", "--format", "json"], W123);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let echo = v["input"].as_str().unwrap().to_string();
    let out2 = run_with_input(&["sectors", "--format", "json"], &echo);
    let v2: serde_json::Value = serde_json::from_slice(&out2.stdout).unwrap();
    assert_eq!(v, v2);
}

#[test]
fn json_and_text_agree_on_values() {
    let out = run_with_input(&["sectors", "--format", "json"], W123);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let sectors = v["sectors"].as_array().unwrap();
    assert_eq!(sectors.len(), 6);
    assert_eq!(sectors[1]["logweights"][0], "1/6");
    assert_eq!(sectors[1]["logweights"][2], "1/2");
    assert_eq!(sectors[5]["degree_shift"], "4");
    let text = String::from_utf8(run_with_input(&["sectors"], W123).stdout).unwrap();
    assert!(text.contains("1/6"));
    assert!(text.contains("4"));

    let out = run_with_input(&["cohomology", "--format", "json"], W113);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rels: Vec<&str> = v["presentation"]["relations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_str().unwrap())
        .collect();
    assert_eq!(rels, vec!["3*u*y1", "u^2-y1^3", "3*u^3"]);
    let text =
        String::from_utf8(run_with_input(&["cohomology"], W113).stdout).unwrap();
    for r in rels {
        assert!(text.contains(r), "text missing {r}");
    }
}

#[test]
fn multiply_shows_both_routes() {
    let mut tmp = tempfile_path(&["mul2"]);
    std::fs::write(&tmp, W123).unwrap();
    let out = bin()
        .args(["multiply", tmp.to_str().unwrap(), "5/6", "5/6"])
        .output()
        .unwrap();
    tmp.pop();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("epsilon = 2*u^2"));
    assert!(text.contains("3*u"));
    assert!(text.contains("6*u^3"));
    assert!(text.contains("routes agree: yes"));
}

#[test]
fn flag_text_names_centralizers() {
    let out = bin().args(["flag", "G2"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("SU(3)"));
    assert!(text.contains("SO(4)"));
    assert!(text.contains("Z/2 x Z/6"));
    let out = bin().args(["flag", "H9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn check_reports_all_passes() {
    let out = run_with_input(&["check"], W113);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn groups_rows_render_like_the_tables() {
    let out = run_with_input(
        &["cohomology", "--coeff", "z", "--max-degree", "8"],
        "mode circle\nweights 1 2 1\nlevel 1\n",
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0:  Z"));
    assert!(text.contains("2:  Z^2"));
    assert!(text.contains("4:  Z + Z/2"));
    assert!(text.contains("6:  Z/2 + Z/2"));
}
