//! End-to-end tests of the embed47 binary: text output, JSON output,
//! exit codes and diagnostics.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_embed47")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f.flush().unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    Path::new(f.path()).to_str().unwrap()
}

const S4: &str = "name = \"S4\"\nform = []\n";
const S2XS2: &str = "name = \"S2xS2\"\nform = [[0, 1], [1, 0]]\n";

/// The realization link: two 3-spheres with framings (0,0) and (1,-1),
/// linking number 1, attached to S2xD6.
const REALIZATION: &str = "base = \"S2xD6\"\n\
components = [[0, 0], [1, -1]]\n\
linking = [[0, 1], [1, 0]]\n";

#[test]
fn classify_s4_text() {
    let f = temp_file(S4);
    let out = run(&["classify", path(&f)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("signature: 0"));
    assert!(text.contains("()\t0\t12"));
    assert!(text.contains("total: 12"));
}

#[test]
fn classify_s2xs2_text() {
    let f = temp_file(S2XS2);
    let out = run(&["classify", path(&f), "--bound", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("truncated: true"));
    // (0,0) carries the full 12-element fiber
    assert!(text.contains("(0,0)\t0\t12"));
    // (2,0) has divisibility 2 and a single class
    assert!(text.contains("(2,0)\t2\t1"));
}

#[test]
fn classify_json_output() {
    let f = temp_file(S2XS2);
    let out = run(&["classify", path(&f), "--bound", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["manifold"], "S2xS2");
    assert_eq!(v["signature"], 0);
    assert_eq!(v["spin"], true);
    assert!(v["rows"].as_array().unwrap().len() >= 3);
}

#[test]
fn json_output_is_deterministic() {
    let f = temp_file(S2XS2);
    let a = run(&["classify", path(&f), "--format", "json"]);
    let b = run(&["classify", path(&f), "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn fiber_and_act() {
    let f = temp_file(S2XS2);
    let out = run(&["fiber", path(&f), "--u", "24,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fiber count: 12"));
    assert!(text.contains("eta residues: {0,2,4,6,8,10,12,14,16,18,20,22}"));

    let out = run(&["act", path(&f), "--u", "24,0", "--eta", "22", "--k", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("eta after #k g_1: 4"));
}

#[test]
fn act_rejects_bad_residue() {
    let f = temp_file(S2XS2);
    let out = run(&["act", path(&f), "--u", "24,0", "--eta", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not an even residue"));
}

#[test]
fn sum_count() {
    let out = run(&["sum-count", "0", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("fiber count over a1+a2: 12"));
    let out = run(&["sum-count", "6", "8"]);
    assert!(stdout(&out).contains("fiber count over a1+a2: 1"));
}

#[test]
fn handles_realization_link() {
    let f = temp_file(REALIZATION);
    let out = run(&["handles", path(&f)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("base: S2xD6"));
    assert!(text.contains("  [0,1]"));
    assert!(text.contains("pi: [0,2]"));
    assert!(text.contains("signature: 0"));
    assert!(text.contains("boundary: standard S7"));
}

#[test]
fn handles_exotic_boundary() {
    let f = temp_file(
        "base = \"D8\"\ncomponents = [[2, -1]]\nlinking = [[0]]\n",
    );
    let out = run(&["handles", path(&f)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("eells-kuiper: 27 mod 28 (value -1)"));
    assert!(text.contains("boundary: exotic"));

    let out = run(&["ek", path(&f)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("boundary: exotic"));
}

#[test]
fn handles_non_unimodular_has_no_ek() {
    let f = temp_file(
        "base = \"D8\"\ncomponents = [[1, 1]]\nlinking = [[0]]\n",
    );
    let out = run(&["handles", path(&f)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("unimodular: false"));
    assert!(!text.contains("eells-kuiper"));
    // the dedicated ek command must fail instead
    let out = run(&["ek", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eta_realization_link() {
    let f = temp_file(REALIZATION);
    let out = run(&["eta", path(&f), "--zsq", "1,0", "--d", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("eta: 22 mod 24"));
    assert!(text.contains("eta': 0 mod 2"));

    let out = run(&["eta", path(&f), "--zsq", "1,0", "--d", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("eta': absent (d odd)"));
}

#[test]
fn quadruples_solvable_and_obstructed() {
    let out = run(&["quadruples", "224,28,0,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("solvable: true"));
    assert!(text.contains("combination: 224*(1,0,0,0) + 1*(0,28,0,0)"));

    let out = run(&["quadruples", "0,1,0,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("solvable: false"));
    assert!(text.contains("obstruction:"));
}

#[test]
fn invalid_input_names_invariant_and_exits_2() {
    // asymmetric form
    let f = temp_file("name = \"bad\"\nform = [[0, 1], [2, 0]]\n");
    let out = run(&["classify", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not symmetric"));

    // non-unimodular form
    let f = temp_file("name = \"bad\"\nform = [[2]]\n");
    let out = run(&["classify", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unimodular"));

    // linking matrix with nonzero diagonal
    let f = temp_file("base = \"D8\"\ncomponents = [[0, 0]]\nlinking = [[1]]\n");
    let out = run(&["handles", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("diagonal"));

    // missing file
    let out = run(&["classify", "/nonexistent/manifold.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fiber_rejects_non_bh_class() {
    let f = temp_file(S2XS2);
    // (1,0) is not characteristic
    let out = run(&["fiber", path(&f), "--u", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("characteristic"));
    // (2,2) is characteristic but has the wrong square
    let out = run(&["fiber", path(&f), "--u", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("square"));
}
