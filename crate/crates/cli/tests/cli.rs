use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbk"))
        .args(args)
        .env_remove("TBK_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_figure_eight_json() {
    let o = tbk(&["analyze", "5", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["factors"][0]["degree"], 2);
    assert_eq!(v["factors"][0]["disc"], "-3");
    assert_eq!(v["hidden_symmetries"], "excluded_arithmetic");
}

#[test]
fn analyze_even_p_is_invalid() {
    let o = tbk(&["analyze", "4", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("even p"));
    assert_eq!(tbk(&["analyze", "five", "3"]).status.code(), Some(2));
    assert_eq!(tbk(&["analyze", "7", "3", "--denominator-bound", "0"]).status.code(), Some(2));
}

#[test]
fn analyze_trefoil_is_torus_knot() {
    let o = tbk(&["analyze", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["hidden_symmetries"], "not_applicable_torus_knot");
    assert_eq!(v["uniqueness"], "torus_knot_infinite_class");
}

#[test]
fn analyze_other_formats() {
    let o = tbk(&["analyze", "7", "3", "--format", "md"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# 2-bridge knot (7, 3)"));
    let o = tbk(&["analyze", "7", "3", "--format", "table"]);
    assert!(stdout(&o).contains("NoHiddenSymmetriesCertified"));
}

#[test]
fn oracle_commands() {
    let o = tbk(&["oracle", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("y^2 + y + 1"));
    assert!(out.trim_end().ends_with("MATCH"));
    let o = tbk(&["oracle", "9"]);
    assert_eq!(o.status.code(), Some(0));
    for q in [1, 5, 7] {
        assert!(stdout(&o).contains(&format!("q = {q}: MATCH")));
    }
    assert_eq!(tbk(&["oracle", "4"]).status.code(), Some(2));
}

fn tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().into_string().unwrap(), std::fs::read(e.path()).unwrap())
        })
        .collect();
    v.sort();
    v
}

#[test]
fn census_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = tbk(&["census", "--max-p", "5", "--out", out, "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let first = tree(dir.path());
    let names: Vec<&str> = first.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names, ["5_3.json", "summary.json"]);
    let o = tbk(&["census", "--max-p", "5", "--out", out, "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(tree(dir.path()), first);
}

#[test]
fn census_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, b"x").unwrap();
    let o = tbk(&["census", "--max-p", "5", "--out", blocker.join("sub").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(tbk(&["census", "--max-p", "2", "--out", dir.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_tbk"))
            .args(["analyze", "7", "3"])
            .env("TBK_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let a = run();
    assert_eq!(a.status.code(), Some(0));
    let cached = dir.path().join(format!("v{}", env!("CARGO_PKG_VERSION"))).join("7_3.json");
    assert_eq!(std::fs::read(&cached).unwrap(), a.stdout);
    let b = run();
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, tbk(&["analyze", "7", "3"]).stdout);
}
