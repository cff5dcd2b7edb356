use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn mcgverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcgverify")).args(args).env_remove("MCGVERIFY_MAX_COSETS").output().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const N3_GEN1: &str = "# pi_1(N_3) with the first generating set of its two-sided subgroup
gens: x1 x2 x3
rel: x1 x1 x2 x2 x3 x3
sub: x2 x1
sub: x1 x2
sub: x3 x2
sub: x2 x3
sub: x1 x3
sub: x3 x1
sub: x1 x1
";

#[test]
fn coset_enum_index_two() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "n3.txt", N3_GEN1);
    let o = mcgverify(&["coset-enum", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "index: 2\n");
}

#[test]
fn coset_enum_klein_four_with_table() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "v4.txt", "gens: a b\nrel: a a\nrel: b b\nrel: a b a^-1 b^-1\n");
    let o = mcgverify(&["coset-enum", &f, "--dump-table"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("index: 4"));
    assert_eq!(lines.next(), Some("coset\ta\ta^-1\tb\tb^-1"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn coset_enum_parse_error_reports_line() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", "gens: a b\nrel: a a\nrel: a c\n");
    let o = mcgverify(&["coset-enum", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('3'));
}

#[test]
fn coset_enum_overflow_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "free.txt", "gens: a b\n");
    let o = mcgverify(&["coset-enum", &f, "--max-cosets", "50"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("live cosets"));

    let o = Command::new(env!("CARGO_BIN_EXE_mcgverify"))
        .args(["coset-enum", &f])
        .env("MCGVERIFY_MAX_COSETS", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 50"));
}

#[test]
fn abelianize_examples() {
    let dir = TempDir::new().unwrap();
    for (text, expected) in [
        ("gens: x y\nrel: x x y y\n", "Z^1 ⊕ Z_2"),
        ("gens: x1 x2 x3\n", "Z^3"),
        ("gens: x1 x2 x3\nrel: x1 x1 x2 x2 x3 x3\n", "Z^2 ⊕ Z_2"),
    ] {
        let f = write(&dir, "p.txt", text);
        let o = mcgverify(&["abelianize", &f]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some(expected));
        let json: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert!(json.get("free_rank").is_some());
    }
    let o = mcgverify(&["abelianize", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_single_check() {
    let o = mcgverify(&["verify", "--check", "h1-genus3"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    assert_eq!(results[0]["details"]["h1_text"], "Z^2 ⊕ Z_2");
    assert_eq!(report["summary"], serde_json::json!({ "pass": 1, "fail": 0, "discrepancy": 0 }));
    assert!(report["timestamp"].is_string());
}

#[test]
fn verify_unknown_check_lists_ids() {
    let o = mcgverify(&["verify", "--check", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("prop-rm"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mcgverify(&["verify"]).status.code(), Some(2));
    assert_eq!(mcgverify(&["verify", "--all", "--max-genus", "2"]).status.code(), Some(2));
    assert_eq!(mcgverify(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_byte_identical_without_timing() {
    let args = ["verify", "--all", "--max-genus", "5", "--no-timing"];
    let a = mcgverify(&args);
    let b = mcgverify(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    let results = report["results"].as_array().unwrap();
    let s = &report["summary"];
    let total = s["pass"].as_u64().unwrap() + s["fail"].as_u64().unwrap() + s["discrepancy"].as_u64().unwrap();
    assert_eq!(total as usize, results.len());
    assert_eq!(s["fail"], 0);
    assert!(report.get("timestamp").is_none());
}

#[test]
fn markdown_report_to_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.md");
    let o = mcgverify(&["verify", "--all", "--max-genus", "4", "--format", "md", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let md = fs::read_to_string(Path::new(&out)).unwrap();
    assert!(md.contains("discrepancy-reported"));
    let json = mcgverify(&["verify", "--all", "--max-genus", "4", "--no-timing"]);
    let report: Value = serde_json::from_slice(&json.stdout).unwrap();
    let rows = md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| check")).count();
    assert_eq!(rows, report["results"].as_array().unwrap().len());
}

#[test]
fn action_of_words() {
    let o = mcgverify(&["action", "--genus", "3", "T1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "010\n100\n001\nidentity: false\n");
    let o = mcgverify(&["action", "--genus", "4", "a1;2,3 T1,2,3,4^2"]);
    assert!(stdout(&o).ends_with("identity: true\n"));
    assert_eq!(mcgverify(&["action", "--genus", "3", "T1,9"]).status.code(), Some(2));
}
