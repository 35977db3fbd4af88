use std::path::Path;
use std::process::Command;

use iet_cli::{run_command, CommandResult};
use tempfile::TempDir;

const ROTATION: &str = r#"{"d":5,"alphabet":["a","b"],"order2":["b","a"],"origin":"0",
"lengths":{"a":"-1/2 + 1/2*sqrt(5)","b":"3/2 - 1/2*sqrt(5)"}}"#;
const RATIONAL: &str = r#"{"d":5,"alphabet":["a","b"],"order2":["b","a"],"origin":"0",
"lengths":{"a":"2/3","b":"1/3"}}"#;
const SINGLE: &str = r#"{"d":2,"alphabet":["x"],"order2":["x"],"origin":"0","lengths":{"x":"sqrt(2)"}}"#;

fn run(args: &[&str]) -> CommandResult {
    run_command(std::iter::once("iet").chain(args.iter().copied()))
}

fn with_spec(dir: &TempDir, name: &str, json: &str, args: &[&str]) -> CommandResult {
    let path = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    let mut argv = vec!["--spec", path.to_str().unwrap()];
    argv.extend_from_slice(args);
    run(&argv)
}

#[test]
fn golden_outputs() {
    let r = run(&["code", "3/2-1/2*sqrt(5)", "7"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "baccbac\n"));
    assert_eq!(run(&["returns", "a"]).stdout, "cbba ccba ccbba\n");
    assert_eq!(run(&["returns", "c"]).stdout, "bac bbac c\n");
    assert_eq!(run(&["factors", "2"]).stdout, "ε\na b c\nac ba bb cb cc\n");
    let d = run(&["derive", "c", "2"]);
    assert_eq!(d.stdout, "f: a->bac, b->bbac, c->c\nε\na b c\nac bb bc ca cb\n");
    let i = run(&["induce", "--seq", "LLLLLL"]);
    assert_eq!(i.code, 0);
    assert!(i.stdout.contains("theta: a->ccba, b->cbba, c->ccbba"), "{}", i.stdout);
    let w = run(&["induce", "--word", "a"]);
    assert!(w.stdout.starts_with("chi: LLLLLL\n"), "{}", w.stdout);
}

#[test]
fn not_admissible_quotes_witness() {
    let r = run(&["admissible", "0", "-5/2+3/2*sqrt(5)"]);
    assert_eq!(r.code, 4);
    assert!(r.stderr.contains("T^-1(γ_3)") && r.stderr.contains("T^0(γ_3)"), "{}", r.stderr);
    let ok = run(&["admissible", "0", "-2+sqrt(5)"]);
    assert_eq!(ok.code, 0, "{}", ok.stderr);
    assert_eq!(run(&["induce", "--interval", "0", "-5/2+3/2*sqrt(5)"]).code, 4);
}

#[test]
fn dot_outputs() {
    let dir = TempDir::new().unwrap();
    let g = with_spec(&dir, "r.json", ROTATION, &["graph"]);
    let dot = g.dot.unwrap();
    assert_eq!(dot.matches("[label=\"(").count(), 2);
    assert_eq!(dot.matches("->").count(), 4);
    assert_eq!(dot.matches("ψ").count(), 2);
    assert_eq!(dot.matches("φ").count(), 2);
    let out = dir.path().join("m.dot");
    let m = with_spec(&dir, "r.json", ROTATION, &["graph", "--modified", "--dot", out.to_str().unwrap()]);
    assert_eq!(m.code, 0);
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written.matches("->").count(), 1);
    assert!(written.contains("n0 -> n0;"));
    let s = with_spec(&dir, "x.json", SINGLE, &["graph"]).dot.unwrap();
    assert_eq!(s.matches("->").count(), 0);
    assert_eq!(s.matches("label=").count(), 1);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(with_spec(&dir, "r.json", ROTATION, &["euclid", "10"]).stdout, "1 1 1 1 1 1 1 1 1 1\n");
    let q = with_spec(&dir, "q.json", RATIONAL, &["euclid", "10"]);
    assert_eq!((q.code, q.stdout.as_str()), (5, "2\n"));
    assert_eq!(with_spec(&dir, "q.json", RATIONAL, &["graph"]).code, 5);
    assert_eq!(run(&["graph", "--budget", "3"]).code, 6);
    assert_eq!(run(&["euclid", "3"]).code, 3);
    assert_eq!(run(&["code", "2", "3"]).code, 3);
    assert_eq!(run(&["code", "sqrt(", "3"]).code, 2);
    assert_eq!(run(&["bogus"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(with_spec(&dir, "bad.json", "{", &["factors", "2"]).code, 2);
    assert_eq!(run(&["--spec", "/nonexistent/spec.json", "factors", "2"]).code, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).code, 2);
}

#[test]
fn verify_suites() {
    let r = run(&["verify"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert_eq!(r.stdout.lines().filter(|l| l.starts_with("PASS ")).count(), 4);
    let dir = TempDir::new().unwrap();
    let q = with_spec(&dir, "q.json", RATIONAL, &["verify", "--suite", "regularity"]);
    assert_eq!(q.code, 1);
    assert!(q.stdout.starts_with("FAIL regularity"));
}

#[test]
fn deterministic_and_round_trips() {
    for args in [&["graph", "--modified"][..], &["morphism"], &["factors", "6"]] {
        assert_eq!(run(args), run(args));
    }
    let dir = TempDir::new().unwrap();
    let induced = run(&["induce", "--seq", "RLL"]).stdout;
    let json = &induced[induced.find('{').unwrap()..];
    let again = with_spec(&dir, "s.json", json, &["induce", "--seq", ""]).stdout;
    assert_eq!(&again[again.find('{').unwrap()..], json);
}

#[test]
fn binary_exit_status() {
    let bin = Path::new(env!("CARGO_BIN_EXE_iet"));
    let out = Command::new(bin).args(["code", "3/2-1/2*sqrt(5)", "7"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "baccbac\n");
    let out = Command::new(bin).args(["admissible", "0", "-5/2+3/2*sqrt(5)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
}
