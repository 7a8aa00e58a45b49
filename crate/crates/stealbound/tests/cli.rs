//! End-to-end tests of the installed binary: exact output bytes, exit codes,
//! file handling, and the state-budget environment variable.

use std::io::Write;
use std::process::{Command, Output};

const BUDGET_ENV: &str = "STEALBOUND_STATE_BUDGET";

fn run(args: &[&str]) -> Output {
    run_with(args, &[])
}

fn run_with(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut command = Command::new(env!("CARGO_BIN_EXE_stealbound"));
    command.args(args).env_remove(BUDGET_ENV);
    for (key, value) in env {
        command.env(key, value);
    }
    command.output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("clean exit")
}

#[test]
fn phi_prints_exact_values() {
    let out = run(&["phi", "--cbt", "4", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "10\n");
    assert!(stderr(&out).is_empty());

    let out = run(&["phi", "--tree", "(((. .) .) (. .))", "--n", "1"]);
    assert_eq!(stdout(&out), "3\n");

    let out = run(&["phi", "--act", "2,3,2", "--n", "1"]);
    assert_eq!(stdout(&out), "5\n");

    let out = run(&["phi", "--tree", "(. .)", "--n", "0"]);
    assert_eq!(stdout(&out), "0\n");

    let out = run(&["phi", "--cbt", "4", "--n", "4", "--vector"]);
    assert_eq!(stdout(&out), "15\n0 4 10 14 15\n");
}

#[test]
fn phi_emits_json() {
    let out = run(&["phi", "--cbt", "4", "--n", "2", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"n\":2,\"phi\":10}\n");

    let out = run(&["phi", "--cbt", "2", "--n", "3", "--vector", "--json"]);
    assert_eq!(stdout(&out), "{\"n\":3,\"phi\":3,\"vector\":[0,2,3,3]}\n");
}

#[test]
fn phi_reads_tree_files_in_both_encodings() {
    let mut text_file = tempfile::NamedTempFile::new().unwrap();
    writeln!(text_file, "(((. .) .) (. .))").unwrap();
    let out = run(&["phi", "--tree-file", text_file.path().to_str().unwrap(), "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4\n");

    let mut json_file = tempfile::NamedTempFile::new().unwrap();
    writeln!(json_file, "[[[0,0],0],[0,0]]").unwrap();
    let out = run(&["phi", "--tree-file", json_file.path().to_str().unwrap(), "--n", "2"]);
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn malformed_input_exits_one() {
    let cases: &[&[&str]] = &[
        &["phi", "--tree", "(.)", "--n", "1"],
        &["phi", "--tree", "((. .)", "--n", "1"],
        &["phi", "--tree", "[0]", "--n", "1"],
        &["phi", "--tree", "[0,", "--n", "1"],
        &["phi", "--tree-file", "/definitely/not/here", "--n", "1"],
        &["phi", "--act", "3,2,1", "--n", "0"],
        &["phi", "--n", "1"],
        &["phi", "--tree", ".", "--cbt", "1", "--n", "0"],
        &["gen", "act", "--b", "0", "--k", "3", "--h", "1"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 1, "args {args:?} -> {}", stderr(&out));
        assert!(stdout(&out).is_empty(), "args {args:?}");
        assert!(!stderr(&out).is_empty(), "args {args:?}");
    }
}

#[test]
fn overflow_exits_two() {
    let out = run(&["phi", "--cbt", "100", "--n", "50"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("64-bit"));

    let out = run(&["phi", "--act", "1,200,40", "--n", "39"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn multi_reports_total_and_order() {
    let mut config = tempfile::NamedTempFile::new().unwrap();
    writeln!(config, "{}", r#"{"trees":[[[[0,0],0],[0,0]],[[0,0],[0,0]]]}"#).unwrap();
    let path = config.path().to_str().unwrap();

    let out = run(&["multi", "--config", path]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "total: 3\norder: 1 0\n");

    let repeat = run(&["multi", "--config", path]);
    assert_eq!(stdout(&repeat), stdout(&out), "output is deterministic");

    let out = run(&["multi", "--config", path, "--json"]);
    assert_eq!(stdout(&out), "{\"order\":[1,0],\"total\":3}\n");

    // A lone tree has nobody to steal from it.
    let mut single = tempfile::NamedTempFile::new().unwrap();
    writeln!(single, "{}", r#"{"trees":[[0,0]]}"#).unwrap();
    let out = run(&["multi", "--config", single.path().to_str().unwrap()]);
    assert_eq!(stdout(&out), "total: 0\norder: 0\n");

    // A height-1 and a height-2 complete binary tree.
    let mut pair = tempfile::NamedTempFile::new().unwrap();
    writeln!(pair, "{}", r#"{"trees":[[0,0],[[0,0],[0,0]]]}"#).unwrap();
    let out = run(&["multi", "--config", pair.path().to_str().unwrap()]);
    assert_eq!(stdout(&out), "total: 2\norder: 0 1\n");
}

#[test]
fn multi_rejects_bad_configurations() {
    let mut empty = tempfile::NamedTempFile::new().unwrap();
    writeln!(empty, "{}", r#"{"trees":[]}"#).unwrap();
    let out = run(&["multi", "--config", empty.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let mut garbage = tempfile::NamedTempFile::new().unwrap();
    writeln!(garbage, "{}", r#"{"trees":[[0]]}"#).unwrap();
    let out = run(&["multi", "--config", garbage.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let out = run(&["multi", "--config", "/definitely/not/here"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn gen_prints_or_writes_trees() {
    let out = run(&["gen", "cbt", "--h", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "((. .) (. .))\n");

    let out = run(&["gen", "act", "--b", "2", "--k", "2", "--h", "0"]);
    assert_eq!(stdout(&out), "(. .)\n");

    let first = run(&["gen", "random", "--leaves", "12", "--arity", "4", "--seed", "7"]);
    let second = run(&["gen", "random", "--leaves", "12", "--arity", "4", "--seed", "7"]);
    assert_eq!(stdout(&first), stdout(&second), "same seed, same tree");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.txt");
    let out = run(&["gen", "cbt", "--h", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "((. .) (. .))\n");
}

#[test]
fn generated_trees_round_trip_through_phi() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("random.txt");
    let out = run(&["gen", "random", "--leaves", "9", "--arity", "3", "--seed", "11", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let out = run(&["phi", "--tree-file", path.to_str().unwrap(), "--n", "2"]);
    assert_eq!(code(&out), 0);
    let value: u64 = stdout(&out).trim().parse().expect("numeric output");
    assert!(value >= 1, "a 9-leaf tree admits at least one steal");
}

#[test]
fn transform_prints_binary_form() {
    let out = run(&["transform", "--tree", "(. . . .)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(((. .) .) .)\n");

    let out = run(&["transform", "--tree", "(. (. . .) .)"]);
    assert_eq!(stdout(&out), "((. ((. .) .)) .)\n");

    // Binary input passes through unchanged.
    let out = run(&["transform", "--tree", "((. .) (. .))"]);
    assert_eq!(stdout(&out), "((. .) (. .))\n");

    let out = run(&["transform", "--tree", "()"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn phi_is_preserved_by_transform() {
    for tree in ["(. . . .)", "(. (. . . .) (. . .))", "((. . .) . . (. .))"] {
        let transformed = run(&["transform", "--tree", tree]);
        assert_eq!(code(&transformed), 0);
        let binary = stdout(&transformed);
        for n in ["0", "1", "2", "3"] {
            let direct = run(&["phi", "--tree", tree, "--n", n]);
            let rewritten = run(&["phi", "--tree", binary.trim(), "--n", n]);
            assert_eq!(stdout(&direct), stdout(&rewritten), "tree {tree}, n = {n}");
        }
    }
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = run(&["verify", "--suite", "small-oracle", "--max-nodes", "5", "--max-n", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("oracle-vs-potential: pass"), "stdout: {text}");
    assert!(text.ends_with("properties passed\n"), "stdout: {text}");

    let out = run(&["verify", "--suite", "multi", "--cases", "8", "--max-p", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("assignment-vs-bruteforce: pass"));
}

#[test]
fn verify_respects_state_budget_env() {
    let args = &["verify", "--suite", "small-oracle", "--max-nodes", "4", "--max-n", "1"];

    let strangled = run_with(args, &[(BUDGET_ENV, "1")]);
    assert_eq!(code(&strangled), 3);
    assert!(stdout(&strangled).contains("FAIL"));

    let invalid = run_with(args, &[(BUDGET_ENV, "banana")]);
    assert_eq!(code(&invalid), 1);
    assert!(stderr(&invalid).contains(BUDGET_ENV));
}

#[test]
fn help_and_version_exit_zero() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("phi"));
    assert!(stdout(&out).contains("verify"));

    let out = run(&["--version"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("stealbound"));

    let out = run(&["phi", "--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("--vector"));
}
