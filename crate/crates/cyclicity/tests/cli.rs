//! End-to-end tests of the command-line interface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclicity"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn construct_delta8_piped_into_empty_exits_zero() {
    let constructed = bin().args(["construct", "delta8"]).output().unwrap();
    assert!(constructed.status.success());
    let text = stdout_of(&constructed);
    assert!(text.starts_with("8\n"));
    let verdict = run_with_stdin(&["empty", "-"], &text);
    assert_eq!(verdict.status.code(), Some(0));
    assert_eq!(stdout_of(&verdict).trim(), "empty");
}

#[test]
fn empty_exits_one_with_witness_on_non_empty_input() {
    let matrix = "1\n2\n";
    let verdict = run_with_stdin(&["empty", "-"], matrix);
    assert_eq!(verdict.status.code(), Some(1));
    let out = stdout_of(&verdict);
    assert!(out.contains("non-empty"));
    assert!(out.contains("witness: 1"));
}

#[test]
fn rank_of_the_three_by_three_triangle() {
    let out = run_with_stdin(&["rank", "-"], "2\n3 0\n0 3\n");
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("divisors: 3 3"));
    assert!(text.contains("rank: 2"));
}

#[test]
fn hollow_and_canon_and_equiv() {
    let square = "2\n2 0\n0 2\n";
    let out = run_with_stdin(&["hollow", "-"], square);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "hollow");

    let out = run_with_stdin(&["canon", "-"], "1\n-5\n");
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "1\n5\n");

    let dir = tempfile::tempdir().unwrap();
    let m1 = dir.path().join("m1.txt");
    let m2 = dir.path().join("m2.txt");
    std::fs::write(&m1, "3\n1 0 0\n0 1 0\n0 0 2\n").unwrap();
    std::fs::write(&m2, "3\n1 0 1\n0 1 1\n0 0 2\n").unwrap();
    let out = bin()
        .args(["equiv", m1.to_str().unwrap(), m2.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "not equivalent");
    let out = bin()
        .args(["equiv", m1.to_str().unwrap(), m1.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout_of(&out).trim(), "equivalent");
}

#[test]
fn parse_errors_exit_two_and_caps_exit_three() {
    let out = run_with_stdin(&["rank", "-"], "2\n1 2 3\n4 5 6\n");
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["census", "--prime", "3", "--dim", "8", "--rank", "5", "--enumeration-cap", "10"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = run_with_stdin(&["empty", "-", "--order-cap", "3"], "1\n5\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn census_report_round_trips_and_is_append_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin()
        .args([
            "census", "--prime", "3", "--dim", "9", "--rank", "6", "--prune", "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let contents = std::fs::read_to_string(&path).unwrap();
    let report = cyclicity::SearchReport::from_json(&contents).unwrap();
    assert_eq!(report.counts.candidates_enumerated, 12376);
    assert_eq!(report.counts.empty_found, 0);
    assert_eq!(report.params.p, 3);

    // a second run against the same path must refuse to overwrite
    let again = bin()
        .args([
            "census", "--prime", "3", "--dim", "9", "--rank", "6", "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_ne!(again.status.code(), Some(0));
}

#[test]
fn table_matches_the_known_values_through_dimension_seven() {
    let out = bin().args(["table", "--max-dim", "7", "--primes", "2,3"]).output().unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    let values: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|line| line.split_whitespace().nth(3).unwrap())
        .collect();
    assert_eq!(values, vec!["0", "0", "1", "1", "2", "3", "4"]);
}

#[test]
fn json_format_emits_machine_readable_output() {
    let out = run_with_stdin(&["--format", "json", "rank", "-"], "2\n4 0\n0 3\n");
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["cyclicity_rank"], 1);
    assert_eq!(value["order"], "12");

    let out = bin().args(["--format", "json", "construct", "white", "2", "5"]).output().unwrap();
    let text = stdout_of(&out);
    let simplex = cyclicity::LatticeSimplex::from_json(&text).unwrap();
    assert_eq!(simplex.dim(), 3);
}

#[test]
fn construct_lift_emits_the_dimension_17_simplex() {
    let out = bin().args(["--format", "json", "construct", "lift"]).output().unwrap();
    assert!(out.status.success());
    let simplex = cyclicity::LatticeSimplex::from_json(&stdout_of(&out)).unwrap();
    assert_eq!(simplex.dim(), 17);
    let form = simplex.p_power().expect("lift carries its block form");
    assert_eq!(form.r(), 13);
}

#[test]
fn environment_and_config_file_are_honored() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("caps.toml");
    std::fs::write(&cfg, "order_cap = 3\n").unwrap();

    // config file blocks the oracle
    let out = run_with_stdin(
        &["--config", cfg.to_str().unwrap(), "empty", "-"],
        "1\n5\n",
    );
    assert_eq!(out.status.code(), Some(3));

    // environment override wins over the file
    let mut child = bin()
        .args(["--config", cfg.to_str().unwrap(), "empty", "-"])
        .env("CYCLICITY_ORDER_CAP", "100")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"1\n5\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1)); // oracle ran: non-empty

    // flag wins over the environment
    let mut child = bin()
        .args(["--config", cfg.to_str().unwrap(), "--order-cap", "2", "empty", "-"])
        .env("CYCLICITY_ORDER_CAP", "100")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"1\n5\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}
