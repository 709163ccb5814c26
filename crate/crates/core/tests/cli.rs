//! End-to-end tests of the `sympart` binary: output shapes, JSON validity,
//! exit codes and byte determinism.

use std::process::{Command, Output};

fn sympart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn eval_p_at_the_factorial_point() {
    let out = sympart(&["eval-p", "--n", "3", "--x", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "6\n");
}

#[test]
fn eval_p_rec_agrees() {
    let direct = sympart(&["eval-p", "--n", "5", "--x", "1,-2/3,5"]);
    let recursive = sympart(&["eval-p-rec", "--n", "5", "--x", "1,-2/3,5"]);
    assert_eq!(stdout(&direct), stdout(&recursive));
}

#[test]
fn leading_negative_coordinates_parse() {
    // Zero coordinate sum with an odd degree gap forces zero.
    let out = sympart(&["eval-p", "--n", "5", "--x", "-3,3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "0\n");
    let out = sympart(&["w1", "--s", "-5/2", "--d", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn t_poly_json_contract() {
    let out = sympart(&["t-poly", "--r", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"E1^2\":\"1/4\",\"E2\":\"1/12\"}\n");
}

#[test]
fn t_poly_human_layout() {
    let out = sympart(&["t-poly", "--r", "4"]);
    assert_eq!(
        stdout(&out),
        "(15*E1^4 + 30*E1^2*E2 + 5*E2^2 - 2*E4)/240\n"
    );
}

#[test]
fn w1_and_count_match_on_a_closed_form() {
    let w1 = sympart(&["w1", "--s", "3", "--d", "1,1,1"]);
    assert_eq!(stdout(&w1), "10\n");
    let count = sympart(&["w-count", "--s", "3", "--d", "1,1,1"]);
    assert_eq!(stdout(&count), "10\n");
}

#[test]
fn verify_conjecture1_passes_with_exit_zero() {
    let out = sympart(&["verify", "conjecture1", "--max-r", "7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(report["claim"], "conjecture1");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["total"], 6);
    assert_eq!(report["failures"].as_array().map(Vec::len), Some(0));
}

#[test]
fn verify_failures_exit_one_with_the_report_emitted() {
    let out = sympart(&["verify", "relations", "--m", "3", "--trials", "4", "--json"]);
    assert_eq!(out.status.code(), Some(1), "the misprinted E6 reduction must flip the exit code");
    let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(report["status"], "fail");
    let failures = report["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    for failure in failures {
        assert_eq!(failure["inputs"]["relation"], "E6");
        assert!(failure["inputs"]["x"].is_string());
        assert!(failure["expected"].is_string());
        assert!(failure["actual"].is_string());
    }
}

#[test]
fn verify_relations_all_sizes_emits_an_array() {
    let out = sympart(&["verify", "relations", "--trials", "4", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    let reports = reports.as_array().expect("array of reports");
    assert_eq!(reports.len(), 3);
    assert_eq!(reports[0]["claim"], "relations.m1");
    assert_eq!(reports[0]["status"], "pass");
    assert_eq!(reports[1]["status"], "pass");
    assert_eq!(reports[2]["status"], "fail");
}

#[test]
fn verify_suites_run_clean() {
    for (suite, extra) in [
        ("conjecture2", vec!["--m", "4", "--trials", "5"]),
        ("bounds", vec!["--max-r", "4", "--m", "2", "--trials", "10"]),
        ("lemmas", vec!["--trials", "10"]),
        ("parity", vec!["--tuples", "3"]),
        ("eq28", vec!["--n", "5"]),
    ] {
        let mut args = vec!["verify", suite];
        args.extend(extra);
        let out = sympart(&args);
        assert_eq!(out.status.code(), Some(0), "suite {suite}: {}", stderr(&out));
    }
}

#[test]
fn parity_single_tuple_with_probes() {
    let out = sympart(&["verify", "parity", "--d", "1,2", "--s", "0,1,5/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("parity: pass"));
}

#[test]
fn usage_errors_are_one_line_and_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["eval-p", "--n", "3", "--x", "1,,2"],
        vec!["eval-p", "--n", "3"],
        vec!["eval-p", "--n", "3", "--x", "1", "--bogus"],
        vec!["w1", "--s", "x", "--d", "1,2"],
        vec!["nonsense"],
    ];
    for args in cases {
        let out = sympart(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        let err = stderr(&out);
        assert_eq!(err.trim_end().lines().count(), 1, "args {args:?}: {err}");
        assert!(stdout(&out).is_empty());
    }
}

#[test]
fn domain_errors_exit_two() {
    let out = sympart(&["w-count", "--s", "4", "--d", "0,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "));
}

#[test]
fn byte_identical_reruns() {
    let args = ["verify", "bounds", "--max-r", "3", "--m", "2", "--trials", "20", "--json"];
    let a = sympart(&args);
    let b = sympart(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());

    // Different seeds change sampled points but not validity.
    let c = sympart(&["verify", "bounds", "--max-r", "3", "--m", "2", "--trials", "20", "--json", "--seed", "7"]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn bernoulli_and_cnr_values() {
    assert_eq!(stdout(&sympart(&["bernoulli", "--k", "1"])), "-1/2\n");
    assert_eq!(stdout(&sympart(&["bernoulli", "--k", "12"])), "-691/2730\n");
    assert_eq!(stdout(&sympart(&["cnr", "--n", "4", "--r", "4"])), "272\n");
    assert_eq!(
        stdout(&sympart(&["cnr", "--n", "4", "--r", "4", "--closed"])),
        "272\n"
    );
    let out = sympart(&["cnr", "--n", "12", "--r", "5", "--closed"]);
    assert_eq!(out.status.code(), Some(2), "closed form beyond r=4 is unsupported");
}

#[test]
fn help_exits_zero() {
    let out = sympart(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verify"));
}
