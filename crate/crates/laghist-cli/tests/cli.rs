//! Black-box tests of the installed binary: spawn it exactly as a user
//! would, feed arguments or standard input, and assert on the exact bytes,
//! the exit code, and the report JSON.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_laghist");
const SIGMA: &str = "4 9 2 11 5 10 1 3 6 8 7 12 16 17 13 14 15";
const HISTORY_A: &str = "17\n1 U - -\n2 U - -\n3 LB - 2\n4 LA 1 -\n5 LC - 3\n6 U - -\n7 LB - 1\n8 LB - 1\n9 D 1 1\n10 D 2 2\n11 D 1 1\n12 LC - 1\n13 U - -\n14 U - -\n15 LB - 1\n16 D 1 1\n17 D 1 1";
const HISTORY_B: &str = "17\n1 U - -\n2 U - -\n3 LB - 2\n4 LA 1 -\n5 LB - 1\n6 U - -\n7 LC - 4\n8 LC - 4\n9 D 1 1\n10 D 2 1\n11 D 1 1\n12 LC - 1\n13 U - -\n14 U - -\n15 LC - 3\n16 D 1 1\n17 D 1 1";

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut command = Command::new(BIN);
    command.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    command.stdin(if stdin.is_some() { Stdio::piped() } else { Stdio::null() });
    let mut child = command.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .expect("stdin was requested")
            .write_all(text.as_bytes())
            .expect("stdin accepts the input");
    }
    child.wait_with_output().expect("binary runs to completion")
}

fn stdout_of(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output is UTF-8")
}

#[test]
fn phi_maps_the_worked_example() {
    assert_eq!(
        stdout_of(&["phi", SIGMA], None),
        "4 9 2 11 1 10 7 8 3 5 6 12 16 17 15 13 14\n"
    );
}

#[test]
fn phicap_maps_the_worked_example() {
    assert_eq!(
        stdout_of(&["phicap", SIGMA], None),
        "4 11 2 9 1 10 7 8 5 3 6 12 17 16 15 14 13\n"
    );
}

#[test]
fn stats_lists_every_set_of_a_transposition() {
    let expected = "recp = 1\nrecl = 2\narecp = 2\narecl = 1\nerecp = 1\nerecl = 2\n\
                    rar =\nexcp = 1\nexcl = 2\ncyc = 2\ncval = 1\ncpeak = 2\n\
                    cdrise =\ncdfall =\nfix =\n";
    assert_eq!(stdout_of(&["stats", "2 1"], None), expected);
}

#[test]
fn stats_on_a_singleton_shows_the_record_antirecord_fixed_point() {
    let expected = "recp = 1\nrecl = 1\narecp = 1\narecl = 1\nerecp =\nerecl =\n\
                    rar = 1\nexcp =\nexcl =\ncyc = 1\ncval =\ncpeak =\n\
                    cdrise =\ncdfall =\nfix = 1\n";
    assert_eq!(stdout_of(&["stats", "1"], None), expected);
}

#[test]
fn encode_then_decode_is_the_identity_through_a_pipe() {
    let encoded = stdout_of(&["encode", "1 2 3 4 5"], None);
    assert_eq!(stdout_of(&["decode"], Some(&encoded)), "1 2 3 4 5\n");
}

#[test]
fn encode_reproduces_the_worked_example_history() {
    let mut expected = String::from(HISTORY_A);
    expected.push('\n');
    assert_eq!(stdout_of(&["encode", SIGMA], None), expected);
}

#[test]
fn history_rewrites_compose_through_pipes() {
    let rewritten = stdout_of(&["rho1"], Some(HISTORY_A));
    assert_eq!(rewritten, format!("{HISTORY_B}\n"));
    assert_eq!(stdout_of(&["rho1-inv"], Some(&rewritten)), format!("{HISTORY_A}\n"));
    let twice = stdout_of(&["rho2"], Some(&stdout_of(&["rho2"], Some(HISTORY_A))));
    assert_eq!(twice, format!("{HISTORY_A}\n"));
}

#[test]
fn render_draws_rows_and_label_lines() {
    let out = stdout_of(&["encode", "3 1 2", "--render"], None);
    let expected = "3\n1 U - -\n2 LB - 1\n3 D 1 1\n\n   1 |  /  -  \\\n   0 |\nstep |  U LB  D\n  xi |  -  -  1\n eta |  -  1  1\n";
    assert_eq!(out, expected);
}

#[test]
fn verify_emits_one_json_object_with_the_agreed_fields() {
    let out = stdout_of(&["verify", "roundtrip", "--n-max", "0"], None);
    let report: serde_json::Value = serde_json::from_str(&out).expect("stdout is JSON");
    assert_eq!(report["check_name"], "roundtrip");
    assert_eq!(report["n_range"], serde_json::json!([0, 0]));
    assert_eq!(report["cases_run"], 1);
    assert_eq!(report["failures"], serde_json::json!([]));
    assert_eq!(report["passed"], true);
    assert!(report["elapsed_ms"].is_u64());
}

#[test]
fn verify_theorem1_covers_874_cases_at_the_default_size() {
    let out = stdout_of(&["verify", "theorem1"], None);
    let report: serde_json::Value = serde_json::from_str(&out).expect("stdout is JSON");
    assert_eq!(report["cases_run"], 874);
    assert_eq!(report["passed"], true);
}

#[test]
fn verify_reports_are_worker_count_independent() {
    let lone = stdout_of(&["verify", "theorem2", "--n-max", "4"], None);
    let sharded = stdout_of(&["verify", "theorem2", "--n-max", "4", "--workers", "4"], None);
    let mut lone: serde_json::Value = serde_json::from_str(&lone).unwrap();
    let mut sharded: serde_json::Value = serde_json::from_str(&sharded).unwrap();
    lone["elapsed_ms"] = serde_json::json!(0);
    sharded["elapsed_ms"] = serde_json::json!(0);
    assert_eq!(lone, sharded);
}

#[test]
fn verify_text_format_prints_one_verdict_line() {
    let out = stdout_of(&["verify", "cf-stieltjes", "--n-max", "4", "--format", "text"], None);
    assert!(out.starts_with("cf-stieltjes: passed (5 cases, n <= 4, 0 failures,"), "got: {out}");
}

#[test]
fn moment_listing_is_frozen_for_the_ladder_schedule() {
    let expected = "moment 0\n1\n\nmoment 1\n1 * x\n\nmoment 2\n1 * x^2\n1 * x y\n\n\
                    moment 3\n1 * x^3\n3 * x^2 y\n1 * x y^2\n1 * x y u\n";
    assert_eq!(stdout_of(&["cf", "--order", "3"], None), expected);
}

#[test]
fn brute_force_moments_agree_with_the_schedule_through_the_cli() {
    let ladder = stdout_of(&["cf", "--kind", "stieltjes", "--order", "4"], None);
    let by_antirecords = stdout_of(&["cf", "--kind", "brute-arec", "--order", "4"], None);
    let by_cycles = stdout_of(&["cf", "--kind", "brute-cyc", "--order", "4"], None);
    assert_eq!(ladder, by_antirecords);
    assert_eq!(ladder, by_cycles);
    let three_term = stdout_of(&["cf", "--kind", "jacobi", "--order", "4"], None);
    let brute = stdout_of(&["cf", "--kind", "brute-jacobi", "--order", "4"], None);
    assert_eq!(three_term, brute);
}

#[test]
fn identical_input_gives_identical_bytes() {
    let first = run(&["stats", SIGMA], None);
    let second = run(&["stats", SIGMA], None);
    assert_eq!(first.stdout, second.stdout);
    let first = run(&["encode", SIGMA, "--render"], None);
    let second = run(&["encode", SIGMA, "--render"], None);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unknown_check_and_oversized_runs_are_refused_with_exit_2() {
    let out = run(&["verify", "nope"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown check"));

    let out = run(&["verify", "roundtrip", "--n-max", "11"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refused"));

    let out = run(&["cf", "--order", "11"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refused"));
}

#[test]
fn malformed_inputs_fail_with_exit_2_and_a_diagnostic() {
    let out = run(&["stats", "1 3"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert!(out.stdout.is_empty());

    let out = run(&["decode", "garbage"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("length line"));

    let out = run(&["rho1", "2\n1 U - -\n2 D 1 2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let out = run(&[], None);
    assert_eq!(out.status.code(), Some(2));
}
