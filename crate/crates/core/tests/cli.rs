use std::process::{Command, Output};

use affine_chars::series::from_json;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affine-chars"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_emits_parseable_json_with_leading_one() {
    let o = run(&[
        "compute",
        "--type",
        "A",
        "--rank",
        "2",
        "--formula",
        "sl-half-first",
        "--order",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = from_json(stdout(&o).trim()).unwrap();
    assert_eq!(s.coeff(&[0, 0, 0]), 1.into());
}

#[test]
fn sl2_two_term_tsv_has_two_lines() {
    let o = run(&[
        "compute",
        "--type",
        "A",
        "--rank",
        "1",
        "--formula",
        "sl2-two-term",
        "--s",
        "2",
        "--order",
        "6",
        "--numerator",
        "--format",
        "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\t0\t1\n0\t3\t-1\n");
}

#[test]
fn deligne_numerator_is_integral() {
    let o = run(&[
        "compute",
        "--type",
        "D",
        "--rank",
        "4",
        "--formula",
        "deligne",
        "--weight=-1,0,0,0,0",
        "--order",
        "2",
        "--numerator",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(from_json(stdout(&o).trim()).is_ok());
}

#[test]
fn precondition_violations_exit_2_with_a_message() {
    let o = run(&[
        "compute",
        "--type",
        "A",
        "--rank",
        "1",
        "--formula",
        "sl-half-first",
        "--order",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not apply to A1"));
    let o = run(&["verify", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mathematical_mismatch_exits_1() {
    let o = run(&["verify", "deligne", "--k", "-2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL deligne"));
}

#[test]
fn verify_passes_and_lists_deligne_weights() {
    let o = run(&["verify", "superdenominator-sl", "--n", "3", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["list-deligne", "--type", "D", "--rank", "4", "--k", "-1"]);
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn output_is_identical_across_job_counts() {
    let args = [
        "compute",
        "--type",
        "D",
        "--rank",
        "4",
        "--formula",
        "deligne",
        "--weight=-3,1,0,1,0",
        "--order",
        "3",
    ];
    let one = run(&[&["--jobs", "1"], &args[..]].concat());
    let many = run(&[&["--jobs", "4"], &args[..]].concat());
    assert_eq!(one.stdout, many.stdout);
}
