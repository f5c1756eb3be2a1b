use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidtwist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn fdtc_of_full_twist() {
    let v = json(&["fdtc", "--n", "3", "--word", "1 2 1 2 1 2", "--k", "10"]);
    assert_eq!(v["result"]["text"], "[1, 11/10]");
    assert_eq!(v["result"]["interval"]["lo"], "1");
    assert_eq!(v["result"]["interval"]["hi"], "11/10");
    assert_eq!(v["result"]["floor"], 10);
}

#[test]
fn fdtc_from_tolerance() {
    let v = json(&["fdtc", "--n", "3", "--word", "1 2 1 2 1 2", "--tol", "1/8"]);
    assert_eq!(v["result"]["k"], 8);
    assert_eq!(v["result"]["text"], "[1, 9/8]");
}

#[test]
fn compare_identity_with_generator() {
    let v = json(&["compare", "--n", "3", "--word", "", "--word2", "1"]);
    assert_eq!(v["result"]["relation"], "LT");
    let v = json(&["compare", "--n", "3", "--word", "1 2 1", "--word2", "2 1 2"]);
    assert_eq!(v["result"]["relation"], "EQ");
    let v = json(&["compare", "--n", "3", "--word", "-1", "--word2", "-2"]);
    assert_eq!(v["result"]["relation"], "LT");
}

#[test]
fn defect_baseline_without_samples() {
    let v = json(&["defect", "--n", "3", "--samples", "0", "--len", "0", "--k", "32", "--seed", "7"]);
    assert_eq!(v["result"]["lemma"]["gap"]["lo"], "29/32");
    assert_eq!(v["result"]["best"]["source"], "lemma");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["defect", "--n", "4", "--samples", "40", "--len", "6", "--k", "8", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["convergence", "--n", "4", "--word", "1 2 -3 2", "--kmax", "6", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn convergence_csv_columns() {
    let out = run(&["convergence", "--n", "3", "--word", "1 2", "--kmax", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["k,floor,lo,hi", "1,0,0,1", "2,0,0,1/2", "3,1,1/3,2/3"]);
}

#[test]
fn eval_reports_invariants() {
    let v = json(&["eval", "--n", "3", "--word", "1 2 1 2 1 2"]);
    let r = &v["result"];
    assert_eq!(r["writhe"], 6);
    assert_eq!(r["pure"], true);
    assert_eq!(r["components"], 3);
    assert_eq!(r["infimum"], 2);
    assert_eq!(r["canonical_length"], 0);
    assert_eq!(v["inputs"]["word"], "1 2 1 2 1 2");
}

#[test]
fn words_are_echoed_in_canonical_text_form() {
    let v = json(&["floor", "--n", "4", "--word", "  -1   3 2 "]);
    assert_eq!(v["inputs"]["word"], "-1 3 2");
}

#[test]
fn decompose_worked_example() {
    let v = json(&["decompose", "--n", "3", "--word", "1 2 1 2"]);
    let d = &v["result"]["decomposition"];
    assert_eq!(d["l"], 1);
    assert_eq!(d["L"][0], "-1");
    assert_eq!(d["R"][0], "-2");
    assert_eq!(d["conjugator"], "2");
    assert_eq!(v["result"]["verified"], true);
}

#[test]
fn qp_checks_verify() {
    let v = json(&["qp", "--n", "3", "--factors", "2:1;:2;-1 2:1", "--k", "8"]);
    assert_eq!(v["status"], "Verified");
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 4);
    let v = json(&["qp", "--n", "2", "--factors", ":1;:1;:1", "--k", "4"]);
    assert_eq!(v["result"]["checks"].as_array().unwrap().len(), 2);
    assert_eq!(v["result"]["notes"].as_array().unwrap().len(), 1);
}

#[test]
fn input_errors_exit_two_with_json() {
    for args in [
        &["floor", "--n", "3", "--word", "1 3"][..],
        &["floor", "--n", "3", "--word", "1 0"],
        &["eval", "--n", "3"],
        &["eval", "--n", "3", "--word", "1", "--format", "csv"],
        &["decompose", "--n", "3", "--word", "-1"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"]["exit_code"], 2);
        assert!(err["error"]["kind"].is_string());
    }
}

#[test]
fn oversized_powers_exit_three() {
    let out = run(&["fdtc", "--n", "3", "--word", "1 2 1 2", "--k", "2000000"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "word_too_long");
}
