//! End-to-end tests of the `tesler` binary: documented outputs, JSON
//! schemas, exit codes, and output determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tesler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout_of(&["count", "--hooks", "1,1,1"]).trim(), "7");
    assert_eq!(
        stdout_of(&["count", "--hooks", "1,1,1,1,1,1"]).trim(),
        "4820"
    );
    assert_eq!(stdout_of(&["count", "--hooks", "0,0"]).trim(), "1");
}

#[test]
fn count_json_envelope() {
    let out = stdout_of(&["count", "--hooks", "1,1,1", "--format", "json"]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["command"], "count");
    assert_eq!(v["inputs"]["hooks"], "1,1,1");
    assert_eq!(v["value"], "7");
}

#[test]
fn enumerate_counts_and_limit() {
    let text = stdout_of(&["enumerate", "--hooks", "1,1"]);
    // two matrices, blank-line separated
    assert_eq!(text.split("\n\n").filter(|b| !b.trim().is_empty()).count(), 2);

    let json = stdout_of(&["enumerate", "--hooks", "1,1,1", "--format", "json"]);
    let records: Vec<Value> = json
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 7);
    for r in &records {
        assert_eq!(r["n"], 3);
        assert_eq!(r["hooks"], serde_json::json!([1, 1, 1]));
        assert_eq!(r["rows"].as_array().unwrap().len(), 3);
    }

    let capped = stdout_of(&["enumerate", "--hooks", "1,1,1", "--format", "json", "--limit", "3"]);
    assert_eq!(capped.lines().count(), 3);

    let zero = stdout_of(&["enumerate", "--hooks", "0", "--format", "json"]);
    assert_eq!(zero.lines().count(), 1);
}

#[test]
fn enumerate_json_round_trips_schema() {
    let json = stdout_of(&["enumerate", "--hooks", "2,0,1", "--format", "json"]);
    for line in json.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        let m = tesler::TeslerMatrix::from_json(&v).expect("schema round-trips");
        assert_eq!(m.to_json(), v);
    }
}

#[test]
fn volume_examples() {
    assert_eq!(stdout_of(&["volume", "--hooks", "1,1,1"]).trim(), "4");
    assert_eq!(stdout_of(&["volume", "--ones", "4"]).trim(), "160");
    assert_eq!(stdout_of(&["volume", "--cry", "5"]).trim(), "10");
}

#[test]
fn faces_examples() {
    assert_eq!(
        stdout_of(&["faces", "--hooks", "1,1,1", "--fvector"]).trim(),
        "6,9,5,1"
    );
    assert_eq!(
        stdout_of(&["faces", "--hooks", "1,1,1,1", "--hvector"]).trim(),
        "1,3,5,6,5,3,1"
    );
    assert_eq!(
        stdout_of(&["faces", "--hooks", "7,0,3,0", "--simple"]).trim(),
        "true"
    );
    assert_eq!(
        stdout_of(&["faces", "--hooks", "1,0,1,0,1", "--simple"]).trim(),
        "false"
    );
    // leading zeros reduce away
    assert_eq!(
        stdout_of(&["faces", "--hooks", "0,1,1", "--fvector"]).trim(),
        "2,1"
    );
    let verts = stdout_of(&["faces", "--hooks", "1,1,1", "--vertices", "--format", "json"]);
    let v: Value = serde_json::from_str(verts.trim()).unwrap();
    assert_eq!(v["value"].as_array().unwrap().len(), 6);
}

#[test]
fn hilbert_examples() {
    assert_eq!(
        stdout_of(&["hilbert", "--n", "2", "--weights", "haglund"]).trim(),
        "1 + q + t"
    );
    assert_eq!(
        stdout_of(&["hilbert", "--n", "3", "--weights", "gn", "--eval", "1,1"]).trim(),
        "5"
    );
    assert_eq!(
        stdout_of(&["hilbert", "--n", "3", "--weights", "haglund", "--oracle"]).trim(),
        "MATCH"
    );
    assert_eq!(
        stdout_of(&["hilbert", "--n", "4", "--weights", "haglund", "--eval", "1,1"]).trim(),
        "125"
    );
    let json = stdout_of(&["hilbert", "--n", "2", "--weights", "haglund", "--format", "json"]);
    let v: Value = serde_json::from_str(json.trim()).unwrap();
    let poly = tesler::QTPoly::from_json(&v["value"]).unwrap();
    assert_eq!(poly, tesler::parking_gf(2).unwrap());
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--suite", "all", "--nmax", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));
    assert!(text.trim_end().ends_with("0 failed"));
}

#[test]
fn verify_json_shape() {
    let out = stdout_of(&["verify", "--suite", "harmonics", "--nmax", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["command"], "verify");
    for check in v["value"].as_array().unwrap() {
        assert_eq!(check["passed"], true);
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(exit_code(&["count", "--hooks", "1,x"]), 1);
    assert_eq!(exit_code(&["count", "--hooks", "-1,2"]), 1);
    assert_eq!(exit_code(&["volume"]), 1);
    assert_eq!(exit_code(&["volume", "--cry", "1"]), 1);
    assert_eq!(exit_code(&["faces", "--hooks", "1,1", "--fvector", "--simple"]), 1);
    assert_eq!(exit_code(&["faces", "--hooks", "1,0,1,0,1", "--hvector"]), 1);
    assert_eq!(exit_code(&["nonsense"]), 1);
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn diagnostics_go_to_stderr() {
    let out = run(&["count", "--hooks", "1,1"]);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("elapsed_ms="));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(!stdout.contains("elapsed_ms="));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["enumerate", "--hooks", "1,1,1", "--format", "json"],
        vec!["verify", "--suite", "counts", "--nmax", "4"],
        vec!["hilbert", "--n", "3", "--weights", "haglund", "--format", "json"],
    ] {
        let first = stdout_of(&args);
        let second = stdout_of(&args);
        assert_eq!(first, second, "nondeterministic output for {args:?}");
    }
}
