//! End-to-end tests of the `eisenlat` binary: exit codes, text formatting,
//! JSON schema stability, and run-to-run determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eisenlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn passing_suite_exits_zero_with_one_line_per_check() {
    let out = run(&["codes"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert_eq!(pass_lines, 17);
    assert!(text.trim_end().ends_with("PASS: 17/17 checks passed"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["definitely-not-a-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown suite"));
    assert!(err.contains("codes"));
}

#[test]
fn cap_exhaustion_fails_the_check_and_exits_one() {
    let out = run(&["root-lattices", "--closure-cap", "10"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    // The failing checks are named, with their claims, in the text output.
    assert!(text.contains("FAIL root-lattices."));
    assert!(text.contains("reflection group"));
    assert!(text.contains("exceeded cap"));
}

#[test]
fn json_report_is_stable_and_idempotent() {
    let a = run(&["codes", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let mut va: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for field in ["suite", "tool_version", "closure_cap", "enum_cap", "threads", "wall_ms", "overall", "checks"] {
        assert!(va.get(field).is_some(), "missing field {field}");
    }
    assert_eq!(va["suite"], "codes");
    assert_eq!(va["overall"], true);
    let first = &va["checks"][0];
    for field in ["id", "claim", "expected", "actual", "pass"] {
        assert!(first.get(field).is_some(), "missing check field {field}");
    }

    // A second run differs only in wall time.
    let b = run(&["codes", "--json"]);
    let mut vb: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    va["wall_ms"] = 0.into();
    vb["wall_ms"] = 0.into();
    assert_eq!(va, vb);
}

#[test]
fn thread_count_does_not_change_results() {
    let seq = run(&["model", "--json", "--threads", "1"]);
    let par = run(&["model", "--json", "--threads", "4"]);
    let mut vs: serde_json::Value = serde_json::from_slice(&seq.stdout).unwrap();
    let mut vp: serde_json::Value = serde_json::from_slice(&par.stdout).unwrap();
    for v in [&mut vs, &mut vp] {
        v["wall_ms"] = 0.into();
        v["threads"] = 0.into();
    }
    assert_eq!(vs, vp);
}

#[test]
fn verbose_progress_stays_out_of_the_report() {
    let quiet = run(&["codes", "--json"]);
    let loud = run(&["codes", "--json", "--verbose"]);
    let mut vq: serde_json::Value = serde_json::from_slice(&quiet.stdout).unwrap();
    let mut vl: serde_json::Value = serde_json::from_slice(&loud.stdout).unwrap();
    vq["wall_ms"] = 0.into();
    vl["wall_ms"] = 0.into();
    assert_eq!(vq, vl);
    assert!(!String::from_utf8(loud.stderr).unwrap().is_empty());
}
