//! End-to-end tests of the command-line interface: flag handling, JSON
//! canonical form, and the exit status contract (0 success, 1 check failure,
//! 2 usage error).

use serde_json::Value;
use std::process::{Command, Output};

fn kostka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostka")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn kostka_charge_example() {
    let out = kostka(&["kostka", "--lambda", "2,1", "--mu", "1,1,1", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["k"]["1"], "1");
    assert_eq!(v["k"]["2"], "1");
    assert_eq!(v["ktilde"]["1"], "1");
    assert_eq!(v["ktilde"]["2"], "1");
    assert_eq!(v["checks"]["hook_matches"], true);
}

#[test]
fn kostka_mu_row_hook_shortcut() {
    let out = kostka(&["kostka", "--mu-row", "3", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["method"], "hook");
    assert_eq!(v["mu"], "1,1,1");
    assert_eq!(v["k"]["3"], "1");
}

#[test]
fn kostka_diagonal_is_one() {
    let out = kostka(&["kostka", "--lambda", "2,1", "--mu", "2,1", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["k"]["0"], "1");
}

#[test]
fn kostka_ring_method_cross_checks() {
    let out = kostka(&[
        "kostka", "--lambda", "2,1", "--mu", "1,1,1", "--method", "ring", "--format", "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["checks"]["ring_matches"], true);
}

#[test]
fn hook_method_rejects_non_column_content() {
    let out = kostka(&["kostka", "--lambda", "2,1", "--mu", "2,1", "--method", "hook"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ring_report_example() {
    let out = kostka(&["ring", "--mu", "2,1", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["hilbert"]["0"], "1");
    assert_eq!(v["hilbert"]["1"], "2");
    assert_eq!(v["decomposition"]["3"]["0"], "1");
    assert_eq!(v["decomposition"]["2,1"]["1"], "1");
    assert_eq!(v["amu_dims"], serde_json::json!([1, 2]));
    assert_eq!(v["checks"]["kostka_match"], true);
    assert_eq!(v["checks"]["fstar_match"], true);
}

#[test]
fn ring_accepts_custom_points() {
    let out = kostka(&["ring", "--mu", "2,1", "--points", "5,9", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["checks"]["fstar_match"], true);
}

#[test]
fn ring_rejects_wrong_point_count() {
    let out = kostka(&["ring", "--mu", "2,1", "--points", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fusion_report_example() {
    let out = kostka(&["fusion", "--mu", "1,1", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["total_dim"], 4);
    assert_eq!(v["dims_per_degree"], serde_json::json!([3, 1]));
    assert_eq!(v["decomposition"]["2"]["0"], "1");
    assert_eq!(v["decomposition"]["1,1"]["1"], "1");
    assert_eq!(v["checks"]["kostka_match"], true);
    assert_eq!(v["checks"]["z_independence"], true);
}

#[test]
fn fusion_with_explicit_points() {
    let out =
        kostka(&["fusion", "--mu", "2,1", "--n", "2", "--points", "0,1", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["decomposition"]["3"]["0"], "1");
    assert_eq!(v["decomposition"]["2,1"]["1"], "1");
}

#[test]
fn fusion_repeated_points_is_usage_error() {
    let out = kostka(&["fusion", "--mu", "2,1", "--n", "2", "--points", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wedge_report_example() {
    let out = kostka(&["wedge", "--N", "3", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["checks"]["routes_agree"], true);
    assert_eq!(v["checks"]["identity_ok"], true);
    assert_eq!(v["character_route"]["2,1"]["-1"], "1");
    assert_eq!(v["character_route"]["2,1"]["-2"], "1");
    assert_eq!(v["character_route"], v["brute_force_route"]);
}

#[test]
fn winf_vacuum_series() {
    let out = kostka(&["winf", "--mu", "", "--n", "2", "--depth", "5", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["series"]["0"], "1");
    assert!(v["series"].get("1").is_none());
    assert_eq!(v["series"]["2"], "1");
    assert_eq!(v["series"]["3"], "1");
    assert_eq!(v["series"]["4"], "2");
    assert_eq!(v["series"]["5"], "2");
    assert_eq!(v["checks"]["winf_match"], true);
    assert_eq!(v["checks"]["stabilized"], true);
}

#[test]
fn winf_with_explicit_parameters() {
    let out = kostka(&[
        "winf", "--mu", "1", "--n", "2", "--i", "1", "--depth", "4", "--mmax", "8", "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["checks"]["winf_match"], true);
}

#[test]
fn hooks_report_flags_printed_variant() {
    let out = kostka(&["hooks", "--mu", "2,1", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["checks"]["corrected_ok"], true);
    assert_eq!(v["checks"]["printed_ok"], false);
}

#[test]
fn verify_quick_passes() {
    let out = kostka(&["verify", "--level", "quick", "--format", "json"]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 9);
}

#[test]
fn verify_corrupted_fails_with_degree() {
    let out = kostka(&["verify", "--level", "quick", "--corrupt", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["pass"], false);
    let c1 = &v["criteria"][0];
    assert_eq!(c1["pass"], false);
    let detail = c1["detail"].as_str().unwrap();
    assert!(detail.contains("degree"), "{detail}");
    assert!(detail.contains("rmu_hilbert"), "{detail}");
}

#[test]
fn json_output_is_canonical() {
    for args in [
        vec!["ring", "--mu", "2,1", "--format", "json"],
        vec!["fusion", "--mu", "2,1", "--n", "2", "--format", "json"],
        vec!["wedge", "--N", "2", "--n", "2", "--format", "json"],
        vec!["kostka", "--lambda", "2,1", "--mu", "1,1,1", "--format", "json"],
    ] {
        let out = kostka(&args);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let v: Value = serde_json::from_str(text.trim()).unwrap();
        let regenerated = serde_json::to_string(&v).unwrap();
        assert_eq!(text.trim(), regenerated, "args: {args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(kostka(&["kostka"]).status.code(), Some(2));
    assert_eq!(kostka(&["kostka", "--lambda", "2,1", "--mu", "1,1"]).status.code(), Some(2));
    assert_eq!(kostka(&["ring", "--mu", "0"]).status.code(), Some(2));
    assert_eq!(kostka(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn text_format_is_default_and_readable() {
    let out = kostka(&["ring", "--mu", "2,1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Hilbert series"), "{text}");
    assert!(text.contains("kostka_match=true"), "{text}");
}
