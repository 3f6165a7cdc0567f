use std::path::PathBuf;
use std::process::Command;

use sha2::{Digest, Sha256};

fn problem(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems").join(name);
    p.to_str().unwrap().to_string()
}

fn zdci(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zdci")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn plane_curve_is_strictly_ci() {
    let (code, out, _) = zdci(&["check", "sci", &problem("plane_curve_nine.problem")]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: TRUE"));
    assert!(out.contains("{2,4}"));
}

#[test]
fn border_method_agrees_on_plane_curve() {
    let (code, out, _) = zdci(&["check", "sci", &problem("plane_curve_nine.problem"), "--method", "border"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: TRUE"));
}

#[test]
fn eight_points_exit_one() {
    let (code, out, _) = zdci(&["check", "sci", &problem("twisted_cubic_eight_points.problem")]);
    assert_eq!(code, 1);
    assert!(out.contains("AllMinorsZero"));
}

#[test]
fn family_locus() {
    let (code, out, _) = zdci(&["family-sci", &problem("universal_family_rank_four.problem")]);
    assert_eq!(code, 0);
    assert!(out.contains("locus: 1 - c41*c42 != 0"));
}

#[test]
fn json_report_has_stable_header() {
    let file = problem("plane_curve_nine.problem");
    let (code, out, _) = zdci(&["hilbert", &file, "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    let digest = Sha256::digest(std::fs::read(&file).unwrap());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(v["input_digest"], format!("sha256:{hex}"));
    assert_eq!(v["hilbert"]["mu"], 9);
    assert!(out.find("\"schema\"").unwrap() < out.find("\"command\"").unwrap());
}

#[test]
fn parse_error_exits_two() {
    let dir = std::env::temp_dir().join(format!("zdci-parse-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.problem");
    std::fs::write(&f, "ring Q[x,y] degrevlex;\nideal I = x^2 +;\n").unwrap();
    let (code, _, err) = zdci(&["gb", f.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error at 2:"), "{err}");
}

#[test]
fn missing_file_exits_two() {
    let (code, _, _) = zdci(&["gb", "/nonexistent/none.problem"]);
    assert_eq!(code, 2);
}

#[test]
fn local_kahler_in_dividing_characteristic_is_unsupported() {
    let (code, _, err) = zdci(&["kahler", &problem("fifth_power_f5.problem"), "--local"]);
    assert_eq!(code, 3);
    assert!(!err.is_empty());
}

#[test]
fn kahler_without_verdict_exits_zero() {
    let (code, out, _) = zdci(&["kahler", &problem("fifth_power_f5.problem")]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: none"));
}
