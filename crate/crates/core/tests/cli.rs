use std::process::Command;

fn mahler(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mahler")).args(args).env_remove("MAHLER_COEFF_DIR").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

#[test]
fn eval_prints_a_value() {
    let (code, out, _) = mahler(&["eval", "m2", "32", "--prec-digits", "20"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("m2(32) = 3.31732899676382"), "{out}");
    assert!(out.contains("route: series"));
}

#[test]
fn passing_identity_exits_zero() {
    let (code, out, _) = mahler(&["identity", "run", "eq1.2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
}

#[test]
fn failing_suite_exits_one() {
    let (code, out, _) = mahler(&["suite", "--id", "eq1.2", "--digits", "500"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn configuration_errors_exit_two() {
    assert_eq!(mahler(&["identity", "run", "nonexistent"]).0, 2);
    assert_eq!(mahler(&["eval", "m2", "32", "--prec-digits", "1"]).0, 2);
    assert_eq!(mahler(&["--coeff-dir", "/definitely/not/here", "fixtures"]).0, 2);
    assert_eq!(mahler(&["eval", "m2", "not a number"]).0, 2);
}

#[test]
fn gated_identity_skips_without_files() {
    let (code, out, _) = mahler(&["identity", "run", "tab1.k2_1"]);
    assert_eq!(code, 0);
    assert!(out.contains("SKIP"), "{out}");
}

#[test]
fn curves_then_gated_identity() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = mahler(&["curves", d, "--order", "3000"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
    let (code, out, _) = mahler(&["--coeff-dir", d, "identity", "run", "tab1.k2_1", "--prec-digits", "20"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"), "{out}");
}

#[test]
fn json_list_is_parseable() {
    let (code, out, _) = mahler(&["identity", "list", "--table", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 15);
}

#[test]
fn negative_parameters_are_values() {
    let (code, out, err) = mahler(&["eval", "m2", "-40", "--prec-digits", "15"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("m2(-40) = 3.7793314308889"), "{out}");
}
