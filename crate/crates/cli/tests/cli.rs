use std::process::{Command, Output};

use serde_json::Value;

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = hecke(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn semisimple_weight_has_empty_core() {
    assert_eq!(json(&["core", "--lambda", "3,1", "--l", "2"]), serde_json::json!([]));
}

#[test]
fn decomposition_matrix_for_three_boxes() {
    let v = json(&["decomp", "--n", "3", "--l", "2"]);
    assert_eq!(v["entries"], serde_json::json!([[1, 0], [0, 1], [1, 0]]));
    assert_eq!(v["cols"], serde_json::json!([[3], [2, 1]]));
}

#[test]
fn decomposition_csv_quotes_labels() {
    let out = hecke(&["--format", "csv", "decomp", "--n", "3", "--l", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"(2,1)\""), "{text}");
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn bound_reports_critical_point_and_bounds() {
    let v = json(&["bound", "--mu", "2,1", "--l", "2", "--k", "3"]);
    assert_eq!(v["c"], serde_json::json!([4, 2, 0]));
    assert_eq!(v["bounds"]["2,1"], serde_json::json!(1));
}

#[test]
fn embedding_case_holds() {
    let v = json(&["embed", "--m", "2", "--k", "2", "--l", "2"]);
    assert_eq!(v["identity_ok"], Value::Bool(true));
    assert_eq!(v["dim_generic"], v["dim_expected"]);
    assert_eq!(v["dim_at_root"], v["dim_expected"]);
}

#[test]
fn verify_single_suite_passes() {
    let v = json(&["verify", "--suite", "block"]);
    assert_eq!(v[0]["passed"], Value::Bool(true));
}

#[test]
fn domain_and_usage_errors_exit_one() {
    for args in [
        &["core", "--lambda", "1,3", "--l", "2"][..],
        &["core", "--lambda", "x", "--l", "2"],
        &["verify", "--suite", "nonexistent"],
        &["embed", "--m", "3", "--k", "2", "--l", "3"],
        &["frobnicate"],
    ] {
        let out = hecke(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn failing_invariant_suite_exits_two() {
    let out = hecke(&["verify", "--suite", "simplicity"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["passed"], Value::Bool(false));
}

#[test]
fn plots_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let render = |name: &str, extra: &[&str]| {
        let path = dir.path().join(name);
        let p = path.to_str().unwrap();
        let mut args = vec!["plot", "--l", "2", "--out", p];
        args.extend_from_slice(extra);
        assert!(hecke(&args).status.success());
        std::fs::read(&path).unwrap()
    };
    let a = render("a.svg", &["--mu", "4,2"]);
    let b = render("b.svg", &["--mu", "4,2"]);
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("class=\"reference\""));
    assert!(text.contains("class=\"critical\""));
    assert!(text.contains("data-count"));
}

#[test]
fn plot_without_weight_draws_only_the_chamber() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.svg");
    assert!(hecke(&["plot", "--l", "3", "--out", path.to_str().unwrap()]).status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("class=\"chamber\""));
    assert!(!text.contains("polyline"));
}
