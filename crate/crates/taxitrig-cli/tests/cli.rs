//! End-to-end CLI contract tests: printed values, formats, exit codes, and
//! the mode environment variable.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_taxitrig"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn taxitrig")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_prints_exact_values_and_poles() {
    assert_eq!(stdout(&["eval", "sec", "1"]), "2\n");
    assert_eq!(stdout(&["eval", "tan", "2"]), "POLE\n");
    assert_eq!(stdout(&["eval", "cos", "9/2", "--exact"]), "-3/4\n");
    assert_eq!(stdout(&["eval", "cos", "3.5", "--exact"]), "-3/4\n");
    assert_eq!(stdout(&["eval", "sin", "-1"]), "-1/2\n");
}

#[test]
fn eval_float_mode_prints_seventeen_significant_digits() {
    assert_eq!(stdout(&["eval", "sec", "1", "--float"]), "2.0000000000000000\n");
    assert_eq!(stdout(&["eval", "sin", "1/2", "--float"]), "0.25000000000000000\n");
}

#[test]
fn eval_representation_flag_selects_the_strategy() {
    for repr in ["piecewise", "literal", "pseudo"] {
        assert_eq!(stdout(&["eval", "cos", "5", "--repr", repr]), "-1/2\n", "{repr}");
    }
    let out = run(&["eval", "cos", "5", "--repr", "spline"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deriv_prints_corners_and_poles() {
    assert_eq!(stdout(&["deriv", "tan", "1"]), "2\n");
    assert_eq!(stdout(&["deriv", "sin", "2"]), "CORNER 1/2 -1/2\n");
    assert_eq!(stdout(&["deriv", "sec", "5", "--form", "squared"]), "-2\n");
    assert_eq!(stdout(&["deriv", "sec", "0"]), "CORNER -1/2 1/2\n");
    assert_eq!(stdout(&["deriv", "cot", "0"]), "POLE\n");
    assert_eq!(stdout(&["deriv", "csc", "1", "--form", "quotient"]), "-2\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["eval", "sinh", "1"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "sin", "one"]).status.code(), Some(2));
    assert_eq!(run(&["deriv", "sin", "1", "--form", "chain"]).status.code(), Some(2));
    // the product form has no expression for tangent
    assert_eq!(run(&["deriv", "tan", "1", "--form", "product"]).status.code(), Some(2));
    // quotient rule does not apply to sine
    assert_eq!(run(&["deriv", "sin", "1", "--form", "quotient"]).status.code(), Some(2));
    // exact mode rejects scientific notation
    assert_eq!(run(&["eval", "sin", "1e-1", "--exact"]).status.code(), Some(2));
    assert_eq!(run(&["table", "sin", "4", "0", "1"]).status.code(), Some(2));
    assert_eq!(run(&["table", "sin", "0", "4", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "sin", "0", "4", "1", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn io_errors_exit_3() {
    let out = run(&["table", "sin", "0", "4", "1", "--out", "/nonexistent-dir/t.csv"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["plot", "sin", "--from", "0", "--to", "8", "--out", "/nonexistent-dir/p.svg"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn mode_env_variable_sets_the_default_backend() {
    let out = bin()
        .args(["eval", "sec", "1"])
        .env("TAXITRIG_MODE", "float")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2.0000000000000000\n");

    // explicit flag wins over the environment
    let out = bin()
        .args(["eval", "sec", "1", "--exact"])
        .env("TAXITRIG_MODE", "float")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2\n");

    let out = bin()
        .args(["eval", "sec", "1"])
        .env("TAXITRIG_MODE", "interval")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_matches_the_documented_grid() {
    assert_eq!(
        stdout(&["table", "sin", "0", "8", "2", "--format", "csv"]),
        "theta,value,flag\n0,0,ok\n2,1,corner-adjacent\n4,0,ok\n6,-1,corner-adjacent\n"
    );
    assert_eq!(
        stdout(&["table", "tan", "0", "4", "1"]),
        "theta,value,flag\n0,0,ok\n1,1,ok\n2,,pole\n3,-1,ok\n"
    );
    // cosine has a corner at 0, so the single row is flagged
    assert_eq!(
        stdout(&["table", "cos", "0", "0.5", "1"]),
        "theta,value,flag\n0,1,corner-adjacent\n"
    );
}

#[test]
fn table_json_mirrors_the_series() {
    let text = stdout(&["table", "tan", "0", "4", "1", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["function"], "tan");
    assert_eq!(doc["points"].as_array().unwrap().len(), 4);
    assert_eq!(doc["points"][0], serde_json::json!(["0", "0"]));
    assert_eq!(doc["points"][2][1], serde_json::Value::Null);
    assert_eq!(doc["asymptotes"], serde_json::json!(["2"]));

    // float mode carries JSON numbers instead of fraction strings
    let text = stdout(&["table", "tan", "0", "4", "1", "--format", "json", "--float"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["points"][1], serde_json::json!([1.0, 1.0]));
}

#[test]
fn table_output_is_byte_deterministic() {
    let a = stdout(&["table", "csc", "-4", "4", "1/3", "--format", "csv"]);
    let b = stdout(&["table", "csc", "-4", "4", "1/3", "--format", "csv"]);
    assert_eq!(a, b);
    let a = stdout(&["table", "sec", "0", "8", "0.25", "--format", "json", "--float"]);
    let b = stdout(&["table", "sec", "0", "8", "0.25", "--format", "json", "--float"]);
    assert_eq!(a, b);
}

#[test]
fn table_writes_to_a_file() {
    let path = std::env::temp_dir().join(format!("taxitrig-cli-{}-t.csv", std::process::id()));
    let out = run(&["table", "sin", "0", "4", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    assert_eq!(text, "theta,value,flag\n0,0,ok\n2,1,corner-adjacent\n");
}

#[test]
fn verify_respects_grid_overrides() {
    let out = run(&["verify", "--step", "1/16", "--range", "-8:8"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("equivalence: 256 points"));

    let out = run(&["verify", "--step", "0", "--range", "0:8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--range", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_fails_with_exit_1_below_discretization_noise() {
    let out = run(&["verify", "--step", "1/16", "--range", "-8:8", "--tol", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
}
