//! End-to-end tests of the `ybx` binary: output formats, exit codes, and
//! byte stability of the JSON mode.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ybx"))
}

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ybx");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("ybx runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn validate_reports_solution() {
    let out = bin()
        .args(["validate", "--input", &data("squarefree3.json")])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("is solution:   true"));
    assert!(text.contains("square-free:   true"));
}

#[test]
fn validate_json_has_schema_and_flags() {
    let out = bin()
        .args([
            "validate",
            "--input",
            &data("transposition2.json"),
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["schema"], "ybx-validate-v1");
    assert_eq!(value["is_solution"], true);
    assert_eq!(value["square_free"], false);
    assert_eq!(value["permutation"], serde_json::json!([2, 1]));
}

#[test]
fn corrupted_table_is_a_usage_error() {
    let corrupt = r#"{"format":"ybx-solution-v1","n":2,"r":[[[1,1],[1,1]],[[1,2],[2,2]]]}"#;
    let out = run_with_stdin(&["validate", "--input", "-"], corrupt);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("non-bijective"), "stderr was: {err}");
}

#[test]
fn present_lists_relations() {
    let out = bin()
        .args(["present", "--input", &data("squarefree3.json")])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.trim().lines().map(str::trim).collect();
    assert_eq!(
        lines,
        vec!["x2*x1 - x1*x2", "x3*x1 - x2*x3", "x3*x2 - x1*x3"]
    );
}

#[test]
fn groebner_completes_transposition2() {
    let out = bin()
        .args([
            "groebner",
            "--input",
            &data("transposition2.json"),
            "--max-degree",
            "4",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["complete_up_to"], 4);
    assert_eq!(value["confluent"], true);
    assert_eq!(
        value["rules"],
        serde_json::json!([
            {"lhs": [2, 2], "rhs": [1, 1]},
            {"lhs": [2, 1, 1], "rhs": [1, 1, 2]}
        ])
    );
}

#[test]
fn kernel_text_golden() {
    let out = bin()
        .args(["kernel", "--input", &data("transposition2.json"), "--d", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "y2*y3 - y1*y1\n");
}

#[test]
fn veronese_json_counts() {
    let out = bin()
        .args([
            "veronese",
            "--input",
            &data("squarefree3.json"),
            "--d",
            "2",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["N"], 6);
    assert_eq!(value["R_a"].as_array().unwrap().len(), 15);
    assert_eq!(value["R_b"].as_array().unwrap().len(), 6);
    assert_eq!(value["R_1a"].as_array().unwrap().len(), 15);
    assert_eq!(value["kernel"].as_array().unwrap().len(), 6);
    assert_eq!(value["cardinalities"]["pass"], true);
}

#[test]
fn veronese_json_is_byte_stable() {
    let run = || {
        let out = bin()
            .args([
                "veronese",
                "--input",
                &data("squarefree3.json"),
                "--d",
                "2",
                "--format",
                "json",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn check_passes_on_sample_solutions() {
    for file in ["trivial3.json", "squarefree3.json", "transposition2.json"] {
        let out = bin()
            .args(["check", "--input", &data(file), "--d", "2"])
            .output()
            .unwrap();
        assert!(out.status.success(), "check failed on {file}");
        assert!(stdout_of(&out).contains("overall: ok"));
    }
}

#[test]
fn check_passes_over_the_whole_catalog() {
    for n in 1..=3 {
        let listing = bin()
            .args(["enumerate", "--n", &n.to_string(), "--format", "json"])
            .output()
            .unwrap();
        assert!(listing.status.success());
        let value: serde_json::Value = serde_json::from_str(&stdout_of(&listing)).unwrap();
        for solution in value["solutions"].as_array().unwrap() {
            for d in ["2", "3"] {
                let out = run_with_stdin(
                    &["check", "--input", "-", "--d", d],
                    &solution.to_string(),
                );
                assert!(
                    out.status.success(),
                    "check --d {d} failed on {solution}: {}",
                    String::from_utf8_lossy(&out.stderr)
                );
            }
        }
    }
}

#[test]
fn check_json_shape() {
    let out = bin()
        .args([
            "check",
            "--input",
            &data("transposition2.json"),
            "--d",
            "2",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["veronese_map"]["kernel_size"], 1);
    assert_eq!(value["permutation_veronese"]["status"], "checked");
    assert_eq!(value["permutation_veronese"]["rho_trivial"], true);
}

#[test]
fn orbits_lists_normal_monomials() {
    let out = bin()
        .args([
            "orbits",
            "--input",
            &data("transposition2.json"),
            "--length",
            "2",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["orbit_count"], 3);
    assert_eq!(
        value["normal_monomials"],
        serde_json::json!([[1, 1], [1, 2], [2, 1]])
    );
}

#[test]
fn pbw_search_reports_no_enumeration() {
    let out = bin()
        .args([
            "pbw",
            "--input",
            &data("transposition2.json"),
            "--search",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["is_pbw"], false);
    assert_eq!(value["search"]["searched"], true);
    assert_eq!(value["search"]["enumeration"], serde_json::Value::Null);
}

#[test]
fn enumerate_counts() {
    let out = bin()
        .args(["enumerate", "--n", "2", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["count"], 2);
    assert_eq!(value["solutions"][0]["format"], "ybx-solution-v1");
}

#[test]
fn guard_limit_gives_exit_3() {
    let out = bin()
        .args([
            "orbits",
            "--input",
            &data("squarefree3.json"),
            "--length",
            "6",
        ])
        .env("YBX_GUARD_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn degree_below_two_is_a_usage_error() {
    let out = bin()
        .args(["veronese", "--input", &data("trivial3.json"), "--d", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = bin()
        .args(["validate", "--input", "/nonexistent/path.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_solution_input_is_falsified_for_veronese() {
    // the identity map is involutive and bijective but degenerate
    let identity = r#"{"format":"ybx-solution-v1","n":2,"r":[[[1,1],[1,2]],[[2,1],[2,2]]]}"#;
    let out = run_with_stdin(&["veronese", "--input", "-", "--d", "2"], identity);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not a solution"), "stderr was: {err}");
}
