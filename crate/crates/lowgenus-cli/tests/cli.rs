//! End-to-end tests driving the compiled binary.

use lowgenus_cli::output::OutputRecord;
use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lowgenus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn rational_scalar() {
    let out = run(&["rational", "--d", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "R_3 = 12\n");
}

#[test]
fn elliptic_conic_table_descends_in_a() {
    let out = run(&["elliptic", "--d", "2", "--char"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "E_2(6,0) = 0");
    assert_eq!(lines[4], "E_2(2,4) = 2");
    assert_eq!(lines[6], "E_2(0,6) = 45/2");
}

#[test]
fn node_families() {
    let out = run(&["node-point", "--d", "3"]);
    assert_eq!(stdout(&out), "NP_3 = 1\n");
    let out = run(&["node-line", "--d", "2", "--char"]);
    let text = stdout(&out);
    assert!(text.contains("NL_2(2,2) = 2"));
    assert!(text.contains("NL_2(0,4) = 3/2"));
}

#[test]
fn fixed_j_scaling_and_formal_flag() {
    let out = run(&["fixed-j", "--d", "2", "--char", "--j", "0"]);
    let text = stdout(&out);
    assert!(text.contains("J0_2(0,5) = 25 (formal)"));
    let out = run(&["fixed-j", "--d", "3"]);
    assert_eq!(stdout(&out), "J_3(8,0) = 12\n");
}

#[test]
fn hurwitz_conjectural_marker() {
    let out = run(&["hurwitz", "--genus", "2", "--d", "3"]);
    assert_eq!(stdout(&out), "M2_3 = 364 (conjectural)\n");
    let out = run(&["hurwitz", "--genus", "0", "--max-d", "4"]);
    let text = stdout(&out);
    assert!(text.contains("M0_2 = 1/2"));
    assert!(text.contains("M0_4 = 120"));
}

#[test]
fn codim1_report() {
    let out = run(&["codim1", "--genus", "0", "--d", "3"]);
    let text = stdout(&out);
    assert!(text.contains("genus 0, degree 3"));
    assert!(text.contains("|A| = 12"));
    assert!(text.contains("|CU| = 24"));
    assert!(text.contains("triple = 0"));
    assert!(text.contains("g-tilde = 3"));

    let out = run(&["codim1", "--genus", "3", "--d", "4"]);
    let text = stdout(&out);
    assert!(text.contains("|Delta| = 27 (reconstructed-formula)"));
}

#[test]
fn json_output_round_trips() {
    let out = run(&["elliptic", "--d", "2", "--char", "--format", "json"]);
    let records: Vec<OutputRecord> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 7);
    let last = records.last().unwrap();
    assert_eq!(last.a, Some(0));
    assert_eq!(last.b, Some(6));
    assert_eq!(last.value.to_string(), "45/2");
    assert_eq!(last.value.numer().to_string(), "45");
    assert_eq!(last.value.denom().to_string(), "2");
}

#[test]
fn csv_output_shape() {
    let out = run(&["hurwitz", "--genus", "2", "--d", "2", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("quantity,genus,d,a,b,num,den,flags"));
    assert_eq!(lines.next(), Some("M2,2,2,,,1,2,conjectural"));
}

#[test]
fn verify_passes() {
    let out = run(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS elliptic-characteristic-d5"));
    assert!(text.contains("16/16 tables verified"));

    let out = run(&["verify", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
}

#[test]
fn exit_codes() {
    // usage error: missing required flag
    let out = run(&["rational"]);
    assert_eq!(out.status.code(), Some(2));
    // usage error: unknown format
    let out = run(&["rational", "--d", "3", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
    // domain errors: degree out of range, missing inputs
    let out = run(&["rational", "--d", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["codim1", "--genus", "2", "--d", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("missing Severi input"));
    assert!(err.contains("degree 9"));
}

#[test]
fn severi_inputs_file_overrides_embedded() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"g":2,"d":4,"n":"28","tl":"145"}}"#).unwrap();
    let path = file.path().to_str().unwrap();

    let out = run(&[
        "codim1",
        "--genus",
        "2",
        "--d",
        "4",
        "--severi-inputs",
        path,
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("|A| = 28"));
    assert!(text.contains("|B| = 117"), "B = TL - A stays 117");

    // other degrees still come from the embedded table
    let out = run(&[
        "codim1",
        "--genus",
        "2",
        "--d",
        "5",
        "--severi-inputs",
        path,
    ]);
    assert!(stdout(&out).contains("|A| = 36855"));
}

#[test]
fn malformed_inputs_file_is_a_domain_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"g":2,"d":4,"n":"-5","tl":"1"}}"#).unwrap();
    let path = file.path().to_str().unwrap();
    let out = run(&[
        "codim1",
        "--genus",
        "2",
        "--d",
        "4",
        "--severi-inputs",
        path,
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 1"));
}

#[test]
fn genus_ranges_are_usage_errors() {
    let out = run(&["hurwitz", "--genus", "3", "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--genus"));
    let out = run(&["codim1", "--genus", "4", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
}
