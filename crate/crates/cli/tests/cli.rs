//! End-to-end tests of the binary: output bytes, format stability and the
//! exit-code contract (0 success, 1 disagreement, 2 usage/precondition).

use std::process::{Command, Output};

fn homcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homcount"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = homcount(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    homcount(args).status.code().unwrap()
}

#[test]
fn count_commands_print_expected_values() {
    assert_eq!(stdout_of(&["count", "surj-group", "12", "4"]), "2\n");
    assert_eq!(stdout_of(&["count", "surj-group", "8", "2"]), "1\n");
    assert_eq!(stdout_of(&["count", "surj-group", "12", "5"]), "0\n");
    assert_eq!(stdout_of(&["count", "surj-group", "12,6", "4,3"]), "4\n");
    assert_eq!(stdout_of(&["count", "ring", "8", "2"]), "2\n");
    assert_eq!(stdout_of(&["count", "ring", "12", "6"]), "4\n");
    assert_eq!(stdout_of(&["count", "idempotents", "6"]), "4\n");
    assert_eq!(stdout_of(&["count", "idempotents", "6,10"]), "16\n");
    assert_eq!(stdout_of(&["count", "order-d", "4,6", "12"]), "8\n");
    assert_eq!(stdout_of(&["count", "max-order", "2,3"]), "2\n");
    assert_eq!(stdout_of(&["count", "max-order", "2,5"]), "4\n");
}

#[test]
fn oracle_flag_reports_agreement() {
    assert_eq!(
        stdout_of(&["count", "surj-group", "12", "4", "--oracle"]),
        "2\noracle: agree\n"
    );
    assert_eq!(
        stdout_of(&["count", "ring", "12", "6", "--oracle"]),
        "4\noracle: agree\n"
    );
    assert_eq!(
        stdout_of(&["count", "idempotents", "6,10", "--oracle"]),
        "16\noracle: agree\n"
    );
    assert_eq!(
        stdout_of(&["count", "max-order", "2,3", "--oracle"]),
        "2\noracle: agree\n"
    );
}

#[test]
fn oracle_flag_marks_unverified_when_budget_is_too_small() {
    // 2^20: one prime divisor, so the closed form is 2, but the scan
    // would need a million work units
    let out = stdout_of(&[
        "count",
        "idempotents",
        "1048576",
        "--oracle",
        "--max-work",
        "1000",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("2"));
    let oracle_line = lines.next().unwrap();
    assert!(
        oracle_line.starts_with("oracle: unverified"),
        "got {oracle_line:?}"
    );
}

#[test]
fn enumerate_commands_list_witnesses_one_per_line() {
    assert_eq!(
        stdout_of(&["enumerate", "idempotents", "6"]),
        "0\n1\n3\n4\n"
    );
    assert_eq!(stdout_of(&["enumerate", "idempotents", "1"]), "0\n");
    assert_eq!(
        stdout_of(&["enumerate", "ring-homs", "12", "6"]),
        "0\n1\n3\n4\n"
    );
    assert_eq!(stdout_of(&["enumerate", "homs", "4", "2"]), "0\n1\n");
    assert_eq!(stdout_of(&["enumerate", "homs", "12", "4"]), "0\n1\n2\n3\n");
    assert_eq!(
        stdout_of(&["enumerate", "idempotents", "2,3"]),
        "0,0\n0,1\n1,0\n1,1\n"
    );
}

#[test]
fn classify_outputs_are_format_stable() {
    assert_eq!(
        stdout_of(&["classify", "6", "--format", "jsonl"]),
        "{\"n\":6,\"omega\":2,\"phi\":2,\"ring_homs\":4,\"surj_homs\":2,\
         \"divides\":false,\"exceptional\":true,\"agrees\":true}\n"
    );
    assert_eq!(
        stdout_of(&["classify", "6", "--format", "csv"]),
        "n,omega,phi,ring_homs,surj_homs,divides,exceptional,agrees\n\
         6,2,2,4,2,false,true,true\n"
    );
    let plain = stdout_of(&["classify", "45"]);
    assert!(plain.contains("exceptional: false"), "got {plain:?}");
    assert!(plain.contains("divides: true"), "got {plain:?}");
    let plain = stdout_of(&["classify", "2"]);
    assert!(plain.contains("exceptional: true"), "got {plain:?}");
}

#[test]
fn verify_cyclic_golden_outputs() {
    assert_eq!(
        stdout_of(&["verify", "cyclic", "--max", "5", "--format", "jsonl"]),
        "{\"n\":2,\"omega\":1,\"phi\":1,\"ring_homs\":2,\"surj_homs\":1,\"divides\":false,\"exceptional\":true,\"agrees\":true}\n\
         {\"n\":3,\"omega\":1,\"phi\":2,\"ring_homs\":2,\"surj_homs\":2,\"divides\":true,\"exceptional\":false,\"agrees\":true}\n\
         {\"n\":4,\"omega\":1,\"phi\":2,\"ring_homs\":2,\"surj_homs\":2,\"divides\":true,\"exceptional\":false,\"agrees\":true}\n\
         {\"n\":5,\"omega\":1,\"phi\":4,\"ring_homs\":2,\"surj_homs\":4,\"divides\":true,\"exceptional\":false,\"agrees\":true}\n"
    );
    assert_eq!(
        stdout_of(&["verify", "cyclic", "--max", "5", "--format", "csv"]),
        "n,omega,phi,ring_homs,surj_homs,divides,exceptional,agrees\n\
         2,1,1,2,1,false,true,true\n\
         3,1,2,2,2,true,false,true\n\
         4,1,2,2,2,true,false,true\n\
         5,1,4,2,4,true,false,true\n"
    );
}

#[test]
fn verify_products_reports_the_survey_findings() {
    let jsonl = stdout_of(&[
        "verify",
        "products",
        "--max-k",
        "2",
        "--max-mod",
        "6",
        "--format",
        "jsonl",
    ]);
    assert!(jsonl.contains(
        "{\"moduli\":[2,2],\"ring_homs\":4,\"max_order_count\":3,\"divides\":false,\
         \"flagged\":false,\"class\":\"unflagged_and_failed\",\"verified\":true}"
    ));
    assert!(jsonl.contains(
        "{\"moduli\":[2,3],\"ring_homs\":4,\"max_order_count\":2,\"divides\":false,\
         \"flagged\":true,\"class\":\"flagged_and_failed\",\"verified\":true}"
    ));

    let csv = stdout_of(&[
        "verify",
        "products",
        "--max-k",
        "2",
        "--max-mod",
        "6",
        "--format",
        "csv",
    ]);
    assert!(csv.starts_with("moduli,ring_homs,max_order_count,divides,flagged,class,verified\n"));
    assert!(csv.contains("2x2,4,3,false,false,unflagged_and_failed,true\n"));
}

#[test]
fn verify_writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let out = homcount(&[
        "verify",
        "cyclic",
        "--max",
        "50",
        "--format",
        "jsonl",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "records go to the file, not stdout");
    let contents = std::fs::read_to_string(&path).unwrap();
    assert_eq!(contents.lines().count(), 49);
}

#[test]
fn usage_and_precondition_errors_exit_2() {
    assert_eq!(exit_code(&["verify", "cyclic", "--max", "1"]), 2);
    assert_eq!(exit_code(&["classify", "0"]), 2);
    assert_eq!(exit_code(&["count", "surj-group", "12", "x"]), 2);
    assert_eq!(exit_code(&["count", "surj-group", "12,6", "4"]), 2);
    assert_eq!(exit_code(&["count", "ring", "0", "2"]), 2);
    assert_eq!(exit_code(&["nonsense"]), 2);
    assert_eq!(exit_code(&["verify", "products", "--max-k", "9"]), 2);
    assert_eq!(
        exit_code(&[
            "verify",
            "cyclic",
            "--max",
            "100",
            "--output",
            "/nonexistent/dir/x"
        ]),
        2
    );
    // enumeration budget exceeded is a hard refusal
    assert_eq!(
        exit_code(&["enumerate", "idempotents", "999999", "--max-work", "1000"]),
        2
    );
    assert_eq!(
        exit_code(&["enumerate", "homs", "6", "999999", "--max-work", "1000"]),
        2
    );
}

#[test]
fn verify_cyclic_succeeds_with_exit_0() {
    let out = homcount(&["verify", "cyclic", "--max", "1000", "--format", "jsonl"]);
    assert_eq!(out.status.code(), Some(0));
    let summary = String::from_utf8_lossy(&out.stderr);
    assert!(summary.contains("0 disagreements"), "got {summary:?}");
}

#[test]
fn componentwise_obstruction_prints_zero_with_note() {
    let out = homcount(&["count", "surj-group", "12,10", "4,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "0\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("index 1"));
}

#[test]
fn ring_count_outside_closed_form_domain_uses_enumeration() {
    // 4 does not divide 10; idempotents of Z_4 are {0,1} but 10*1 = 2 mod 4,
    // so only the zero map survives
    assert_eq!(stdout_of(&["count", "ring", "10", "4"]), "1\n");
}
