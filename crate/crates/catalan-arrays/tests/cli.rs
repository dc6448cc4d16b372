//! End-to-end tests of the binary: formats, exit codes, and the JSON
//! round trip.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_catalan-arrays"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn json_table_reingested_as_apply_file_matches_inline_apply() {
    let table = stdout_ok(&["table", "catalan", "--depth", "6", "--format", "json"]);
    let dir = std::env::temp_dir().join("catalan-arrays-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalan.json");
    std::fs::write(&path, &table).unwrap();

    let via_file = stdout_ok(&[
        "sequence",
        "shapiro",
        "--apply-file",
        path.to_str().unwrap(),
        "--depth",
        "6",
    ]);
    // column 0 of the exported table is the Catalan sequence
    let via_inline = stdout_ok(&[
        "sequence",
        "shapiro",
        "--apply",
        "1,1,2,5,14,42,132",
        "--depth",
        "6",
    ]);
    assert_eq!(via_file, via_inline);

    let values = stdout_ok(&[
        "sequence", "catalan", "--column", "0", "--depth", "6", "--format", "json",
    ]);
    let path2 = dir.join("values.json");
    std::fs::write(&path2, &values).unwrap();
    let via_values = stdout_ok(&[
        "sequence",
        "shapiro",
        "--apply-file",
        path2.to_str().unwrap(),
        "--depth",
        "6",
    ]);
    assert_eq!(via_values, via_inline);
}

#[test]
fn bfile_output_is_byte_stable() {
    let args = ["sequence", "shapiro", "--column", "0", "--depth", "12", "--format", "bfile", "--offset", "1"];
    let first = stdout_ok(&args);
    let second = stdout_ok(&args);
    assert_eq!(first, second);
    assert!(first.starts_with("1 1\n2 2\n3 5\n"), "{first}");
    assert_eq!(first.lines().count(), 13);
}

#[test]
fn bfile_flattens_triangles_row_major() {
    let flat = stdout_ok(&["table", "catalan", "--depth", "2", "--format", "bfile"]);
    assert_eq!(flat, "0 1\n1 1\n2 1\n3 2\n4 2\n5 1\n");
}

#[test]
fn csv_has_headers() {
    let table = stdout_ok(&["table", "catalan", "--depth", "2", "--format", "csv"]);
    assert_eq!(table, "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,2\n2,1,2\n2,2,1\n");
    let seq = stdout_ok(&["sequence", "catalan", "--row-sums", "--depth", "2", "--format", "csv"]);
    assert_eq!(seq, "n,value\n0,1\n1,2\n2,5\n");
}

#[test]
fn verify_json_reports_are_machine_readable() {
    let text = stdout_ok(&["verify", "row-sums", "--depth", "8", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reports = parsed.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    for report in reports {
        assert_eq!(report["status"], "pass");
        assert_eq!(report["first_failure"], serde_json::Value::Null);
        assert_eq!(report["name"], "row-sums");
        assert_eq!(report["depth"], 8);
    }
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["table", "catalang"][..],
        &["table", "catalan[1/0]"],
        &["table", "mul(catalan"],
        &["sequence", "catalan"],
        &["sequence", "catalan", "--column", "0", "--row-sums"],
        &["sequence", "catalan", "--column", "99", "--depth", "5"],
        &["sequence", "catalan", "--apply", "1,two,3"],
        &["sheffer", "catalan[r]", "--x", "2"],
        &["sheffer", "catalan", "--x", "1/0"],
        &["verify", "unknown-check"],
        &["verify", "chebyshev", "--r", "3"],
        &["table", "catalan", "--depth", "4", "--format", "yaml"],
        &["table", "catalan", "--depth", "9999"],
        &["nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn depth_cap_can_be_raised() {
    let out = run(&["sequence", "catalan", "--column", "0", "--depth", "520", "--max-depth", "520"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn rational_parameters_render_exactly() {
    let table = stdout_ok(&["table", "catalan[1/2]", "--depth", "2"]);
    assert_eq!(table, "   1\n 3/2  1\n13/4  3  1\n");
    let json = stdout_ok(&["table", "catalan[1/2]", "--depth", "2", "--format", "json"]);
    assert!(json.contains("\"entry\":\"rational\""), "{json}");
    assert!(json.contains("\"3/2\""), "{json}");
    let bfile = run(&["table", "catalan[1/2]", "--depth", "2", "--format", "bfile"]);
    assert_eq!(bfile.status.code(), Some(2));
}

#[test]
fn apply_works_in_every_domain() {
    let symbolic = stdout_ok(&["sequence", "catalan[r]", "--apply", "1,0,1", "--depth", "2"]);
    assert_eq!(symbolic, "1 1 + r 3 + 2r + r^2\n");
    let rational = stdout_ok(&["sequence", "pascal[1/2]", "--apply", "0,2,4", "--depth", "2"]);
    assert_eq!(rational, "0 2 6\n");
}

#[test]
fn sheffer_bfile_and_json() {
    let bfile = stdout_ok(&["sheffer", "inv(shapiro)", "--x", "4", "--depth", "5", "--format", "bfile", "--offset", "1"]);
    assert_eq!(bfile, "1 1\n2 2\n3 3\n4 4\n5 5\n6 6\n");
    let json = stdout_ok(&["sheffer", "inv(shapiro)", "--x", "5", "--depth", "5", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["transform"], "sheffer x=5");
    assert_eq!(parsed["values"][5], 144);
}

#[test]
fn sheffer_rational_point_keeps_exact_fractions() {
    let out = stdout_ok(&["sheffer", "catalan", "--x", "1/2", "--depth", "3"]);
    assert_eq!(out, "1 3/2 13/4 67/8\n");
}

#[test]
fn verify_all_reports_every_check_once() {
    let text = stdout_ok(&["verify", "all", "--depth", "6"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(*lines.last().unwrap(), "30/30 checks passed");
    assert_eq!(lines.len(), 31);
    assert!(lines.iter().take(30).all(|l| l.starts_with("pass ")));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    for sub in ["table", "sequence", "sheffer", "verify"] {
        let out = run(&[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{sub} --help");
    }
}
