//! End-to-end tests of the CLI contract: outputs, streams, exit codes.

use std::process::{Command, Output};

fn doomsday(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doomsday"))
        .args(args)
        .env_remove("DOOMSDAY_VERIFY_CORRUPT")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn dow_prints_the_weekday_name() {
    let out = doomsday(&["dow", "2010-04-04"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Sunday\n");
    assert_eq!(stderr(&out), "");
}

#[test]
fn dow_accepts_the_slash_form() {
    let out = doomsday(&["dow", "04/04/1974"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Thursday\n");
}

#[test]
fn dow_numeric_prints_the_residue() {
    let out = doomsday(&["dow", "--numeric", "2010-04-04"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn dow_is_method_independent() {
    let methods = [
        "true",
        "carrollian",
        "decade-anchor",
        "decade-anchor-lookup",
        "conway-zero-anchor",
    ];
    for date in ["1999-02-14", "2400-02-29", "07/04/1776"] {
        let mut answers = Vec::new();
        for method in methods {
            let out = doomsday(&["dow", date, "--method", method]);
            assert_eq!(out.status.code(), Some(0), "{method} failed on {date}");
            answers.push(stdout(&out));
        }
        answers.dedup();
        assert_eq!(answers.len(), 1, "methods disagree on {date}");
    }
}

#[test]
fn explain_lists_steps_and_result() {
    let out = doomsday(&["explain", "1974-04-04"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"doomscentury: 3"));
    assert!(lines.contains(&"doomsyear.sum: 29"));
    assert!(lines.contains(&"doomsyear: 1"));
    assert!(lines.contains(&"doomsmonth: 0"));
    assert_eq!(lines.last(), Some(&"result: Thursday (4)"));
}

#[test]
fn explain_shows_half_anchors_with_suffix() {
    let out = doomsday(&["explain", "1998-12-25", "--method", "conway-zero-anchor"]);
    let text = stdout(&out);
    assert!(text.contains("doomsyear.anchor: 95.5"));
    assert!(text.contains("doomsyear.adj: -1"));
}

#[test]
fn tables_3_tsv_contract() {
    let out = doomsday(&["tables", "3", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 101);
    assert!(text.lines().any(|line| line == "74\t1\t1"));
}

#[test]
fn tables_default_format_is_tsv() {
    assert_eq!(
        stdout(&doomsday(&["tables", "1"])),
        stdout(&doomsday(&["tables", "1", "--format", "tsv"]))
    );
}

#[test]
fn tables_render_markdown() {
    let out = doomsday(&["tables", "2", "--format", "markdown"]);
    let text = stdout(&out);
    assert!(text.starts_with("| z | leaps | even | odd |\n| --- | --- | --- | --- |\n"));
    assert!(text.contains("| 6 | 1 or 2 | 1 | 2 |"));
}

#[test]
fn tables_anchors_is_a_table() {
    let out = doomsday(&["tables", "anchors"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 19);
    assert!(text.contains("11.5"));
}

#[test]
fn anchors_is_one_space_separated_line() {
    let out = doomsday(&["anchors"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "0 6 11.5 17 23 28 34 39.5 45 51 56 62 67.5 73 79 84 90 95.5\n"
    );
}

#[test]
fn verify_a_decade() {
    let out = doomsday(&["verify", "--from", "1990", "--to", "1999"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "OK 3652 dates checked\n");
}

#[test]
fn verify_reports_the_earliest_corrupted_date() {
    let out = Command::new(env!("CARGO_BIN_EXE_doomsday"))
        .args(["verify", "--from", "1990", "--to", "1999"])
        .env("DOOMSDAY_VERIFY_CORRUPT", "carrollian@1995-06-17")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(
        text.starts_with("MISMATCH 1995-06-17 carrollian "),
        "unexpected report: {text}"
    );
    assert!(text.contains("got="));
    assert!(text.contains("expected="));
}

#[test]
fn malformed_dates_are_usage_errors() {
    for arg in ["02/29/1900", "2001-02-30", "soon", "1999-1"] {
        let out = doomsday(&["dow", arg]);
        assert_eq!(out.status.code(), Some(2), "`{arg}` should be a usage error");
        assert_eq!(stdout(&out), "");
        assert!(stderr(&out).starts_with("error:"));
    }
}

#[test]
fn unknown_method_is_a_usage_error() {
    let out = doomsday(&["dow", "2010-04-04", "--method", "zeller"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown method"));
}

#[test]
fn unknown_command_and_flag_are_usage_errors() {
    let out = doomsday(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());

    let out = doomsday(&["dow", "2010-04-04", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Usage") || stderr(&out).contains("usage"));
}

#[test]
fn inverted_verify_range_is_a_usage_error() {
    let out = doomsday(&["verify", "--from", "1999", "--to", "1990"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid year range"));
}

#[test]
fn early_dates_warn_but_still_compute() {
    let out = doomsday(&["dow", "1500-01-01"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Monday\n");
    assert!(stderr(&out).contains("proleptic"));

    // On and after civil adoption there is no warning.
    let out = doomsday(&["dow", "1583-10-15"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stderr(&out), "");
}
