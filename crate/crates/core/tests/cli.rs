use std::io::Cursor;
use std::process::Command;

use supercat::cli;

struct Run {
    code: u8,
    out: String,
    err: String,
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("supercat").chain(args.iter().copied());
    let code = cli::run(argv, &mut input, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, "")
}

#[test]
fn table_t_contains_six() {
    let r = run(&["table", "T", "3", "3"]);
    assert_eq!(r.code, 0);
    let rows: Vec<Vec<&str>> = r.out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[2][3], "6");
    assert!(r.err.contains("warning"));
}

#[test]
fn table_catalan_row() {
    let r = run(&["table", "C", "0", "5"]);
    assert_eq!((r.code, r.out.as_str()), (0, "1\t1\t2\t5\t14\t42\n"));
}

#[test]
fn table_origin_is_undefined_cell() {
    let r = run(&["table", "T", "0", "0"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "-\n");
    assert!(r.err.starts_with("warning:"), "{}", r.err);
}

#[test]
fn table_json_round_trips_byte_identical() {
    let r = run(&["--format", "json", "table", "S", "5", "40"]);
    assert_eq!(r.code, 0);
    let value: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap() + "\n", r.out);
    // large cells are strings, not truncated numbers
    assert!(value["rows"][5][40].is_string());
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "theorem1", "--max-sum", "12"][..],
        &["verify", "rubenstein", "--max", "50"],
        &["verify", "symmetry"],
        &["verify", "reversal", "--max-sum", "8"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 0, "{args:?}: {}{}", r.out, r.err);
        assert!(r.out.contains("PASS"), "{args:?}: {}", r.out);
    }
}

#[test]
fn verify_pair_map_reports_counts() {
    let r = run(&["--format", "json", "verify", "pair-map", "--max-n", "8"]);
    assert_eq!(r.code, 0, "{}", r.err);
    let report: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report["passed"], true);
    let tallies = report["tallies"].as_array().unwrap();
    for n in 1..=8u64 {
        let want = supercat::numbers::super_catalan(2, n).unwrap().to_string();
        assert!(
            tallies
                .iter()
                .any(|t| t["params"]["n"] == n && t["value"] == want.as_str()),
            "no tally {want} for n={n}: {tallies:?}"
        );
    }
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", r.out);
}

#[test]
fn verify_refuses_large_enumeration_without_force() {
    let r = run(&["verify", "theorem1", "--max-sum", "19"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("--force"), "{}", r.err);
}

#[test]
fn unknown_identity_is_usage_error() {
    let r = run(&["verify", "theorem99"]);
    assert_eq!(r.code, 2);
    assert!(!r.err.is_empty());
}

#[test]
fn map_examples() {
    assert_eq!(run(&["map", "f", "UUUDDDUD"]).out, "UUDDUD\n");
    assert_eq!(run(&["map", "m2d", "S"]).out, "UUDD\n");
    assert_eq!(run(&["map", "d2m", "UUDD"]).out, "S\n");
    assert_eq!(run(&["map", "f-inv", "UUDDUD"]).out, "UUUDDDUD\n");
    assert_eq!(run(&["map", "reverse", "UWSD"]).out, "USWD\n");
}

#[test]
fn map_precondition_failure_names_class() {
    let r = run(&["map", "f", "UDUDUD"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("not in N*"), "{}", r.err);
    assert!(r.out.is_empty());
}

#[test]
fn map_rejects_bad_alphabet() {
    let r = run(&["map", "f", "UUXD"]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("error"));
}

#[test]
fn pair_then_unpair_via_stdin() {
    let path = "UUDUUDDDUD";
    let split = run(&["map", "pair", path]);
    assert_eq!(split.code, 0, "{}", split.err);
    assert_eq!(split.out.lines().count(), 2);
    let joined = run_with_stdin(&["map", "unpair"], &split.out);
    assert_eq!(joined.code, 0, "{}", joined.err);
    assert_eq!(joined.out.trim(), path);
}

#[test]
fn pair_of_height_one_path_lists_both_images() {
    let r = run(&["map", "pair", "UDUDUD"]);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines, ["UDUDUD", "", "", "UDUDUD"]);
}

#[test]
fn enumerate_counts_and_lists() {
    assert_eq!(run(&["enumerate", "dyck", "5", "--count"]).out, "42\n");
    assert_eq!(run(&["enumerate", "motzkin", "1"]).out, "S\nW\n");
    assert_eq!(
        run(&["enumerate", "ballot", "3", "2", "--count"]).out,
        "4\n"
    );
    assert_eq!(
        run(&["--jobs", "2", "enumerate", "pairs", "3", "--count"]).out,
        "14\n"
    );
    let json = run(&["--format", "json", "enumerate", "dyck", "2"]).out;
    assert_eq!(json, "[\"UUDD\",\"UDUD\"]\n");
    assert_eq!(run(&["enumerate", "ballot", "3"]).code, 1);
}

#[test]
fn render_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("out.svg");
    let r = run(&["render", "UUDUDD", file.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    let svg = std::fs::read_to_string(&file).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert_eq!(svg.matches("class=\"step ").count(), 6);
}

#[test]
fn render_distinguishes_wavy() {
    let svg = run(&["render", "SUW"]).out;
    assert!(svg.contains("class=\"step wavy\""));
    assert!(svg.contains("class=\"step straight\""));
}

#[test]
fn render_markers_at_expected_points() {
    let svg = run(&["render", "UUDUDD", "--markers"]).out;
    assert!(svg.contains(r#"data-label="X" data-x="3""#), "{svg}");
    assert!(svg.contains(r#"data-label="R" data-x="4""#), "{svg}");
}

#[test]
fn render_unwritable_path_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("missing").join("out.svg");
    let r = run(&["render", "UD", file.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("cannot write"), "{}", r.err);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_supercat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["map", "m2d", "S"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "UUDD\n");
    assert_eq!(status(&["map", "g", "UDUDUD"]).status.code(), Some(1));
    assert_eq!(status(&["frobnicate"]).status.code(), Some(2));
    let jobs = Command::new(bin)
        .env("SUPERCAT_JOBS", "1")
        .args(["verify", "pairs", "--max-n", "5"])
        .output()
        .unwrap();
    assert_eq!(jobs.status.code(), Some(0));
}
