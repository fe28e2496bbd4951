//! End-to-end golden-file checks: run the installed binary and compare the
//! bytes on stdout against checked-in snapshots. Any formatting change must
//! be deliberate and show up in the diff of these files.

use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_curvestab"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn assert_golden(args: &[&str], golden: &str) {
    let out = run(args);
    let want_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(golden);
    let want = std::fs::read_to_string(&want_path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", want_path.display()));
    let got = String::from_utf8(out.stdout).expect("stdout should be utf-8");
    assert_eq!(
        got, want,
        "stdout for `curvestab {}` drifted from {golden}",
        args.join(" ")
    );
    assert!(out.stderr.is_empty(), "stderr should be empty, got: {:?}", out.stderr);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn walls_node_markdown() {
    assert_golden(&["walls", "--preset", "node", "--class", "6,1,6"], "walls_node_6_1_6.md");
}

#[test]
fn walls_node_csv() {
    assert_golden(
        &["walls", "--preset", "node", "--class", "6,1,6", "--format", "csv"],
        "walls_node_6_1_6.csv",
    );
}

#[test]
fn walls_tacnode_markdown() {
    assert_golden(
        &["walls", "--preset", "tacnode", "--class", "2,1,2,4"],
        "walls_tacnode_2_1_2_4.md",
    );
}

#[test]
fn chambers_tacnode_with_diagram() {
    assert_golden(
        &["chambers", "--preset", "tacnode", "--class", "2,1,2,4"],
        "chambers_tacnode_2_1_2_4.md",
    );
}

#[test]
fn report_node_rank_two() {
    assert_golden(&["report", "--preset", "node", "--class", "2,1,2"], "report_node_2_1_2.md");
}

#[test]
fn flip_node_markdown() {
    assert_golden(
        &["flip", "--preset", "node", "--class", "3,0,1", "--class", "3,1,5"],
        "flip_node_3_0_1__3_1_5.md",
    );
}

#[test]
fn submodules_default_rank() {
    assert_golden(&["auslander", "submodules"], "submodules_rank1.md");
}

#[test]
fn conductor_full_table() {
    assert_golden(&["conductor"], "conductor_table.md");
}

#[test]
fn conductor_single_row_is_bare_ideal() {
    let out = run(&["conductor", "A", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "(x^2, y)\n");
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("walls"));
}

#[test]
fn bad_flag_exits_one() {
    let out = run(&["walls", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_class_shape_exits_one() {
    // the node preset wants three coordinates
    let out = run(&["walls", "--preset", "node", "--class", "6,1,6,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn non_admissible_class_exits_one() {
    // ell = 13 exceeds 2 * rank on the node
    let out = run(&["walls", "--preset", "node", "--class", "6,1,13"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_output_across_runs() {
    let args = ["report", "--preset", "tacnode", "--class", "2,1,2,4", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "output must be byte-identical run to run");
    assert_eq!(first.status.code(), Some(0));
}
