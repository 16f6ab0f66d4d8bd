//! End-to-end checks of the `symideal` binary: file parsing, verb output,
//! and exit codes. Only the cheap in-memory paths run here; the expensive
//! basis computations are exercised by the core crate's own test targets.

use std::path::Path;
use std::process::{Command, Output};

fn symideal(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symideal"))
        .args(args)
        .current_dir(dir)
        .env_remove("SYMIDEAL_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn gb_eliminate_and_reduce_share_the_file_format() {
    let dir = tempfile::tempdir().unwrap();
    let system = dir.path().join("circle.sys");
    std::fs::write(
        &system,
        "#vars: x, y, z\n# a circle meeting a plane\nx^2 + y^2 - 1\nx - z\n",
    )
    .unwrap();
    let path = system.to_str().unwrap();

    let gb = symideal(&["gb", path], dir.path());
    assert!(gb.status.success());
    assert_eq!(stdout(&gb), "x - z\ny^2 + z^2 - 1\n");

    let elim = symideal(&["eliminate", path, "-k", "1"], dir.path());
    assert!(elim.status.success());
    assert_eq!(stdout(&elim), "y^2 + z^2 - 1\n");

    let division = dir.path().join("division.sys");
    std::fs::write(&division, "#vars: x, y\nx^2*y + x*y^2\nx*y - 1\nx + y\n").unwrap();
    let red = symideal(&["reduce", division.to_str().unwrap()], dir.path());
    assert!(red.status.success());
    let text = stdout(&red);
    assert!(text.starts_with("remainder: 0\n"), "unexpected: {text}");
    assert!(text.contains("cofactor of x*y - 1: x + y"));
}

#[test]
fn a_file_without_a_header_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let system = dir.path().join("headless.sys");
    std::fs::write(&system, "x^2 + y^2 - 1\n").unwrap();
    let out = symideal(&["gb", system.to_str().unwrap()], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("#vars:"), "unexpected stderr: {err}");
}

#[test]
fn phi_expands_the_elementary_values() {
    let dir = tempfile::tempdir().unwrap();
    let out = symideal(&["phi", "E10^2 - 2*E20 - L^2"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x1^2 + x2^2 + x3^2 - L^2\n");

    let bad = symideal(&["phi", "E99 + 1"], dir.path());
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_phi_reports_every_claim_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = symideal(&["--no-cache", "verify", "phi"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("== phi-kernel [pass]"));
    for k in 1..=7 {
        assert!(text.contains(&format!("thm2.2/phi/q{k}")), "missing q{k}");
    }
}

#[test]
fn records_format_emits_one_tab_separated_line_per_claim() {
    let dir = tempfile::tempdir().unwrap();
    let out = symideal(
        &["--no-cache", "--format", "records", "verify", "relations"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.is_empty());
    for line in text.lines() {
        assert_eq!(line.split('\t').count(), 3, "malformed record: {line}");
    }
    assert!(text.contains("sec5/eq5.7/f01\tpass-with-corrections\t"));
}

#[test]
fn out_flag_redirects_the_report_into_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.txt");
    let out = symideal(
        &["--no-cache", "--out", target.to_str().unwrap(), "verify", "phi"],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.contains("== phi-kernel [pass]"));
}

#[test]
fn catalog_lists_the_named_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let out = symideal(&["catalog"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["p0 = ", "c1 = ", "q7 = ", "ptilde8 = ", "prev8 = "] {
        assert!(text.contains(name), "missing entry {name}");
    }
}
