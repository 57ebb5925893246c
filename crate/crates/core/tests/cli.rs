use std::fs;
use std::path::Path;
use std::process::Command;

use czs_core::circuit::parse_circuit;
use czs_core::cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_VERIFY};
use czs_core::sim::equivalent;

const EXAMPLE: &str = "qubits 3\nswap 1 2\ncz 0 1\ncz 0 2\nswap 1 2\ncz 0 1\ncz 1 2\nswap 0 1\n";

fn czs(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("czs").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn optimize_outputs_a_verified_equivalent_circuit() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.txt", EXAMPLE);
    for extra in [&["--topology", "complete"][..], &["--topology", "line", "--budget", "500"], &["--exact"]] {
        let mut args = vec!["optimize", input.as_str()];
        args.extend_from_slice(extra);
        let (code, out, err) = czs(&args);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        assert!(out.lines().last().unwrap().starts_with("# verified"), "{out}");
        let result = parse_circuit(&out).unwrap();
        assert!(result.len() <= 3);
        assert!(equivalent(&parse_circuit(EXAMPLE).unwrap(), &result).unwrap());
    }
}

#[test]
fn optimized_output_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "in.txt", EXAMPLE);
    let (_, out, _) = czs(&["optimize", &input, "--topology", "line"]);
    let output = write(dir.path(), "out.txt", &out);
    let (code, out, _) = czs(&["verify", &input, &output]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "equivalent\n"));
}

#[test]
fn verify_reports_inequivalent_circuits() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "qubits 2\ncz 0 1\n");
    let b = write(dir.path(), "b.txt", "qubits 2\nswap 0 1\n");
    let (code, out, err) = czs(&["verify", &a, &b]);
    assert_eq!(code, EXIT_VERIFY);
    assert_eq!(out, "not equivalent\n");
    assert!(err.contains("verification failed"));
}

#[test]
fn domain_errors_exit_with_one() {
    let (code, _, err) = czs(&["optimize", "/definitely/missing.txt"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("missing.txt"));
    assert_eq!(czs(&["classify", "--qubits", "6"]).0, EXIT_DOMAIN);
    assert_eq!(czs(&["classify", "--qubits", "4", "--pairs", "0x"]).0, EXIT_DOMAIN);
    assert_eq!(czs(&["classify", "--qubits", "5", "--symbolic"]).0, EXIT_DOMAIN);
    assert_eq!(czs(&["frobnicate"]).0, EXIT_DOMAIN);
    assert_eq!(czs(&["--help"]).0, EXIT_OK);
}

#[test]
fn classify_four_qubits_reports_case_four() {
    let (code, out, _) = czs(&["classify", "--qubits", "4", "--pairs", "01,23", "--params", "random", "--seed", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("case 4 (two disjoint edges)"), "{out}");
    assert!(out.contains("a triple root"));
    assert!(out.contains("matches expectation  yes"));
    // Same seed, same bytes.
    assert_eq!(czs(&["classify", "--qubits", "4", "--pairs", "01,23", "--seed", "7"]).1, out);
}

#[test]
fn classify_reads_a_parameter_file() {
    let dir = tempfile::tempdir().unwrap();
    let params = write(dir.path(), "p.txt", "# a b per qubit\n1 2\n1/2 3,1\n-1 1\n");
    let (code, out, err) = czs(&["classify", "--qubits", "3", "--pairs", "01,12", "--params", &params]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("class          GHZ"), "{out}");
    let short = write(dir.path(), "short.txt", "1 2\n");
    assert_eq!(czs(&["classify", "--qubits", "3", "--params", &short]).0, EXIT_DOMAIN);
}

#[test]
fn classify_symbolic_four_qubits() {
    let (code, out, _) = czs(&["classify", "--qubits", "4", "--pairs", "01,02,03", "--symbolic"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("L·M·N identically"));
    assert_eq!(out.matches("two distinct double roots").count(), 3, "{out}");
}

#[test]
fn classify_five_qubits_reports_the_class() {
    let (code, out, _) = czs(&["classify", "--qubits", "5", "--pairs", "01", "--seed", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("solution source"), "{out}");
    let (code, out, _) = czs(&["classify", "--qubits", "5", "--pairs", "01,12,23,34,04"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("undecided"), "{out}");
}

#[test]
fn enumerate_and_ghz() {
    let (code, out, _) = czs(&["enumerate", "--qubits", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("order: 48"));
    let (code, out, _) = czs(&["ghz", "--qubits", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(parse_circuit(&out).unwrap().k(), 4);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_czs");
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "qubits 2\ncz 0 1\n");
    let b = write(dir.path(), "b.txt", "qubits 2\nswap 0 1\n");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["verify", &a, &a]), Some(0));
    assert_eq!(status(&["verify", &a, &b]), Some(2));
    assert_eq!(status(&["enumerate"]), Some(1));
}
