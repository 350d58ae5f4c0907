//! End-to-end checks of the command-line interface: the file format, the
//! subcommands, exit codes, determinism, and the endo round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quiverhom"))
}

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_reports_dimension() {
    let out = run(&["build", &data("example4.alg")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim = 14"));
    assert!(text.contains("cartan_row_1 = 2 1 1"));
}

#[test]
fn reports_are_deterministic() {
    let a = stdout(&run(&["build", &data("example4.alg")]));
    let b = stdout(&run(&["build", &data("example4.alg")]));
    assert_eq!(a, b, "byte-identical reports for equal config");
}

#[test]
fn machine_mode_is_key_value_only() {
    let out = run(&["build", &data("example4.alg"), "--machine"]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        assert!(line.contains(" = "), "non key-value line: {line}");
    }
}

#[test]
fn nakayama_detection_and_series() {
    let out = run(&["nakayama", &data("example4.alg")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("nakayama = true"));
    assert!(text.contains("admissible_sequence = (4, 5, 5)"));
    assert!(text.contains("fg_certificate = certified yes"));

    let out = run(&["nakayama", &data("commutative_square.alg")]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("nakayama = false"));
}

#[test]
fn malformed_relation_gives_parse_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "field = Q\nvertices = 1\narrow x : 1 -> 1\nrelation x*nope\n").unwrap();
    let out = run(&["build", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gorenstein_verdicts_drive_exit_codes() {
    let out = run(&["gorenstein", &data("example4.alg")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("gorenstein = yes"));

    let out = run(&["gorenstein", &data("non_gorenstein_nakayama.alg")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("gorenstein = no"));
}

#[test]
fn fg_certified_no_exits_with_verdict_code() {
    let out = run(&["fg", &data("non_gorenstein_nakayama.alg")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("verdict = certified no"));
}

#[test]
fn hochschild_table() {
    let out = run(&["hochschild", &data("dual_numbers.alg"), "--max-degree", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dims = (2, 1, 1, 1, 1, 1)"));
    assert!(text.contains("center_dim = 2"));
}

#[test]
fn tilt_check_verdicts() {
    let out = run(&[
        "tilt-check",
        &data("example4.alg"),
        "--module",
        "P1+P2+S2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("tilting = true"));

    let out = run(&["tilt-check", &data("dual_numbers.alg"), "--module", "S1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("tilting = false"));
}

#[test]
fn mutate_from_the_regular_module() {
    let out = run(&[
        "mutate",
        &data("example4.alg"),
        "--tilting",
        "A",
        "--at",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("step_0_tilting = true"));
    assert!(text.contains("final_summand_dims = 5 5 1"));
}

#[test]
fn endo_output_round_trips_through_build() {
    let out = run(&["endo", &data("example4.alg"), "--module", "P1+P2+S2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim = 10"));
    // extract the emitted file-format block and rebuild it
    let start = text.find("field = ").expect("emitted presentation");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("endo.alg");
    std::fs::write(&path, &text[start..]).unwrap();
    let rebuilt = run(&["build", path.to_str().unwrap()]);
    assert!(rebuilt.status.success());
    assert!(stdout(&rebuilt).contains("dim = 10"));
}

#[test]
fn fingerprint_runs() {
    let out = run(&[
        "fingerprint",
        &data("dual_numbers.alg"),
        "--pair",
        "S1:S1",
        "--max-degree",
        "4",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree_0 = h = 2, ann = 1, fingerprint = 1"));
}

#[test]
fn derived_compare_passes_on_identity_tilt() {
    let out = run(&[
        "derived-compare",
        &data("dual_numbers.alg"),
        "--tilting",
        "A",
        "--pairs",
        "S1:S1",
        "--window",
        "-1..2",
        "--max-degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass = true"));
}

#[test]
fn reproduce_scenarios() {
    let out = run(&["reproduce", "hhsquare"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ALL CHECKS PASSED"));

    let out = run(&["reproduce", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_example4_end_to_end() {
    let out = run(&["reproduce", "example4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ALL CHECKS PASSED"));
    assert!(text.contains("seed = 0"));
}

#[test]
fn field_override_is_accepted() {
    let out = run(&["build", &data("example4.alg"), "--field", "Fp(5)"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("field = Fp(5)"));
}

#[test]
fn eae_subcommand_reports_hypotheses() {
    let out = run(&["eae", &data("example4.alg"), "--vertices", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("applicable = "));
}
