//! End-to-end checks of the `dialtop` binary: the exit-code contract
//! (0 success, 1 mathematical failure, 2 usage/parse error), document
//! round-trips, and the sum-equals-coproduct flow through files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dialtop::cli::{emit_workspace, parse_workspace};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn dialtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dialtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = dialtop(args);
    let stdout = String::from_utf8_lossy(&out.stdout).to_string();
    (out.status.code().expect("exit code"), stdout)
}

fn ws(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn exit_code_matrix() {
    let sierpinski = ws("sierpinski.dtw");
    let objects = ws("objects.dtw");
    let bad = ws("bad_bottom.dtw");
    let m3 = ws("m3.dtw");
    let malformed = ws("malformed.dtw");

    // Success paths.
    for args in [
        vec!["-w", &sierpinski, "validate", "sierpinski"],
        vec!["-w", &sierpinski, "topsys-check", "fuzzy_sierpinski"],
        vec!["-w", &sierpinski, "extent", "fuzzy_sierpinski", "a"],
        vec!["-w", &sierpinski, "topology-check", "diamond3"],
        vec!["-w", &sierpinski, "embed", "sierpinski"],
        vec!["-w", &objects, "compose", "ab", "bc"],
        vec!["-w", &objects, "tensor", "A", "B"],
        vec!["-w", &objects, "hom", "A", "B"],
        vec!["-w", &objects, "product", "A2", "B"],
        vec!["-w", &objects, "coproduct", "A", "C"],
        vec!["-w", &sierpinski, "top-sum", "sierpinski", "discrete2"],
        vec!["-w", &sierpinski, "top-product", "sierpinski", "indiscrete2"],
        vec!["-w", &sierpinski, "iso", "sierpinski", "sierpinski"],
    ] {
        let (code, report) = run(&args);
        assert_eq!(code, 0, "args {args:?} → {report}");
        assert!(report.contains("PASS") || report.contains("RESULT"), "{report}");
    }

    // Mathematical failures.
    for args in [
        vec!["-w", &bad, "topsys-check", "bad"],
        vec!["-w", &bad, "validate", "bad"],
        vec!["-w", &objects, "validate", "back"],
        vec!["-w", &sierpinski, "embed", "fuzzy_sierpinski"],
        vec!["-w", &m3, "validate", "M3"],
        vec!["-w", &sierpinski, "iso", "sierpinski", "discrete2"],
    ] {
        let (code, report) = run(&args);
        assert_eq!(code, 1, "args {args:?} → {report}");
        assert!(report.contains("FAIL kind="), "{report}");
    }

    // Usage and parse errors.
    for args in [
        vec!["-w", &malformed, "validate", "broken"],
        vec!["-w", &sierpinski, "validate", "nosuch"],
        vec!["-w", &sierpinski, "extent", "sierpinski", "nosuchopen"],
        vec!["validate", "sierpinski"], // no workspace
        vec!["-w", "/nonexistent/path.dtw", "validate", "x"],
        vec!["frobnicate"],
    ] {
        let (code, _) = run(&args);
        assert_eq!(code, 2, "args {args:?}");
    }
}

#[test]
fn witness_names_condition_iii() {
    let (code, report) = run(&["-w", &ws("bad_bottom.dtw"), "topsys-check", "bad"]);
    assert_eq!(code, 1);
    assert!(report.contains("FAIL kind=condition_iii"), "{report}");
    assert!(report.contains("witness="), "{report}");
}

#[test]
fn parse_emit_round_trip_on_every_fixture_document() {
    for name in ["sierpinski.dtw", "objects.dtw", "bad_bottom.dtw"] {
        let content = std::fs::read_to_string(fixture(name)).unwrap();
        let parsed = parse_workspace(&content, false).unwrap();
        let emitted = emit_workspace(&parsed);
        let reparsed = parse_workspace(&emitted, false).unwrap();
        assert_eq!(parsed, reparsed, "round trip differs for {name}");
    }
    let content = std::fs::read_to_string(fixture("sierpinski.json")).unwrap();
    let parsed = parse_workspace(&content, true).unwrap();
    let emitted = emit_workspace(&parsed);
    let reparsed = parse_workspace(&emitted, false).unwrap();
    assert_eq!(parsed, reparsed, "round trip differs for sierpinski.json");
}

#[test]
fn json_and_text_encodings_agree() {
    let text = std::fs::read_to_string(fixture("sierpinski.dtw")).unwrap();
    let json = std::fs::read_to_string(fixture("sierpinski.json")).unwrap();
    let from_text = parse_workspace(&text, false).unwrap();
    let from_json = parse_workspace(&json, true).unwrap();
    assert_eq!(
        from_text.system("sierpinski").unwrap().system,
        from_json.system("sierpinski").unwrap().system
    );
}

#[test]
fn top_sum_written_to_file_is_identical_to_coproduct() {
    let dir = std::env::temp_dir().join("dialtop-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let sum_path = dir.join("sum.dtw");
    let sierpinski = ws("sierpinski.dtw");

    let (code, _) = run(&[
        "-w",
        &sierpinski,
        "top-sum",
        "sierpinski",
        "fuzzy_sierpinski",
        "--out",
        sum_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    let (code, report) = run(&[
        "-w",
        &sierpinski,
        "iso",
        sum_path.to_str().unwrap(),
        "coproduct(sierpinski,fuzzy_sierpinski)",
    ]);
    assert_eq!(code, 0, "{report}");
    assert!(report.contains("result=identical"), "{report}");
}

#[test]
fn constructed_documents_reload() {
    let dir = std::env::temp_dir().join("dialtop-cli-reload");
    std::fs::create_dir_all(&dir).unwrap();
    let objects = ws("objects.dtw");

    for (args_out, reload_name) in [
        (vec!["tensor", "A2", "B"], "tensor"),
        (vec!["hom", "A", "C"], "hom"),
        (vec!["product", "A", "B"], "product"),
        (vec!["coproduct", "A", "B"], "coproduct"),
    ] {
        let path = dir.join(format!("{reload_name}.dtw"));
        let mut args: Vec<&str> = vec!["-w", &objects];
        args.extend(args_out.iter());
        args.push("--out");
        args.push(path.to_str().unwrap());
        let (code, report) = run(&args);
        assert_eq!(code, 0, "{report}");
        let content = std::fs::read_to_string(&path).unwrap();
        let reloaded = parse_workspace(&content, false).unwrap();
        assert!(reloaded.object(reload_name).is_some(), "{reload_name}");
    }
}

#[test]
fn bitstream_demo_scores_streams() {
    let streams = ws("streams.txt");
    let (code, report) = run(&["demo-bitstream", &streams, "01010"]);
    assert_eq!(code, 0);
    assert!(report.contains("RESULT stream=0 degree=1"), "{report}");
    assert!(report.contains("RESULT stream=1 degree=0.9"), "{report}");
    // Third stream starts 11001, position 0 wants 0 → 1-1 = 0.
    assert!(report.contains("RESULT stream=2 degree=0"), "{report}");

    // A prefix longer than the streams is a mathematical failure.
    let (code, report) = run(&["demo-bitstream", &streams, "0101010"]);
    assert_eq!(code, 1);
    assert!(report.contains("FAIL kind=stream_too_short"), "{report}");

    // A prefix with letters is a usage error.
    let (code, _) = run(&["demo-bitstream", &streams, "01x"]);
    assert_eq!(code, 2);
}

#[test]
fn laws_subcommand_small_run_passes() {
    let (code, report) = run(&["laws", "--instances", "10", "--seed", "42"]);
    assert_eq!(code, 0, "{report}");
    for law in [
        "category-laws",
        "monoidal-closure",
        "universal-properties",
        "cideal-closure",
        "sum-equals-coproduct",
        "fullness-search",
    ] {
        assert!(report.contains(&format!("PASS law={law}")), "missing {law}: {report}");
    }
    assert!(report.contains("FINDING"), "fullness findings expected: {report}");
}
