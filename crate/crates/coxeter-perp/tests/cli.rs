use std::path::PathBuf;
use std::process::Command;

use coxeter_perp::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

/// Run in-process; returns (exit code, stdout, stderr).
fn coxperp(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["coxperp"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = coxperp(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn finpart_on_the_bipyramid_is_one_single_reflection() {
    let v = json(&["finpart", "--x", "x1", &data("bipyramid.txt")]);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(comps[0]["kind"], "single-reflection");
    assert_eq!(comps[0]["type"], "A1");
}

#[test]
fn reflindep_on_the_334_triangle() {
    let v = json(&["reflindep", &data("triangle_334.txt")]);
    assert_eq!(v["overall"], "reflection-independent");
    assert_eq!(v["rule"], "two-spherical");
    let v = json(&["reflindep", "--input", &data("a5.txt")]);
    assert_eq!(v["overall"], "inconclusive");
}

#[test]
fn perp_on_a5_is_a3() {
    let v = json(&["perp", "--x", "x1", &data("a5.txt")]);
    assert_eq!(v["types"], serde_json::json!(["A3"]));
    assert_eq!(v["status"], "ok");
    let (code, out, _) = coxperp(&["perp", "--x", "x1", "--format", "text", &data("a5.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("types: A3"));
}

#[test]
fn infinite_labels_are_strings() {
    let v = json(&["perp", "--x", "x1", &data("p5.txt")]);
    assert_eq!(v["types"], serde_json::json!(["I2(5)"]));
    let v = json(&["analyze", &data("mixed.json")]);
    assert!(v["graph"]["edges"].as_array().unwrap().iter().any(|e| e[2] == "inf"));
}

#[test]
fn exit_codes() {
    assert_eq!(coxperp(&["perp", "--x", "a", &data("uncertified.txt")]).0, 2);
    assert_eq!(coxperp(&["crosscheck", "--x", "x2", &data("h4.txt")]).0, 0);
    let (code, _, err) = coxperp(&["perp", "--x", "nope", &data("a5.txt")]);
    assert_eq!(code, 1);
    assert!(err.contains("unknown vertex nope"));
    let (code, _, err) = coxperp(&["analyze", &data("missing.txt")]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot read"));
    assert_eq!(coxperp(&["oracle", "--x", "a", "--max-roots", "100", &data("triangle_333.txt")]).0, 1);
    assert_eq!(coxperp(&["frobnicate"]).0, 1);
}

#[test]
fn parse_errors_report_line_numbers() {
    let dir = std::env::temp_dir().join(format!("coxperp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "edge a b 3\nedge b c x\n").unwrap();
    let (code, _, err) = coxperp(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["analyze", "--format", "text"],
        vec!["perp", "--x", "x1"],
        vec!["finpart", "--x", "x2"],
        vec!["reflindep"],
    ] {
        for file in ["bipyramid.txt", "a5.txt", "p5.txt"] {
            let mut a = args.clone();
            let path = data(file);
            a.push(&path);
            let first = coxperp(&a);
            assert_eq!(first, coxperp(&a));
        }
    }
    let a = coxperp(&["corpus", "--seed", "1", "--count", "5", "--max-rank", "5"]);
    assert_eq!(a, coxperp(&["corpus", "--seed", "1", "--count", "5", "--max-rank", "5"]));
    assert_ne!(a.1, coxperp(&["corpus", "--seed", "2", "--count", "5", "--max-rank", "5"]).1);
}

#[test]
fn corpus_output_parses_back() {
    let (_, text, _) = coxperp(&["corpus", "--seed", "3", "--count", "4", "--pool", "2,3,inf"]);
    let graphs = coxeter_perp::corpus::corpus_parse(&text).unwrap();
    assert_eq!(graphs.len(), 4);
    let v = json(&["corpus", "--seed", "3", "--count", "4", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn binary_runs_and_sets_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coxperp");
    let out = Command::new(bin).args(["finpart", "--x", "x1", &data("bipyramid.txt")]).output().unwrap();
    assert!(out.status.success());
    let again = Command::new(bin).args(["finpart", "--x", "x1", &data("bipyramid.txt")]).output().unwrap();
    assert_eq!(out.stdout, again.stdout);
    let unsupported = Command::new(bin).args(["perp", "--x", "a", &data("uncertified.txt")]).output().unwrap();
    assert_eq!(unsupported.status.code(), Some(2));
}
