//! End-to-end tests of the installed binary: exit codes, report shape,
//! golden output strings, and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clusterchar"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf8")
}

fn assert_no_panic(out: &Output) {
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(!err.contains("panicked"), "binary panicked: {err}");
}

fn report(out: &Output) -> serde_json::Value {
    assert_no_panic(out);
    serde_json::from_str(&stdout_str(out)).expect("stdout is a JSON report")
}

#[test]
fn pentagon_theorem_sweep_passes_with_consistent_summary() {
    let out = run(&["verify", "theorem", "--typeA-rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["suite"], "theorem");
    assert_eq!(r["scope"]["typeA_rank"], 2);
    let instances = r["instances"].as_array().unwrap();
    assert_eq!(instances.len(), 25);
    let verdicts: Vec<&serde_json::Value> =
        instances.iter().flat_map(|i| i["verdicts"].as_array().unwrap()).collect();
    let passed = verdicts.iter().filter(|v| v["pass"] == true).count();
    assert_eq!(r["summary"]["instances"], 25);
    assert_eq!(r["summary"]["verdicts"], verdicts.len());
    assert_eq!(r["summary"]["passed"], passed);
    assert_eq!(r["summary"]["failed"], verdicts.len() - passed);
    assert_eq!(r["summary"]["failed"], 0);
    for v in verdicts {
        assert!(v["lhs"].as_str().unwrap().contains('x'));
        assert!(v["rhs"].as_str().unwrap().contains('x'));
    }
}

#[test]
fn reports_are_byte_identical_across_thread_counts() {
    let a = run(&["verify", "lemma-fibers", "--typeA-rank", "2", "--jobs", "1"]);
    let b = run(&["verify", "lemma-fibers", "--typeA-rank", "2", "--jobs", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn out_flag_writes_the_same_report_bytes() {
    let dir = std::env::temp_dir();
    let p1 = dir.join(format!("clusterchar-test-{}-1.json", std::process::id()));
    let p2 = dir.join(format!("clusterchar-test-{}-2.json", std::process::id()));
    let args = ["verify", "ind", "--typeA-rank", "2", "--seed", "9", "--out"];
    let a = bin().args(args).arg(&p1).output().unwrap();
    let b = bin().args(args).arg(&p2).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let f1 = std::fs::read(&p1).unwrap();
    let f2 = std::fs::read(&p2).unwrap();
    assert_eq!(f1, f2);
    let r: serde_json::Value = serde_json::from_slice(&f1).unwrap();
    assert_eq!(r["environment"]["seed"], 9);
    assert!(stdout_str(&a).contains("25 passed"));
    std::fs::remove_file(&p1).ok();
    std::fs::remove_file(&p2).ok();
}

#[test]
fn undecorated_product_fails_on_the_cycle_and_the_polygon_sweep_passes() {
    let cycle = fixture("a3_cycle3.json");
    let plain = run(&["verify", "theorem", "--algebra", cycle.to_str().unwrap()]);
    assert_eq!(plain.status.code(), Some(1));
    let r = report(&plain);
    assert!(r["summary"]["failed"].as_u64().unwrap() >= 1);

    let decorated = run(&["verify", "theorem", "--typeA-rank", "3"]);
    assert_eq!(decorated.status.code(), Some(0));
    assert_eq!(report(&decorated)["summary"]["instances"], 126);
}

#[test]
fn module_scope_prop_a_checks_the_single_sequence() {
    let a2 = fixture("a2.json");
    let out = run(&["verify", "prop-a", "--algebra", a2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["summary"]["instances"], 1);
    assert_eq!(r["environment"]["base_prime"], 5);
    assert!(r["instances"][0]["descriptor"].as_str().unwrap().contains("sequence"));
}

#[test]
fn fiber_suite_census_labels_cover_both_field_sizes() {
    let a2 = fixture("a2.json");
    let out =
        run(&["verify", "lemma-fibers", "--algebra", a2.to_str().unwrap(), "--q", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let labels: Vec<String> = r["instances"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|i| i["verdicts"].as_array().unwrap())
        .map(|v| v["label"].as_str().unwrap().to_string())
        .collect();
    assert!(labels.iter().all(|l| l.contains("fiber census")));
    assert!(labels.iter().any(|l| l.contains("q=2")));
    assert!(labels.iter().any(|l| l.contains("q=3")));
}

#[test]
fn fpoly_prints_the_golden_strings() {
    let a2 = fixture("a2.json");
    let a2 = a2.to_str().unwrap();
    let p1 = run(&["fpoly", "--algebra", a2, "P1"]);
    assert_eq!(p1.status.code(), Some(0));
    assert_eq!(stdout_str(&p1), "1 + y2 + y1*y2\n");
    assert_eq!(stdout_str(&run(&["fpoly", "--algebra", a2, "S1"])), "1 + y1\n");
    assert_eq!(stdout_str(&run(&["fpoly", "--algebra", a2, "zero"])), "1\n");
    let all = stdout_str(&run(&["fpoly", "--algebra", a2]));
    assert_eq!(all, "P1: 1 + y2 + y1*y2\nS1: 1 + y1\nS2: 1 + y2\nzero: 1\n");
}

#[test]
fn char_prints_a_variable_for_a_triangulation_arc() {
    let out = run(&["char", "--typeA-rank", "2", "[[1,3],[1,4]]", "[1,3]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out), "x1\n");
    let crossing = run(&["char", "--typeA-rank", "2", "[[1,3],[1,4]]", "[2,4]"]);
    assert_eq!(stdout_str(&crossing), "x1^-1 + x1^-1*x2\n");
}

#[test]
fn char_prints_module_characters_from_a_file() {
    let a2 = fixture("a2.json");
    let out = run(&["char", "--algebra", a2.to_str().unwrap(), "S1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out), "x1^-1 + x1^-1*x2\n");
    let zero = run(&["char", "--algebra", a2.to_str().unwrap(), "zero"]);
    assert_eq!(stdout_str(&zero), "1\n");
}

#[test]
fn malformed_inputs_exit_two_without_panicking() {
    let dir = std::env::temp_dir();
    let broken = dir.join(format!("clusterchar-broken-{}.json", std::process::id()));
    std::fs::write(&broken, "{\"p\": 5, \"vertices\": [").unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", "prop-a", "--algebra", broken.to_str().unwrap()],
        vec!["verify", "prop-a", "--algebra", "/definitely/not/here.json"],
        vec!["verify", "theorem"],
        vec!["verify", "nonsense", "--typeA-rank", "2"],
        vec!["verify", "theorem", "--typeA-rank", "0"],
        vec!["verify", "theorem", "--typeA-rank", "9"],
        vec!["verify", "lemma-fibers", "--typeA-rank", "2", "--q", "4"],
        vec!["fpoly", "--algebra", "/definitely/not/here.json"],
        vec!["char", "--typeA-rank", "2", "not json", "[1,3]"],
        vec!["char", "--typeA-rank", "2", "[[1,3],[2,4]]", "[1,3]"],
        vec!["char", "--typeA-rank", "2", "[[1,3],[1,4]]"],
        vec!["verify", "remark", "--algebra", broken.to_str().unwrap()],
    ];
    for args in cases {
        let out = run(&args);
        assert_no_panic(&out);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
    std::fs::remove_file(&broken).ok();
    let both = run(&[
        "verify",
        "theorem",
        "--typeA-rank",
        "2",
        "--algebra",
        fixture("a2.json").to_str().unwrap(),
    ]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn unknown_module_names_are_input_errors() {
    let a2 = fixture("a2.json");
    let out = run(&["fpoly", "--algebra", a2.to_str().unwrap(), "Nope"]);
    assert_no_panic(&out);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Nope"));
}
