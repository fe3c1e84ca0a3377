use std::fs;
use std::path::PathBuf;

use hatfree::cli::{run, EXIT_ERROR, EXIT_FOUND, EXIT_INCONCLUSIVE, EXIT_OK};

struct Dir(tempfile::TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_string_lossy().into_owned()
    }
}

fn hatfree(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("hatfree").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn detect_finds_the_house() {
    let d = Dir::new();
    let house = d.file("house.g6", "DyK\n");
    let (code, out) = hatfree(&["detect", "--what", "hole-with-hat", "--in", &house]);
    assert_eq!(code, EXIT_FOUND, "{out}");
    assert!(out.starts_with("found hole="));
    let c5 = d.file("c5.g6", "Dhc\n");
    assert_eq!(hatfree(&["detect", "--what", "house", "--in", &c5]).0, EXIT_OK);
    assert_eq!(hatfree(&["detect", "--what", "perfect", "--in", &c5]).0, EXIT_FOUND);
    let (code, out) = hatfree(&["detect", "--what", "clique", "--in", &c5]);
    assert_eq!((code, out.trim()), (EXIT_OK, "size=2 set={0,1}"));
}

#[test]
fn certify_c5_is_not_one_narrow() {
    let d = Dir::new();
    let c5 = d.file("c5.g6", "Dhc\n");
    let (code, out) = hatfree(&["certify", "--alpha", "1", "--in", &c5]);
    assert_eq!(code, EXIT_FOUND);
    assert!(out.contains("max_value=5/4"), "{out}");
    assert_eq!(hatfree(&["certify", "--alpha", "2", "--in", &c5]).0, EXIT_OK);
    let good = d.file("f.txt", "n=5\n0 1/4\n1 1/4\n2 1/4\n3 1/4\n4 1/4\n");
    let (_, out) = hatfree(&["certify", "--alpha", "1", "--in", &c5, "--good", &good, "--threshold"]);
    assert!(out.contains("good-function value=5/4"), "{out}");
    assert!(out.contains("threshold=1.1609640"), "{out}");
}

#[test]
fn certify_near_the_threshold_is_inconclusive() {
    let d = Dir::new();
    let c5 = d.file("c5.g6", "Dhc\n");
    // just above log 5 / log 4: 5 * (1/4)^alpha lands within 1e-9 of 1
    assert_eq!(hatfree(&["certify", "--alpha", "1.160964047444", "--in", &c5]).0, EXIT_INCONCLUSIVE);
}

#[test]
fn verify_reports_zero_violations() {
    let (code, out) = hatfree(&["verify", "--lemma", "wiggly1", "--n", "6", "--filter", "hwh-free"]);
    assert_eq!(code, EXIT_OK);
    let summary: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(summary["violations"], 0);
    assert_eq!(summary["verified"], true);
    let (code, out) = hatfree(&["verify", "--lemma", "wiggly1", "--n", "5", "--jobs", "2"]);
    assert_eq!(code, EXIT_FOUND);
    assert!(out.lines().next().unwrap().starts_with("wiggly1 "));
}

#[test]
fn enumerate_stats_and_search() {
    assert_eq!(hatfree(&["enumerate", "--n", "5", "--count"]).1.trim(), "34");
    assert_eq!(hatfree(&["enumerate", "--n", "4", "--labelled", "--count"]).1.trim(), "64");
    assert_eq!(hatfree(&["enumerate", "--n", "3"]).1.lines().count(), 4);
    let (code, out) = hatfree(&["stats", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    let s: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(s["min"], 2);
    let (code, out) = hatfree(&["search", "--seed", "7", "--pipeline"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("instances "));
}

#[test]
fn coherence_and_decompose() {
    let d = Dir::new();
    let c5 = d.file("c5.g6", "Dhc\n");
    let w = d.file("w.txt", "n=5\n0 1/5\n1 1/5\n2 1/5\n3 1/5\n4 1/5\n");
    assert_eq!(hatfree(&["coherence", "--in", &c5, "--weights", &w, "--eps", "1/5"]).0, EXIT_FOUND);
    assert_eq!(hatfree(&["coherence", "--in", &c5, "--weights", &w, "--eps", "1"]).0, EXIT_OK);
    let (code, out) = hatfree(&["decompose", "--in", &c5]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("homogeneous-partition {0} {1} {2} {3} {4}"));
    // weighted decomposition needs a coherent instance
    assert_eq!(hatfree(&["decompose", "--in", &c5, "--weights", &w, "--eps", "1/5"]).0, EXIT_ERROR);
}

#[test]
fn bad_input_exits_two() {
    let d = Dir::new();
    let bad = d.file("bad.txt", "3 1\n0 9\n");
    assert_eq!(hatfree(&["detect", "--what", "forcer", "--in", &bad]).0, EXIT_ERROR);
    assert_eq!(hatfree(&["detect", "--what", "forcer", "--in", "/nonexistent/x.g6"]).0, EXIT_ERROR);
    assert_eq!(hatfree(&["verify", "--lemma", "nope", "--n", "4"]).0, EXIT_ERROR);
    assert_eq!(hatfree(&["frobnicate"]).0, EXIT_ERROR);
    assert_eq!(hatfree(&["--help"]).0, EXIT_OK);
}
