use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use snarkcrit::analysis::{AnalysisReport, EdgeClass};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn snarkcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snarkcrit")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn report(out: &Output) -> AnalysisReport {
    AnalysisReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn analyze_petersen() {
    let out = snarkcrit(&["analyze", path(&corpus("petersen.g6"))]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    assert_eq!(rep.schema, 1);
    assert_eq!(rep.resistance.r, 2);
    assert_eq!(rep.k_g().unwrap(), (0..15).collect::<Vec<_>>());
    assert_eq!(rep.oddness.unwrap().omega, 2);
    assert_eq!(rep.clusters.unwrap().len(), 1);
}

#[test]
fn analyze_class_one() {
    let out = snarkcrit(&["analyze", path(&corpus("k4.g6"))]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    assert_eq!(rep.class, EdgeClass::One);
    assert_eq!(rep.resistance.r, 0);
    assert!(rep.decomposition.mcs.is_empty());
    assert_eq!(rep.decomposition.b_g, (0..6).collect::<Vec<_>>());
}

#[test]
fn analyze_is_reproducible_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let (json, dot) = (dir.path().join("r.json"), dir.path().join("r.dot"));
    let input = corpus("example2.edgelist");
    let out = snarkcrit(&["analyze", path(&input), "--out", path(&json), "--dot", path(&dot)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let again = snarkcrit(&["analyze", path(&input)]);
    assert_eq!(fs::read(&json).unwrap(), again.stdout);
    assert_eq!(report(&again).resistance.r, 3);
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph \"example2\" {"));
}

#[test]
fn timings_are_opt_in() {
    let plain = report(&snarkcrit(&["analyze", path(&corpus("prism.g6"))]));
    assert!(plain.timings_ms.is_none());
    let timed = report(&snarkcrit(&["analyze", path(&corpus("prism.g6")), "--timings"]));
    assert!(timed.timings_ms.is_some());
}

#[test]
fn skip_leaves_stages_out() {
    let out = snarkcrit(&["analyze", path(&corpus("petersen.g6")), "--skip", "oddness,hypo", "--skip", "clusters"]);
    let rep = report(&out);
    assert!(rep.oddness.is_none() && rep.hypohamiltonian.is_none() && rep.clusters.is_none());
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edgelist");
    fs::write(&bad, "0 1\n1 x\n").unwrap();
    let out = snarkcrit(&["analyze", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());

    let unknown = dir.path().join("graph.txt");
    fs::write(&unknown, "0 1\n1 2\n2 0\n").unwrap();
    assert_eq!(snarkcrit(&["analyze", path(&unknown)]).status.code(), Some(1));
    assert_eq!(snarkcrit(&["analyze", path(&unknown), "--format", "edges"]).status.code(), Some(0));

    let missing = dir.path().join("missing.g6");
    assert_eq!(snarkcrit(&["analyze", path(&missing)]).status.code(), Some(1));
}

#[test]
fn small_budget_exits_two() {
    let out = snarkcrit(&["analyze", path(&corpus("petersen.g6")), "--budget", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!report(&out).complete);
}

#[test]
fn dot_styles_edges() {
    let out = snarkcrit(&["dot", path(&corpus("k4.g6"))]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let edges: Vec<&str> = text.lines().filter(|l| l.contains("--")).collect();
    assert_eq!(edges.len(), 6);
    assert!(edges.iter().all(|l| l.contains("color=gray")));

    let text = String::from_utf8(snarkcrit(&["dot", path(&corpus("petersen.g6"))]).stdout).unwrap();
    assert!(text.lines().filter(|l| l.contains("--")).all(|l| l.contains("bold") && l.contains("color=red")));
}

#[test]
fn suite_over_corpus() {
    let dir = corpus("");
    let out = snarkcrit(&["suite", path(&dir), "--jobs", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.ends_with("ok")));
    assert!(rows[0].starts_with("example1"));
}

#[test]
fn suite_on_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = snarkcrit(&["suite", path(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 1);
}

#[test]
fn suite_flags_incomplete_and_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(corpus("petersen.g6"), dir.path().join("petersen.g6")).unwrap();
    fs::copy(corpus("k4.g6"), dir.path().join("k4.g6")).unwrap();
    let out = snarkcrit(&["suite", path(dir.path()), "--budget", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("petersen") && l.ends_with("incomplete")));

    fs::write(dir.path().join("broken.g6"), "!!\n").unwrap();
    let out = snarkcrit(&["suite", path(dir.path())]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
}

#[test]
fn generate_writes_parseable_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("j5.g6");
    let out = snarkcrit(&["generate", "flower", "5", "--format", "g6", "--out", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read(&file).unwrap(), fs::read(corpus("j5.g6")).unwrap());
    assert_eq!(snarkcrit(&["generate", "flower", "4"]).status.code(), Some(1));
    assert_eq!(snarkcrit(&["generate", "nonsense"]).status.code(), Some(1));
}
