use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const THREE_VECTORS: &str = "mrss 2 3 2\nt 3 3\ns 2 1\ns 1 1\ns 1 2\n";
const MINIMAL: &str = "mrss 1 1 1\nt 1\ns 1\n";
const P3: &str = "p oa 3 2\nk 2\nmode offensive\ncard atmost\ne 0 1\ne 1 2\n";

fn oa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_reports_violations_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "p3.oa", P3);
    let ok = oa(&["verify", s(&inst), "--set", "0,1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "valid");

    let bad = oa(&["verify", s(&inst), "--set", "0"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("vertex 1 falls short by 1"));

    let err = oa(&["verify", s(&inst), "--set", "9"]);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn solve_prints_witness_and_dot() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "p3.oa", P3);
    let dot = dir.path().join("p3.dot");
    let out = oa(&["solve", s(&inst), "--dot", s(&dot)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("answer yes\nwitness {1}\n"));
    assert!(fs::read_to_string(&dot).unwrap().contains("fillcolor"));

    let naive = oa(&["solve", s(&inst), "--naive"]);
    assert!(stdout(&naive).contains("witness {1}"));

    let k1 = file(&dir, "no.oa", "p oa 2 1\nk 1\nmode strong\ne 0 1\n");
    assert_eq!(oa(&["solve", s(&k1)]).status.code(), Some(1));
    assert_eq!(
        oa(&["solve", s(&inst), "--cap", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn solve_mrss_three_vectors() {
    let dir = TempDir::new().unwrap();
    let out = oa(&["solve-mrss", s(&file(&dir, "f.mrss", THREE_VECTORS))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "answer yes\nwitness 0 2\n");
}

#[test]
fn reduce_writes_instance_and_trace() {
    let dir = TempDir::new().unwrap();
    let src = file(&dir, "m1.mrss", MINIMAL);
    let out = dir.path().join("m1.oa");
    let trace = dir.path().join("m1.trace");
    let run = oa(&[
        "reduce",
        s(&src),
        "--step",
        "pipeline:lemma3",
        "-o",
        s(&out),
        "--trace",
        s(&trace),
    ]);
    assert_eq!(
        run.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("p oa 412 "));
    assert!(text.contains("\nk 180\n"));
    let traces = fs::read_to_string(&trace).unwrap();
    assert_eq!(traces.matches("step ").count(), 3);
    assert!(stdout(&run).lines().all(|l| l.ends_with("size formula ok")));

    // the single-step form consumes the previous output
    let gadget = dir.path().join("l2.oa");
    assert!(
        oa(&["reduce", s(&src), "--step", "lemma2", "-o", s(&gadget)])
            .status
            .success()
    );
    let cor1 = dir.path().join("c1.oa");
    assert!(
        oa(&["reduce", s(&gadget), "--step", "cor1", "-o", s(&cor1)])
            .status
            .success()
    );
    assert!(fs::read_to_string(&cor1).unwrap().starts_with("p oa 41 "));

    let full = oa(&["reduce", s(&src), "--step", "pipeline", "-o", s(&out)]);
    assert_eq!(full.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&full.stderr).contains("cap exceeded"));

    let wrong = oa(&["reduce", s(&src), "--step", "cor1", "-o", s(&out)]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn equiv_on_minimal_instances() {
    let dir = TempDir::new().unwrap();
    let m1 = file(&dir, "m1.mrss", MINIMAL);
    let out = oa(&["equiv", s(&m1), "--step", "lemma2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("EQUIVALENT\n"));

    let no = file(&dir, "no.mrss", "mrss 1 2 1\nt 3\ns 2\ns 1\n");
    let out = oa(&["equiv", s(&no), "--step", "lemma2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("source no\nreduced no\n"));
}

#[test]
fn param_commands() {
    let dir = TempDir::new().unwrap();
    let c4 = file(
        &dir,
        "c4.oa",
        "p oa 4 4\nk 1\nmode offensive\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n",
    );
    let fvs = oa(&["param", s(&c4), "--fvs"]);
    assert_eq!(stdout(&fvs), "fvs {0}\n");
    let td = oa(&["param", s(&c4), "--treedepth"]);
    assert_eq!(stdout(&td), "treedepth 3\n");
    let min = oa(&["param", s(&c4), "--deletion-height", "1"]);
    assert_eq!(stdout(&min), "deletion_set {0}\n");

    let ok = oa(&["param", s(&c4), "--deletion-height", "1", "--set", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("component 0 height 1"));
    let bad = oa(&["param", s(&c4), "--deletion-height", "1", "--set", ""]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("component 0 cyclic"));

    assert_eq!(oa(&["param", s(&c4)]).status.code(), Some(2));
    assert_eq!(
        oa(&["param", s(&c4), "--fvs", "--treedepth"]).status.code(),
        Some(2)
    );
}

#[test]
fn gen_is_deterministic_and_parseable() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.oa");
    let b = dir.path().join("b.oa");
    for p in [&a, &b] {
        assert!(
            oa(&["gen", "--profile", "soafn", "--seed", "11", "-o", s(p)])
                .status
                .success()
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(oa(&["solve", s(&a)]).status.code().unwrap() < 2);

    let m = dir.path().join("m.mrss");
    assert!(
        oa(&["gen", "--profile", "mrss", "--seed", "2", "-o", s(&m)])
            .status
            .success()
    );
    assert!(oa(&["solve-mrss", s(&m)]).status.code().unwrap() < 2);

    assert_eq!(
        oa(&["gen", "--profile", "bogus", "--seed", "1", "-o", s(&a)])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.oa", "p oa 2 1\nk 1\nmode offensive\ne 0 5\n");
    let out = oa(&["solve", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
}
