use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_countkernel"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("k3.gr", "p 3 3\ne 1 2\ne 2 3\ne 1 3\n"),
        ("edge.gr", "p 2 1\ne 1 2\n"),
        ("path.gr", "c s-a-t\np 3 2\ne 1 2\ne 2 3\nt 1 3\n"),
        ("k4.gr", "p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\nt 1 4\n"),
    ];
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

#[test]
fn oracle_values() {
    let dir = setup();
    let d = dir.path();
    let cases: [(&[&str], &str); 6] = [
        (&["oracle", "vc", "--graph", "k3.gr", "--k", "2"], "3"),
        (&["oracle", "minvc", "--graph", "k3.gr", "--k", "2"], "3"),
        (&["oracle", "oct", "--graph", "k3.gr", "--k", "1"], "3"),
        (&["oracle", "mincut", "--graph", "k4.gr"], "2"),
        (&["oracle", "lpvc", "--graph", "k3.gr"], "3/2"),
        (&["oracle", "tw", "--graph", "k4.gr"], "3"),
    ];
    for (args, want) in cases {
        let out = run(d, args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), want, "{args:?}");
    }
}

#[test]
fn kernel_reduce_then_lift_matches_in_process() {
    let dir = setup();
    let d = dir.path();
    let out = run(d, &["kernel", "vc", "reduce", "--graph", "edge.gr", "--k", "1", "--out", "red.gr", "--context", "ctx.json"]);
    assert!(out.status.success());
    let reduced = stdout(&run(d, &["oracle", "vc", "--graph", "red.gr"]));
    assert_eq!(reduced, "2");
    let lifted = run(d, &["kernel", "vc", "lift", "--context", "ctx.json", "--count", &reduced]);
    assert_eq!(stdout(&lifted), "2");

    let in_process = {
        use countkernel::framework::{lookup, oracle_count, CountingInstance, Problem};
        let kernel = lookup("vc-kernel").unwrap();
        let inst = CountingInstance::new(Problem::VertexCover, countkernel::Graph::path(2), 1);
        let r = kernel.reduce(&inst).unwrap();
        let saved = countkernel::framework::LiftContext::from_json(&fs::read_to_string(d.join("ctx.json")).unwrap()).unwrap();
        assert_eq!(saved, r.context);
        kernel.lift(&r.context, &oracle_count(&r.reduced).unwrap()).unwrap()
    };
    assert_eq!(lifted.status.code(), Some(0));
    assert_eq!(stdout(&lifted), in_process.to_string());
}

#[test]
fn minimal_kernel_round_trip() {
    let dir = setup();
    let d = dir.path();
    assert!(run(d, &["kernel", "minvc", "reduce", "--graph", "k3.gr", "--k", "2", "--out", "r.gr", "--context", "c.json"]).status.success());
    let x = stdout(&run(d, &["oracle", "minvc", "--graph", "r.gr"]));
    assert_eq!(stdout(&run(d, &["kernel", "minvc", "lift", "--context", "c.json", "--count", &x])), "3");
}

#[test]
fn exact_composition_and_extraction() {
    let dir = setup();
    let d = dir.path();
    let out = run(d, &["compose", "exact", "--inputs", "path.gr,path.gr", "--out", "x.gr", "--meta", "m.json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&run(d, &["oracle", "mincut", "--graph", "x.gr"])), "544");
    assert_eq!(stdout(&run(d, &["extract", "--meta", "m.json", "--count", "544"])), "2,2");
    assert_eq!(run(d, &["extract", "--meta", "m.json", "--count", "545"]).status.code(), Some(3));
}

#[test]
fn sum_composition() {
    let dir = setup();
    let d = dir.path();
    assert!(run(d, &["compose", "sum", "--inputs", "path.gr,k4.gr", "--out", "s.gr"]).status.code() == Some(3));
    assert!(run(d, &["compose", "sum", "--inputs", "path.gr,path.gr,path.gr", "--out", "s.gr"]).status.success());
    assert_eq!(stdout(&run(d, &["oracle", "mincut", "--graph", "s.gr"])), "6");
}

#[test]
fn transformations_with_contexts() {
    let dir = setup();
    let d = dir.path();
    assert!(run(d, &["ppt", "mincut-oct", "--graph", "path.gr", "--out", "o.gr", "--context", "o.json"]).status.success());
    let oct = stdout(&run(d, &["oracle", "oct", "--graph", "o.gr"]));
    assert_eq!(stdout(&run(d, &["lift", "--context", "o.json", "--count", &oct])), "2");

    assert!(run(d, &["ppt", "oct-vc", "--graph", "edge.gr", "--k", "0", "--out", "v.gr", "--context", "v.json", "--check-nice"]).status.success());
    let vc = stdout(&run(d, &["oracle", "vc", "--graph", "v.gr"]));
    assert_eq!(stdout(&run(d, &["lift", "--context", "v.json", "--count", &vc])), "1");
}

#[test]
fn json_report_agrees_with_text() {
    let dir = setup();
    let d = dir.path();
    let text = stdout(&run(d, &["oracle", "vc", "--graph", "k3.gr", "--k", "2"]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(d, &["--json", "oracle", "vc", "--graph", "k3.gr", "--k", "2"]))).unwrap();
    assert_eq!(json["outputs"]["value"], serde_json::Value::String(text));
    assert_eq!(json["subcommand"], "oracle");
}

#[test]
fn exit_codes() {
    let dir = setup();
    let d = dir.path();
    assert_eq!(run(d, &["oracle", "sideways"]).status.code(), Some(2));
    assert_eq!(run(d, &["oracle", "vc", "--graph", "missing.gr", "--k", "1"]).status.code(), Some(3));
    fs::write(d.join("bad.gr"), "p 2 1\ne 1 3\n").unwrap();
    let bad = run(d, &["oracle", "vc", "--graph", "bad.gr", "--k", "1"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
    assert_eq!(run(d, &["kernel", "vc", "lift", "--context", "k3.gr", "--count", "1"]).status.code(), Some(3));
    assert!(run(d, &["gen", "gnp", "--n", "60", "--p", "0.5", "--seed", "3", "--out", "g.gr"]).status.success());
    assert_eq!(run(d, &["oracle", "vc", "--graph", "g.gr", "--k", "30"]).status.code(), Some(4));
}

#[test]
fn generation_is_deterministic() {
    let dir = setup();
    let d = dir.path();
    run(d, &["gen", "gnp", "--n", "9", "--p", "0.4", "--seed", "5", "--out", "a.gr"]);
    run(d, &["gen", "gnp", "--n", "9", "--p", "0.4", "--seed", "5", "--out", "b.gr"]);
    assert_eq!(fs::read_to_string(d.join("a.gr")).unwrap(), fs::read_to_string(d.join("b.gr")).unwrap());
}

#[test]
fn verify_small_sweep() {
    let dir = setup();
    let args = ["verify", "all", "--nmax", "4", "--kmax", "2", "--seed", "1", "--trials", "20"];
    let a = run(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = run(dir.path(), &args);
    let strip = |s: String| s.lines().map(|l| l.split(" in ").next().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(strip(stdout(&a)), strip(stdout(&b)));
}
