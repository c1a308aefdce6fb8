use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dir() -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&d).unwrap();
    d
}

fn write(name: &str, text: &str) -> String {
    let p = dir().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn hist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hist")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn gen(args: &[&str], name: &str) -> String {
    let out = hist(&[&["gen"], args].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    write(name, &String::from_utf8(out.stdout).unwrap())
}

#[test]
fn check_reports_parameters() {
    let pet = write("petersen.g6", "IheA@GUAo\n");
    let v = json(&hist(&["check", &pet]));
    assert_eq!(v["report"]["nc"], 5);
    assert_eq!(v["report"]["sigma"], 6);
    assert_eq!(v["obstruction"]["kind"], "None");

    let h1 = gen(&["h1", "--n", "9"], "h1_9.el");
    assert_eq!(json(&hist(&["check", &h1]))["obstruction"]["kind"], "H1");

    let k4 = write("k4.g6", "C~\n");
    assert_eq!(json(&hist(&["check", &k4]))["report"]["complete"], true);
}

#[test]
fn solve_examples() {
    let pet = write("petersen_s.g6", "IheA@GUAo\n");
    let out = hist(&["solve", &pet]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "Hist");
    assert_eq!(v["tree"].as_array().unwrap().len(), 9);

    let h2 = gen(&["h2", "--n", "9"], "h2_9.el");
    let v = json(&hist(&["solve", &h2]));
    assert_eq!((v["status"].as_str(), v["method"].as_str()), (Some("NoHist"), Some("obstruction")));

    let c5 = write("c5.el", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let v = json(&hist(&["solve", &c5]));
    assert_eq!((v["status"].as_str(), v["method"].as_str()), (Some("NoHist"), Some("exact")));
}

#[test]
fn solve_exit_codes() {
    let split = write("split.el", "4\n0 1\n2 3\n");
    let out = hist(&["solve", &split]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let pet = write("petersen_b.g6", "IheA@GUAo\n");
    let out = hist(&["solve", &pet, "--method", "exact", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "Unknown");

    assert_eq!(hist(&["solve", "missing.el"]).status.code(), Some(2));
    assert_eq!(hist(&["solve"]).status.code(), Some(2));
    assert_eq!(hist(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let k4 = write("k4_v.g6", "C~\n");
    let star = write("star.tree", "0 1\n0 2\n0 3\n");
    assert_eq!(hist(&["verify", &k4, &star]).status.code(), Some(0));

    let p4 = write("p4.el", "0 1\n1 2\n2 3\n");
    let p4t = write("p4.tree", "0 1\n1 2\n2 3\n");
    let out = hist(&["verify", &p4, &p4t]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["reason"], "degree-2 vertices: 1,2");

    let foreign = write("foreign.tree", "0 1\n0 2\n0 9\n");
    let out = hist(&["verify", &k4, &foreign]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["reason"].as_str().unwrap().starts_with("edge not in graph"));

    let garbage = write("garbage.tree", "0 x\n");
    assert_eq!(hist(&["verify", &k4, &garbage]).status.code(), Some(2));
}

#[test]
fn gen_examples() {
    let h1 = hist(&["gen", "h1", "--n", "9"]);
    let text = String::from_utf8(h1.stdout).unwrap();
    let g = hist::io::parse_edgelist(&text).unwrap();
    assert_eq!((g.n(), g.m()), (9, 14));

    let a = hist(&["gen", "gnp", "--n", "20", "--p", "0.5", "--seed", "7"]);
    let b = hist(&["gen", "gnp", "--n", "20", "--p", "0.5", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);

    let h3 = hist(&["gen", "h3", "--n", "9", "--coincide"]);
    let g = hist::io::parse_edgelist(&String::from_utf8(h3.stdout).unwrap()).unwrap();
    let expected = hist::generate_h(hist::Family::H3, 9, true).unwrap();
    assert_eq!(g, expected);

    assert_eq!(hist(&["gen", "h1", "--n", "10"]).status.code(), Some(2));

    let g6 = hist(&["gen", "clique", "--n", "4", "--format", "g6"]);
    assert_eq!(String::from_utf8(g6.stdout).unwrap(), "C~\n");
}

#[test]
fn oracle_examples() {
    let k4 = write("k4_o.g6", "C~\n");
    let v = json(&hist(&["oracle", &k4]));
    assert_eq!((v["tree_count"].as_u64(), v["hist_count"].as_u64()), (Some(16), Some(4)));

    let c4 = write("c4.el", "0 1\n1 2\n2 3\n3 0\n");
    let v = json(&hist(&["oracle", &c4]));
    assert_eq!((v["tree_count"].as_u64(), v["hist_count"].as_u64()), (Some(4), Some(0)));

    let star = gen(&["clique", "--n", "2"], "k2.el");
    let v = json(&hist(&["oracle", &star]));
    assert_eq!(v["tree_count"], 1);

    let k13: String = (1..=13).map(|i| format!("0 {i}\n")).collect();
    let k13 = write("k13.el", &k13);
    let v = json(&hist(&["oracle", &k13]));
    assert_eq!((v["tree_count"].as_u64(), v["hist_count"].as_u64()), (Some(1), Some(1)));

    let k9 = gen(&["clique", "--n", "9"], "k9.el");
    let out = hist(&["oracle", &k9, "--cap", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["status"], "cap_exceeded");
}

#[test]
fn sweep_examples() {
    let out = hist(&["sweep", "--n-max", "7", "--mode", "atlas"]);
    let v = json(&out);
    assert_eq!(v["agreement_percent"], 100.0);
    assert_eq!(v["graphs"], 996);
    assert_eq!(out.stdout, hist(&["sweep", "--n-max", "7", "--mode", "atlas"]).stdout);

    let v = json(&hist(&["sweep", "--mode", "random", "--samples", "100", "--seed", "1"]));
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);

    assert_eq!(hist(&["sweep", "--n-max", "10"]).status.code(), Some(2));
}

#[test]
fn format_override_and_timing() {
    let pet = write("petersen.txt", "IheA@GUAo\n");
    assert_eq!(hist(&["check", &pet]).status.code(), Some(2));
    let out = hist(&["--format", "graph6", "--timing", "solve", &pet]);
    assert!(json(&out)["stats"]["elapsed_ms"].is_u64());
    let plain = hist(&["--format", "g6", "solve", &pet]);
    assert!(json(&plain)["stats"].get("elapsed_ms").is_none());
}
