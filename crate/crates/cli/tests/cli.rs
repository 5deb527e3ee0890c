use std::fs;
use std::path::Path;
use std::process::Command;

use antimagic::io::CertificateDocument;
use antimagic_cli::run_cli_with;
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli_with(
        std::iter::once("antimagic").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K33: &str = "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
const PETERSEN: &str = "10 15\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n";

#[test]
fn orient_then_verify_k33() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("k33.txt");
    let cert = dir.path().join("k33.json");
    fs::write(&input, K33).unwrap();
    let (code, _, err) = run(&[
        "orient",
        "--mode",
        "bipartite",
        "--input",
        path(&input),
        "--output",
        path(&cert),
    ]);
    assert_eq!(code, 0, "{err}");
    let doc = CertificateDocument::from_json(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(doc.meta.pipeline, "bipartite");
    assert_eq!(doc.meta.case.as_deref(), Some("Case1"));
    let (code, out, _) = run(&["verify", path(&cert)]);
    assert_eq!((code, out.as_str()), (0, "accept\n"));
}

#[test]
fn verify_rejects_a_duplicated_label() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("k33.txt");
    fs::write(&input, K33).unwrap();
    let (code, json, _) = run(&["orient", "--mode", "bipartite", "--input", path(&input)]);
    assert_eq!(code, 0);
    let mut doc = CertificateDocument::from_json(&json).unwrap();
    doc.arcs[1].label = doc.arcs[0].label;
    let tampered = dir.path().join("bad.json");
    fs::write(&tampered, doc.to_json()).unwrap();
    let (code, out, _) = run(&["verify", path(&tampered)]);
    assert_eq!(code, 1);
    assert!(out.starts_with("reject: duplicate-label"), "{out}");
}

#[test]
fn mindegree_refuses_petersen() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("petersen.txt");
    fs::write(&input, PETERSEN).unwrap();
    let (code, _, err) = run(&["orient", "--mode", "mindegree", "--input", path(&input)]);
    assert_eq!(code, 2);
    assert!(err.contains("33"), "{err}");
}

#[test]
fn bipartite_mode_refusals() {
    let dir = TempDir::new().unwrap();
    let p3 = dir.path().join("p3.txt");
    let triangle = dir.path().join("c3.txt");
    fs::write(&p3, "3 2\n0 1\n1 2\n").unwrap();
    fs::write(&triangle, "3 3\n0 1\n1 2\n2 0\n").unwrap();
    for input in [&p3, &triangle] {
        let (code, _, _) = run(&["orient", "--mode", "bipartite", "--input", path(input)]);
        assert_eq!(code, 2);
    }
}

#[test]
fn malformed_inputs_exit_3() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 2\n0 1\n").unwrap();
    assert_eq!(
        run(&["orient", "--mode", "bipartite", "--input", path(&bad)]).0,
        3
    );
    assert_eq!(run(&["verify", path(&bad)]).0, 3);
    assert_eq!(run(&["verify", path(&dir.path().join("missing.json"))]).0, 3);
    assert_eq!(run(&["orient", "--mode", "sideways", "--input", path(&bad)]).0, 3);
    assert_eq!(run(&["frobnicate"]).0, 3);
    assert_eq!(run(&["gen", "--family", "complete"]).0, 3);
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("orient"));
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn gen_writes_parseable_edge_lists() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g.txt");
    let (code, _, err) = run(&[
        "gen",
        "--family",
        "random-bipartite",
        "--nx",
        "20",
        "--ny",
        "30",
        "--dmax",
        "5",
        "--seed",
        "7",
        "--out",
        path(&out),
    ]);
    assert_eq!(code, 0, "{err}");
    let g = antimagic::io::parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 50);
    let (code, again, _) = run(&[
        "gen",
        "--family",
        "random-bipartite",
        "--nx",
        "20",
        "--ny",
        "30",
        "--dmax",
        "5",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(again, fs::read_to_string(&out).unwrap());
    let (code, k4, _) = run(&["gen", "--family", "complete", "--n", "4"]);
    assert_eq!((code, k4.lines().next()), (0, Some("4 6")));
}

#[test]
fn gen_precondition_exit_2() {
    assert_eq!(
        run(&["gen", "--family", "near-regular", "--n", "10", "--d", "12"]).0,
        2
    );
}

#[test]
fn oracle_reports_status() {
    let dir = TempDir::new().unwrap();
    let star = dir.path().join("star.txt");
    let sparse = dir.path().join("sparse.txt");
    fs::write(&star, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    fs::write(&sparse, "4 1\n0 1\n").unwrap();
    let (code, out, _) = run(&["oracle", "--input", path(&star)]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["status"], "exists");
    assert!(report["witness"]["arcs"].is_array());
    let (code, out, _) = run(&["oracle", "--input", path(&sparse)]);
    assert_eq!(code, 1);
    assert!(out.contains("not-exists"));
}

#[test]
fn binary_exit_codes_and_seed_env() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("k35.txt");
    let k35 = antimagic::generate::complete(35);
    fs::write(&input, antimagic::io::write_edge_list(&k35)).unwrap();
    let bin = env!("CARGO_BIN_EXE_antimagic");
    let orient = |env_seed: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(["orient", "--mode", "mindegree", "--input", path(&input)]);
        cmd.env_remove("ANTIMAGIC_SEED");
        if let Some(s) = env_seed {
            cmd.env("ANTIMAGIC_SEED", s);
        }
        cmd.output().unwrap()
    };
    let by_env = orient(Some("5"));
    assert_eq!(by_env.status.code(), Some(0));
    let doc = CertificateDocument::from_json(std::str::from_utf8(&by_env.stdout).unwrap()).unwrap();
    assert_eq!(doc.meta.seed, Some(5));
    let by_flag = Command::new(bin)
        .args([
            "orient",
            "--mode",
            "mindegree",
            "--input",
            path(&input),
            "--seed",
            "5",
        ])
        .env_remove("ANTIMAGIC_SEED")
        .output()
        .unwrap();
    assert_eq!(by_flag.stdout, by_env.stdout);
    assert_eq!(orient(Some("not-a-number")).status.code(), Some(3));
    assert_eq!(orient(None).status.code(), Some(0));
}
