//! The `hedet` binary: exit statuses, environment overrides, the ledger,
//! and agreement between text and JSON output.

use std::path::Path;
use std::process::{Command, Output};

use hedet::encode::family;
use hedet::poly::parse_generators;
use serde_json::Value;

fn hedet(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hedet"))
        .current_dir(dir)
        .env_remove("HEDET_LEDGER")
        .env_remove("HEDET_TIMEOUT")
        .env_remove("HEDET_THREADS")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn schema() -> Value {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Checks the parts of the published schema that matter to consumers.
fn conforms(report: &Value) {
    let s = schema();
    for key in s["required"].as_array().unwrap() {
        assert!(report.get(key.as_str().unwrap()).is_some(), "missing {key} in {report}");
    }
    assert_eq!(report["schema"], 1);
    let rec = &s["$defs"]["record"];
    for r in report["records"].as_array().into_iter().flatten() {
        for key in rec["required"].as_array().unwrap() {
            assert!(r.get(key.as_str().unwrap()).is_some(), "record lacks {key}: {r}");
        }
        assert!(rec["properties"]["verdict"]["enum"]
            .as_array()
            .unwrap()
            .contains(&r["verdict"]));
        assert!(rec["properties"]["task"]["enum"]
            .as_array()
            .unwrap()
            .contains(&r["task"]));
        assert_eq!(r["verdict"] == "aborted", r.get("cap").is_some());
    }
}

#[test]
fn thm44_text_json_and_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let text = hedet(dir.path(), &["thm44", "3", "3", "3"]);
    assert_eq!(text.status.code(), Some(0));
    assert_eq!(stdout(&text).lines().next(), Some("True"));
    let j = hedet(
        dir.path(),
        &["--format", "json", "thm44", "--k", "3", "--n", "3", "--nprime", "3"],
    );
    let v = json(&j);
    conforms(&v);
    assert_eq!(v["records"][0]["verdict"], "true");

    // default ledger in the working directory, two appends
    let ledger = std::fs::read_to_string(dir.path().join("hedet-ledger.jsonl")).unwrap();
    let lines: Vec<Value> = ledger.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["params"], lines[1]["params"]);
    assert_eq!(lines[0]["verdict"], lines[1]["verdict"]);
}

#[test]
fn ledger_env_override_and_no_ledger() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("custom.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_hedet"))
        .current_dir(dir.path())
        .env("HEDET_LEDGER", &path)
        .args(["pair", "C5", "C5", "--k", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 1);
    assert!(!dir.path().join("hedet-ledger.jsonl").exists());

    let out = hedet(dir.path(), &["--no-ledger", "pair", "C5", "C5", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!dir.path().join("hedet-ledger.jsonl").exists());
}

#[test]
fn exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        hedet(d, &["--no-ledger", "thm44", "--k", "2", "--n", "3", "--nprime", "3"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        hedet(d, &["--no-ledger", "pair", "C5", "Q9", "--k", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(hedet(d, &["--no-ledger", "suite", "nope"]).status.code(), Some(3));
    assert_eq!(
        hedet(d, &["--no-ledger", "encode", "--family", "Zz", "--k", "3", "--n", "2"])
            .status
            .code(),
        Some(3)
    );
    let aborted = hedet(
        d,
        &[
            "--no-ledger",
            "--max-terms",
            "10",
            "--format",
            "json",
            "pair",
            "C5",
            "C5",
            "--k",
            "3",
        ],
    );
    assert_eq!(aborted.status.code(), Some(2));
    let v = json(&aborted);
    conforms(&v);
    assert_eq!(v["records"][0]["cap"]["cap"], "terms");
}

#[test]
fn timeout_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hedet"))
        .current_dir(dir.path())
        .env("HEDET_TIMEOUT", "0")
        .args(["--no-ledger", "thm44", "3", "3", "3"])
        .output()
        .unwrap();
    // caps must be positive
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pair_examples() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let t = hedet(
        d,
        &["--no-ledger", "pair", "--graph-g", "H0", "--graph-h", "H0", "--k", "4"],
    );
    assert_eq!(stdout(&t).lines().next(), Some("True"));
    let f = hedet(
        d,
        &["--no-ledger", "pair", "--graph-g", "K3", "--graph-h", "K3", "--k", "4"],
    );
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(stdout(&f).lines().next(), Some("False"));
}

#[test]
fn graph_arguments_accepted_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("c5.txt"), "5\n1 2\n2 3\n3 4\n4 5\n5 1\n").unwrap();
    std::fs::write(d.join("c5.g6"), ">>graph6<<Dhc\n").unwrap();
    for arg in ["C5", "c5.txt", "c5.g6", "g6:Dhc", "5; 1 2; 2 3; 3 4; 4 5; 5 1"] {
        let g6 = hedet(d, &["graph", "--op", "g6", "--graph", arg]);
        assert_eq!(stdout(&g6), "Dhc\n", "{arg}");
        let chrom = hedet(d, &["graph", "--op", "chrom", "--graph", arg]);
        assert_eq!(stdout(&chrom), "3\n");
        let pair = hedet(d, &["--no-ledger", "pair", arg, arg, "--k", "3"]);
        assert_eq!(stdout(&pair).lines().next(), Some("True"), "{arg}");
    }
}

#[test]
fn graph_ops() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        stdout(&hedet(d, &["graph", "--op", "chrom", "--graph", "Hstar"])),
        "5\n"
    );
    let v = json(&hedet(
        d,
        &["--format", "json", "graph", "--op", "critical", "--graph", "K1+C5"],
    ));
    conforms(&v);
    assert_eq!(v["result"]["k"], 4);
    assert_eq!(v["result"]["critical"], true);
    let t = hedet(d, &["graph", "--op", "tensor", "--graph", "K2", "--graph-h", "K2"]);
    // K2 × K2 is a perfect matching on four vertices
    assert_eq!(stdout(&t), "CK\n");
}

#[test]
fn encode_round_trips_through_the_parser() {
    let dir = tempfile::tempdir().unwrap();
    let out = hedet(
        dir.path(),
        &["encode", "--family", "Jcal", "--k", "3", "--n", "3", "--nprime", "2"],
    );
    assert_eq!(out.status.code(), Some(0));
    let parsed = parse_generators(&stdout(&out)).unwrap();
    assert_eq!(parsed, family("Jcal", 3, 3, 2).unwrap().generators());

    let j = json(&hedet(
        dir.path(),
        &[
            "--format", "json", "encode", "--family", "J", "--k", "3", "--n", "2", "--nprime", "2",
        ],
    ));
    conforms(&j);
    assert_eq!(j["generators"].as_array().unwrap().len(), 1);
}

#[test]
fn gb_from_file() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("circle.txt"),
        "# circle meets diagonal\nx_1^2 + x_2^2 - 1\nx_1 - x_2\n",
    )
    .unwrap();
    let out = hedet(dir.path(), &["gb", "circle.txt", "--order", "lex"]);
    assert_eq!(out.status.code(), Some(0));
    let body: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(String::from)
        .collect();
    assert_eq!(body, ["x_2^2 - 1/2", "x_1 - x_2"]);
    let v = json(&hedet(
        dir.path(),
        &["--format", "json", "gb", "circle.txt", "--order", "lex"],
    ));
    conforms(&v);
    assert_eq!(v["basis"], serde_json::json!(body));
}

#[test]
fn verify_targets() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a4 = hedet(d, &["--no-ledger", "verify", "--target", "a4"]);
    assert_eq!(stdout(&a4).lines().next(), Some("7 classes; H0 identified"));
    let v = json(&hedet(
        d,
        &["--no-ledger", "--format", "json", "verify", "--target", "prop43"],
    ));
    conforms(&v);
    assert_eq!(v["records"].as_array().unwrap().len(), 9);
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["verdict"] == "true"));
    let sc = json(&hedet(
        d,
        &[
            "--no-ledger",
            "--format",
            "json",
            "verify",
            "--target",
            "small-critical",
            "--k",
            "3",
        ],
    ));
    assert_eq!(sc["records"][0]["verdict"], "true");
}

#[test]
fn suite_appends_without_overwriting() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for _ in 0..2 {
        let out = hedet(d, &["--threads", "2", "suite", "--name", "cycles-desk"]);
        assert_eq!(out.status.code(), Some(0));
    }
    let ledger = std::fs::read_to_string(d.join("hedet-ledger.jsonl")).unwrap();
    let recs: Vec<Value> = ledger.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 6);
    // records land in completion order, so compare each run as a set
    let key = |r: &Value| format!("{} {}", r["params"], r["verdict"]);
    let mut first: Vec<String> = recs[..3].iter().map(key).collect();
    let mut second: Vec<String> = recs[3..].iter().map(key).collect();
    first.sort();
    second.sort();
    assert_eq!(first, second);
}
