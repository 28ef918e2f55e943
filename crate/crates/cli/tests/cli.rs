use std::path::PathBuf;
use std::process::{Command, Output};

use coronae::format::parse_graph6;
use serde_json::Value;

fn coronae(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coronae")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("coronae-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn build_then_spectrum() {
    let dir = scratch("build");
    let out = dir.join("out.g6");
    let path = out.to_str().unwrap();
    let res = coronae(&["build", "corona", "--g1", "cycle:4", "--g2", "path:3", "-o", path]);
    assert!(res.status.success());
    let g = parse_graph6(std::fs::read_to_string(&out).unwrap().trim().as_bytes()).unwrap();
    assert_eq!((g.n(), g.m()), (16, 24));

    let v = json(&coronae(&["spectrum", "--graph", path, "--alpha", "0.5", "--emit", "json"]));
    assert_eq!(v["n"], 16);
    let eig = v["eigenvalues"].as_array().unwrap();
    assert_eq!(eig.iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum::<u64>(), 16);
    assert!(v["trace_check"].as_f64().unwrap() < 1e-9);
    let raw = String::from_utf8(coronae(&["spectrum", "--graph", path, "--alpha", "0.5"]).stdout).unwrap();
    assert!(raw.contains("\"alpha\": 5.0000000000000000e-1"));
}

#[test]
fn formula_agrees_with_direct() {
    let dir = scratch("formula");
    let cases = [
        ("corona", "cycle:4", "path:3"),
        ("edge-corona", "cycle:4", "complete:2"),
        ("r-graph", "petersen", "complete:1"),
        ("r-vertex", "complete:3", "path:3"),
        ("r-edge", "cycle:5", "complete_bipartite:1,2"),
    ];
    for (op, g1, g2) in cases {
        let file = dir.join(format!("{op}.g6"));
        let path = file.to_str().unwrap();
        assert!(coronae(&["build", op, "--g1", g1, "--g2", g2, "-o", path]).status.success());
        for alpha in ["0", "0.3", "0.5", "1"] {
            let direct = json(&coronae(&["spectrum", "--graph", path, "--alpha", alpha]));
            let formula = json(&coronae(&[
                "spectrum", "--method", "formula", "--op", op, "--g1", g1, "--g2", g2, "--alpha", alpha,
            ]));
            let flat = |v: &Value| -> Vec<f64> {
                v["eigenvalues"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .flat_map(|e| std::iter::repeat(e["value"].as_f64().unwrap()).take(e["multiplicity"].as_u64().unwrap() as usize))
                    .collect()
            };
            let (a, b) = (flat(&direct), flat(&formula));
            assert_eq!(a.len(), b.len(), "{op} at {alpha}");
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-7, "{op} at {alpha}: {x} vs {y}");
            }
        }
    }
}

#[test]
fn alpha_grid_is_ascending() {
    let v = json(&coronae(&["spectrum", "--graph", "complete:3", "--alpha", "0:1:0.25"]));
    let alphas: Vec<f64> = v.as_array().unwrap().iter().map(|r| r["alpha"].as_f64().unwrap()).collect();
    assert_eq!(alphas, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    let csv = String::from_utf8(coronae(&["spectrum", "--graph", "complete:3", "--alpha", "0:0.5:0.5", "--emit", "csv"]).stdout).unwrap();
    assert_eq!(csv.lines().next(), Some("alpha,value,multiplicity"));
    assert_eq!(csv.lines().count(), 5);
}

#[test]
fn isospectral_exit_codes() {
    let ok = coronae(&["isospectral", "--g1", "shrikhande", "--g2", "rook44", "--all-alpha"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["verdict"], true);
    let at0 = coronae(&["isospectral", "--g1", "complete_bipartite:1,4", "--g2", "complete_bipartite:1,4", "--alpha", "0"]);
    assert_eq!(at0.status.code(), Some(0));
    let no = coronae(&["isospectral", "--g1", "cycle:6", "--g2", "path:6"]);
    assert_eq!(no.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&no.stdout).unwrap();
    assert_eq!(v["verdict"], false);
    assert!(v["witness_alpha"].is_number());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["spectrum", "--graph", "cycle:3", "--alpha", "1.5"],
        vec!["spectrum", "--graph", "nosuchgraph", "--alpha", "0.5"],
        vec!["build", "join", "--g1", "cycle:3", "-o", "x.g6"],
        vec!["coronal", "--graph", "complete:1", "--alpha", "0", "--at", "0"],
        vec!["isospectral", "--g1", "cycle:3"],
        vec!["build", "corona", "--g1", "cycle:3", "--g2", "path:2", "-o", "/nonexistent/dir/x.g6"],
    ] {
        let out = coronae(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(coronae(&["spectrum", "--graph", "nosuchgraph", "--alpha", "0.5"]).stderr).unwrap();
    assert!(err.contains("--graph"));
}

#[test]
fn coronal_and_charpoly() {
    let v = json(&coronae(&["coronal", "--graph", "complete_bipartite:1,2", "--alpha", "0", "--at", "3"]));
    assert!((v["value"].as_f64().unwrap() - 13.0 / 7.0).abs() < 1e-14);
    assert_eq!(v["reduced_denominator"].as_array().unwrap().len(), 3);
    let v = json(&coronae(&["charpoly", "--graph", "complete:2", "--alpha", "0"]));
    let c: Vec<f64> = v["coefficients"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(c, vec![-1.0, 0.0, 1.0]);
}

#[test]
fn family_writes_pairs_and_manifest() {
    let dir = scratch("family");
    let out = coronae(&[
        "family", "--g1", "shrikhande", "--g2", "rook44", "--partner", "complete:1", "--op", "corona", "--side", "left",
        "--depth", "2", "-o", dir.to_str().unwrap(),
    ]);
    let v = json(&out);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 2);
    assert_eq!(v["pairs"][0]["verified_all_alpha"], true);
    assert!(v["pairs"][1]["nonisomorphism"].is_string());
    assert!(dir.join("depth2_b.g6").exists());
    assert!(dir.join("family.json").exists());
    let bad = coronae(&[
        "family", "--g1", "cycle:4", "--g2", "cycle:4", "--partner", "complete:1", "--op", "corona", "--side", "left",
        "-o", dir.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn named_list_and_errata() {
    let names = String::from_utf8(coronae(&["named", "--list"]).stdout).unwrap();
    assert!(names.lines().any(|l| l.starts_with("shrikhande")));
    let md = String::from_utf8(coronae(&["errata"]).stdout).unwrap();
    assert!(md.starts_with("# Discrepancies"));
    assert!(md.contains("## `corona-regular-copy-shift`"));
}
