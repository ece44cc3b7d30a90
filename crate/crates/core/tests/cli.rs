//! End-to-end runs of the `liemeta` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn liemeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liemeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = liemeta(args);
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), value)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn classify_by_name_and_file() {
    let (code, r) = json(&["classify", "--name", "Q8"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["theorem1"]["c3"], true);
    assert_eq!(r["theorem1"]["c4"], true);
    assert_eq!(r["theorem1"]["lie_metabelian"], true);
    assert!(r.get("brute").is_none() && r.get("agreement").is_none());

    let (_, r) = json(&["classify", "--name", "C2"]);
    assert_eq!(r["theorem1"]["c1"], true);

    let dir = tempfile::tempdir().unwrap();
    let s4 = write(
        dir.path(),
        "s4.group",
        r#"{"perms": {"degree": 4, "generators": [[1, 2, 3, 0], [1, 0, 2, 3]]}}"#,
    );
    let (code, r) = json(&["classify", "--file", &s4]);
    assert_eq!(code, 0);
    assert_eq!(r["group"], "s4");
    assert_eq!(r["order"], 24);
    for c in ["c1", "c2", "c3", "c4", "lie_metabelian"] {
        assert_eq!(r["theorem1"][c], false, "{c}");
    }
}

#[test]
fn brute_reports() {
    let (code, r) = json(&["brute", "--name", "D8"]);
    assert_eq!(code, 0);
    assert_eq!(r["brute"]["lie_metabelian"], true);
    assert_eq!(r["agreement"], true);
    assert_eq!(r["check_commutative"], true);
    assert_eq!(r["plus_commutative"], false);

    let (code, r) = json(&["brute", "--name", "SD16"]);
    assert_eq!(code, 0);
    assert_eq!(r["brute"]["lie_metabelian"], false);
    assert_eq!(
        r["brute"]["witness"]["generators"]
            .as_array()
            .unwrap()
            .len(),
        4
    );

    let (_, r) = json(&["brute", "--name", "C2^3"]);
    assert_eq!(r["brute"]["lie_metabelian"], true);
    assert_eq!(r["brute"]["deduped_bracket_count"], 0);
}

#[test]
fn validate_runs() {
    let (code, r) = json(&["validate", "--max-order", "16"]);
    assert_eq!(code, 0);
    assert_eq!(r["all_agree"], true);
    let groups = r["groups"].as_array().unwrap();
    assert!(groups
        .iter()
        .all(|g| g["agreement"] == true && g["agreement_theorem2"] == true));
    let orders: Vec<u64> = groups
        .iter()
        .map(|g| g["order"].as_u64().unwrap())
        .collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));

    let (code, r) = json(&["validate", "--max-order", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["groups"].as_array().unwrap().len(), 0);
}

#[test]
fn audits_are_gated() {
    let (code, r) = json(&["audit", "--name", "Q8", "--identity", "eq2"]);
    assert_eq!(code, 0);
    assert_eq!(r["audits"][0]["status"], "passed");

    let (code, r) = json(&["audit", "--name", "D8", "--identity", "eq2"]);
    assert_eq!(code, 0);
    assert_eq!(r["audits"][0]["status"], "skipped");

    let (code, r) = json(&["audit", "--name", "S3", "--identity", "expansions"]);
    assert_eq!(code, 0);
    for a in r["audits"].as_array().unwrap() {
        assert_eq!(a["status"], "passed");
        assert!(a["tuples_checked"].as_u64().unwrap() >= 27);
    }

    let (code, r) = json(&[
        "audit",
        "--name",
        "Q8xC2",
        "--identity",
        "all",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["audits"].as_array().unwrap().len(), 7);
}

#[test]
fn exit_codes_for_bad_input_and_budget() {
    assert_eq!(
        liemeta(&["classify", "--name", "Q9"]).status.code(),
        Some(2)
    );
    assert_eq!(liemeta(&["classify"]).status.code(), Some(2));
    assert_eq!(
        liemeta(&["classify", "--name", "Q8", "--file", "x"])
            .status
            .code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json").display().to_string();
    assert_eq!(
        liemeta(&["classify", "--file", &missing]).status.code(),
        Some(2)
    );

    let broken = write(dir.path(), "broken.json", r#"{"table": [[0, 1], [0, 1]]}"#);
    let out = liemeta(&["classify", "--file", &broken]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Latin"));

    let out = liemeta(&["brute", "--name", "S4", "--budget", "16"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn table_format_and_catalog_commands() {
    let out = liemeta(&["brute", "--name", "S4", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("group S4 (order 24, exponent 12)"));
    assert!(text.contains("witness"));

    let out = liemeta(&["catalog", "list", "--max-order", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for n in ["C8", "C2^3", "D8", "Q8", "S3", "C6"] {
        assert!(
            text.lines().any(|l| l.split_whitespace().next() == Some(n)),
            "{n}"
        );
    }

    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("groups");
    let out = liemeta(&[
        "catalog",
        "export",
        "--dir",
        target.to_str().unwrap(),
        "--max-order",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let q8 = target.join("Q8.group.json").display().to_string();
    let (code, r) = json(&["brute", "--file", &q8]);
    assert_eq!(code, 0);
    assert_eq!(r["group"], "Q8");
    assert_eq!(r["plus_commutative"], true);
}
