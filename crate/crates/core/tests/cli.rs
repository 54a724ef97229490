use std::process::{Command, Output};

use gpg_switch::io::{Atlas, ATLAS_FORMAT};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpg-switch")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_reports_counts() {
    let out = run(&["info", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("P(5,1)"));
    assert!(text.contains("2^6 = 64"));
    assert!(text.contains("order: 20"));
}

#[test]
fn classify_footer_counts_orbits() {
    for (n, orbits) in [(1, 6), (2, 12), (3, 27)] {
        let out = run(&["classify", "--n", &n.to_string()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).ends_with(&format!("{orbits} orbits\n")), "n = {n}");
    }
}

#[test]
fn classify_json_rows() {
    let out = run(&["classify", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0]["min_size"], 0);
    assert_eq!(rows[0]["neg_C4"], 0);
}

#[test]
fn cycles_checks_prism_counts() {
    let text = stdout(&run(&["cycles", "--n", "3", "--format", "csv"]));
    assert!(text.starts_with("length,count,expected,check\n"));
    assert!(text.contains("\n7,2,2,ok\n"));
    assert!(text.contains("\n14,7,7,ok\n"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn four_n_minus_one_at_n4() {
    let out = run(&["matchings", "--n", "4", "--size", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("up to switching isomorphism (minimal): 15"));
}

#[test]
fn matchings_aut_only_and_exclusion() {
    let plain = stdout(&run(&["matchings", "--n", "3", "--size", "3", "--aut-only"]));
    assert!(plain.contains("up to automorphism: 32"));
    assert!(!plain.contains("switching"));
    let cut = stdout(&run(&["matchings", "--n", "3", "--size", "3", "--aut-only", "--exclude-forbidden"]));
    assert!(cut.contains("up to automorphism: 26"));
    let bad = run(&["matchings", "--n", "2", "--size", "3", "--exclude-forbidden"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn minimal_lists_witnesses() {
    let out = run(&["minimal", "--n", "1", "--signature", "u0-u1,u1-u2,u2-u0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("minimal size: 2"));
    assert!(text.contains("witnesses (3 total)"));
}

#[test]
fn equivalence_verdicts() {
    let same = run(&["equivalent", "--n", "1", "--sig-a", "u0-u1,u1-u2", "--sig-b", "u1-v1"]);
    assert!(stdout(&same).starts_with("EQUIVALENT"));
    let iso = run(&["equivalent", "--n", "1", "--sig-a", "u0-u1", "--sig-b", "u1-u2", "--up-to-iso"]);
    assert!(stdout(&iso).starts_with("ISOMORPHIC"));
    let apart = run(&["equivalent", "--n", "1", "--sig-a", "u0-u1", "--sig-b", "u0-v0"]);
    assert_eq!(apart.status.code(), Some(0));
    assert!(stdout(&apart).starts_with("DISTINCT"));
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(run(&["minimal", "--n", "1", "--signature", "u0-u9"]).status.code(), Some(2));
    assert_eq!(run(&["minimal", "--n", "1", "--signature", "u0-v1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--n", "1", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify-paper", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn resource_cap_exits_four() {
    let out = run(&["conjecture", "--n", "6"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--long"));
    assert_eq!(run(&["cycles", "--n", "3", "--cycle-cap", "10"]).status.code(), Some(4));
}

#[test]
fn conjecture_within_budget() {
    let out = run(&["conjecture", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_paper_single_graph() {
    let ok = run(&["verify-paper", "--n", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS"));
    // the printed size-3 lemma count for P(5,1) is off by one
    assert_eq!(run(&["verify-paper", "--n", "2"]).status.code(), Some(3));
}

#[test]
fn atlas_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.json");
    let out = run(&["atlas", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let atlas = Atlas::read(&path).unwrap();
    assert_eq!(atlas.format_tag, ATLAS_FORMAT);
    assert_eq!((atlas.n, atlas.class_count, atlas.orbit_count), (2, 64, 12));
    assert_eq!(atlas.orbits.iter().map(|o| o.size).sum::<usize>(), 64);
    let again = atlas.to_json().unwrap();
    assert_eq!(again.as_bytes(), std::fs::read(&path).unwrap());
}
