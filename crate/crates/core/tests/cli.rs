use std::fs;
use std::process::{Command, Output};

fn partgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read(path: &std::path::Path) -> String {
    fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn compute_writes_per_n_artifacts_and_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let run = || partgraph(&["compute", "--n-max", "7", "--out", out, "--jobs", "2"]);
    assert!(run().status.success());

    for n in 1..=7 {
        assert!(dir.path().join(format!("n{n:02}/profile.csv")).exists());
    }
    let summary = read(&dir.path().join("summary.csv"));
    assert!(summary.lines().any(|l| l == "7,15,3,4"), "{summary}");
    assert_eq!(read(&dir.path().join("n01/profile.csv")), "partition,tau\n1,0\n");
    assert!(dir.path().join("n07/zones_r3.json").exists());
    let zones: serde_json::Value = serde_json::from_str(&read(&dir.path().join("n07/zones_r3.json"))).unwrap();
    assert_eq!(zones["core"].as_array().unwrap().len(), 4);

    let before = read(&dir.path().join("n07/profile.json"));
    assert!(run().status.success());
    assert_eq!(read(&dir.path().join("n07/profile.json")), before);
}

#[test]
fn tables_for_short_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert!(partgraph(&["tables", "--n-max", "6", "--out", out]).status.success());
    assert_eq!(read(&dir.path().join("first_occurrences.csv")), "r,n_r\n2,4\n");

    assert!(partgraph(&["tables", "--n-max", "3", "--out", out]).status.success());
    let empty = read(&dir.path().join("first_occurrences.csv"));
    assert!(empty.starts_with("r,n_r\n#"), "{empty}");
    assert_eq!(empty.lines().count(), 2);
}

#[test]
fn tables_reuse_stored_profiles_or_refuse() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let missing = partgraph(&["tables", "--n-max", "5", "--out", out, "--no-compute"]);
    assert_eq!(missing.status.code(), Some(1));

    assert!(partgraph(&["compute", "--n-max", "5", "--out", out]).status.success());
    let reused = partgraph(&["tables", "--n-max", "5", "--out", out, "--no-compute"]);
    assert!(reused.status.success());
    assert_eq!(String::from_utf8_lossy(&reused.stdout), "r,n_r\n2,4\n");
}

#[test]
fn atlas_file_naming() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    assert!(partgraph(&["atlas", "--n", "4", "--mode", "thickness", "--out", out]).status.success());
    assert!(partgraph(&["atlas", "--n", "7", "--mode", "zones", "--out", out]).status.success());
    let svg = read(&dir.path().join("atlas_n7_zones.svg"));
    assert!(svg.starts_with("<?xml"));
    assert!(dir.path().join("atlas_n4_thickness.svg").exists());

    assert_eq!(partgraph(&["atlas", "--n", "4", "--mode", "heat", "--out", out]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(partgraph(&["compute", "--n-max", "31"]).status.code(), Some(2));
    assert_eq!(partgraph(&["compute", "--n-min", "5", "--n-max", "4"]).status.code(), Some(2));
    assert_eq!(partgraph(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(partgraph(&["graph-dump", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn beyond_range_needs_the_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let run = partgraph(&[
        "compute", "--n-min", "31", "--n-max", "31", "--out", out, "--allow-beyond-verified-range",
    ]);
    assert!(run.status.success());
    assert!(String::from_utf8_lossy(&run.stderr).contains("warning"));
    assert!(read(&dir.path().join("n31/profile.json")).contains("\"note\""));
}

#[test]
fn graph_dump() {
    let out = partgraph(&["graph-dump", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "4\t3,1\n3,1\t2,2\n3,1\t2,1,1\n2,2\t2,1,1\n2,1,1\t1,1,1,1\n"
    );
}

#[test]
fn verify_small_range() {
    let out = partgraph(&["verify", "--n-max", "12"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS  branch-and-bound agrees with exhaustive clique search"));
    assert!(!text.contains("FAIL"));
}
