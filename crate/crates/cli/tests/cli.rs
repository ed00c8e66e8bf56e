//! End-to-end behaviour of the `flowcensus` binary.

use std::path::Path;
use std::process::{Command, Output};

use flowcensus_core::catalog::{Catalog, CatalogEntry};
use flowcensus_core::SeparatrixDiagram;

fn flowcensus(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flowcensus"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

const G2_2: &str = "E:2;s:0,2,1,3;a:1,0,3,2;m:-";

#[test]
fn maps_writes_the_default_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = flowcensus(&["maps", "--edges", "3"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("14 entries"));
    assert!(stdout.contains("degree sequence"));
    let cat =
        Catalog::from_json(&std::fs::read_to_string(dir.path().join("maps-e3.json")).unwrap())
            .unwrap();
    assert_eq!(cat.entries.len(), 14);
    let codes: Vec<_> = cat.entries.iter().map(|e| e.code.clone()).collect();
    let mut sorted = codes.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(codes, sorted);
}

#[test]
fn catalogs_round_trip_through_json() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["maps", "--edges", "1", "--out", "a.json"],
        vec![
            "bifurcations",
            "--kind",
            "saddle-node",
            "--saddles",
            "2",
            "--out",
            "a.json",
        ],
        vec![
            "bifurcations",
            "--kind",
            "saddle-connection",
            "--saddles",
            "3",
            "--out",
            "a.json",
        ],
    ] {
        assert!(flowcensus(&args, dir.path()).status.success());
        let text = std::fs::read_to_string(dir.path().join("a.json")).unwrap();
        let cat = Catalog::from_json(&text).unwrap();
        assert_eq!(cat.to_json(), text);
        for e in &cat.entries {
            let entry_text = serde_json::to_string(e).unwrap();
            let back: CatalogEntry = serde_json::from_str(&entry_text).unwrap();
            assert_eq!(&back, e);
        }
    }
}

#[test]
fn single_loop_json_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = flowcensus(
        &["export", "E:1;s:1,0;a:1,0;m:-", "--format", "json"],
        dir.path(),
    );
    assert!(out.status.success());
    let entries: Vec<CatalogEntry> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0].label.as_deref(), Some("G^1_2"));
    assert_eq!(
        serde_json::to_string_pretty(&entries).unwrap() + "\n",
        String::from_utf8(out.stdout).unwrap()
    );
}

#[test]
fn dot_of_two_edge_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = flowcensus(&["export", G2_2, "--format", "dot"], dir.path());
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph "));
    let nodes = dot
        .lines()
        .map(str::trim)
        .filter(|l| l.starts_with('v') && !l.contains("--"))
        .count();
    assert_eq!(nodes, 3);
    assert_eq!(dot.matches(" -- ").count(), 2);
}

#[test]
fn dot_carries_the_mark() {
    let dir = tempfile::tempdir().unwrap();
    let out = flowcensus(
        &[
            "export",
            "E:2;s:0,2,1,3;a:1,0,3,2;m:source,1",
            "--format",
            "dot",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("mark=\"source:"));
}

#[test]
fn diagram_of_segment_with_source_mark() {
    let dir = tempfile::tempdir().unwrap();
    let out = flowcensus(
        &[
            "export",
            "E:1;s:0,1;a:1,0;m:source,0",
            "--format",
            "diagram-json",
            "--out",
            "d.json",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let diagrams: Vec<SeparatrixDiagram> =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("d.json")).unwrap()).unwrap();
    assert_eq!(diagrams.len(), 1);
    assert_eq!(diagrams[0].points.len(), 3);
}

#[test]
fn export_selects_from_a_catalog() {
    let dir = tempfile::tempdir().unwrap();
    assert!(flowcensus(&["maps", "--edges", "2"], dir.path())
        .status
        .success());
    let out = flowcensus(
        &["export", "maps-e2.json", "--code", G2_2, "--format", "json"],
        dir.path(),
    );
    assert!(out.status.success());
    let entries: Vec<CatalogEntry> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(entries[0].code.to_string(), G2_2);
    let missing = flowcensus(
        &["export", "maps-e2.json", "--code", "E:1;s:0,1;a:1,0;m:-"],
        dir.path(),
    );
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| flowcensus(args, dir.path()).status.code();
    assert_eq!(code(&["maps", "--edges", "0"]), Some(2));
    assert_eq!(code(&["maps", "--edges", "6"]), Some(2));
    assert_eq!(
        code(&["bifurcations", "--kind", "saddle-node", "--saddles", "5"]),
        Some(2)
    );
    assert_eq!(
        code(&[
            "bifurcations",
            "--kind",
            "saddle-connection",
            "--saddles",
            "1"
        ]),
        Some(2)
    );
    assert_eq!(
        code(&["bifurcations", "--kind", "cusp", "--saddles", "2"]),
        Some(2)
    );
    assert_eq!(code(&["export", G2_2, "--format", "svg"]), Some(2));
    assert_eq!(code(&["export", "not-a-code"]), Some(2));
    assert_eq!(code(&["export", G2_2, "--format", "diagram-json"]), Some(2));
    assert_eq!(
        code(&["maps", "--edges", "1", "--out", "missing-dir/x.json"]),
        Some(1)
    );
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["maps", "--edges", "1"]), Some(0));
}

#[test]
fn reflections_flag_changes_the_relation() {
    let dir = tempfile::tempdir().unwrap();
    let out = flowcensus(
        &[
            "maps",
            "--edges",
            "4",
            "--no-reflections",
            "--out",
            "o.json",
        ],
        dir.path(),
    );
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("57 entries"));
    let out = flowcensus(&["maps", "--edges", "4", "--out", "u.json"], dir.path());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("52 entries"));
}

#[test]
fn thread_count_does_not_change_files() {
    let dir = tempfile::tempdir().unwrap();
    for n in ["4", "5"] {
        let a = flowcensus(
            &["maps", "--edges", n, "--jobs", "1", "--out", "a.json"],
            dir.path(),
        );
        let b = flowcensus(
            &["maps", "--edges", n, "--jobs", "4", "--out", "b.json"],
            dir.path(),
        );
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(
            std::fs::read(dir.path().join("a.json")).unwrap(),
            std::fs::read(dir.path().join("b.json")).unwrap()
        );
    }
}
