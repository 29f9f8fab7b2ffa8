use std::process::{Command, Output};

use idealgraph::export::ExportedGraph;
use idealgraph::harness::{FigureDocument, SweepLine};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_both_modes_agree_on_case_7() {
    let o = run(&["classify", "--m", "36", "--n", "6", "--mode", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("planar=true(case 7), outerplanar=true(case 7), ring=true(case 7)"),
        "{text}"
    );
    assert!(text.contains("agreement=ok"));
}

#[test]
fn classify_prints_k5_witness() {
    let o = run(&["classify", "--m", "128", "--n", "64"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("planar=false"));
    assert!(text.contains("K5 witness {2,4,8,16,32}"), "{text}");
}

#[test]
fn classify_json_is_parseable() {
    for mode in ["structural", "closed-form", "both"] {
        let o = run(&["classify", "--m", "48", "--n", "6", "--mode", mode, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["m"], 48);
        assert_eq!(v.get("structural").is_some(), mode != "closed-form");
        assert_eq!(v.get("closed_form").is_some(), mode != "structural");
    }
}

#[test]
fn input_errors_exit_with_2() {
    for args in [
        &["classify", "--m", "12", "--n", "5"][..],
        &["classify", "--m", "1", "--n", "1"],
        &["classify", "--m", "x", "--n", "2"],
        &["graph", "--m", "12", "--n", "6", "--format", "svg"],
        &["sweep", "--max-m", "1"],
        &["figures", "--p1", "2", "--p2", "2", "--p3", "5"],
        &["figures", "--p1", "4", "--p2", "3", "--p3", "5"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = run(&["classify", "--m", "12", "--n", "5"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not divide"));
}

#[test]
fn graph_exports() {
    let o = run(&["graph", "--m", "18", "--n", "18", "--format", "edgelist"]);
    assert_eq!(stdout(&o), "2 3\n2 6\n3 6\n3 9\n");

    let o = run(&["graph", "--m", "7", "--n", "7", "--format", "json"]);
    let g = ExportedGraph::from_json(&stdout(&o)).unwrap();
    assert!(g.vertices.is_empty());

    let o = run(&["graph", "--m", "30", "--n", "30", "--format", "dot"]);
    let dot = stdout(&o);
    assert_eq!(dot.matches(" [label=").count(), 6);
    assert_eq!(dot.matches(" -- ").count(), 9);
}

#[test]
fn graph_writes_file_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = run(&[
            "graph",
            "--m",
            "360",
            "--n",
            "60",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let g = ExportedGraph::from_json(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!((g.m, g.n), (360, 60));
}

#[test]
fn small_sweep_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let o = run(&["sweep", "--max-m", "60", "--jobs", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mismatches=0"));
    let text = std::fs::read_to_string(out).unwrap();
    let lines: Vec<SweepLine> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let SweepLine::Summary(summary) = lines.last().unwrap() else {
        panic!("last line is the summary")
    };
    assert_eq!(summary.pairs_checked, lines.len() - 1);
    assert!(summary.passed());
}

#[test]
fn figures_written() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "figures",
        "--p1",
        "2",
        "--p2",
        "3",
        "--p3",
        "5",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let golden = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden");
    for k in 1..=5 {
        let name = format!("figure{k}.json");
        let written = std::fs::read_to_string(dir.path().join(&name)).unwrap();
        assert_eq!(written, std::fs::read_to_string(golden.join(&name)).unwrap(), "{name}");
        let doc: FigureDocument = serde_json::from_str(&written).unwrap();
        if k == 5 {
            assert_eq!(doc.graph.edges.len(), 3);
        }
    }
}

#[test]
fn oracle_table() {
    let o = run(&["oracle", "--m", "36", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("2\t9\tfalse\tfalse\tyes"));
    assert!(text.ends_with("pairs=21 adjacent=2 disagreements=0\n"));
}
