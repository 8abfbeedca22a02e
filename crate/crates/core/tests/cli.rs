use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use spgraph::SpGraph;

const C5_SPG: &str = r#"{"geodesics":[],"edges":[{"u":0,"w":1,"index":1},{"u":1,"w":2,"index":1},{"u":2,"w":3,"index":1},{"u":3,"w":4,"index":1},{"u":0,"w":4,"index":1}]}"#;

fn spgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spgraph")).args(args).env_remove("SPG_LIMIT").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

/// 4-cycle a-x-b-y: two geodesics differing at index 1.
const SQUARE: &str = "a x\nx b\na y\ny b\n";

#[test]
fn compute_reports_counts_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "sq.txt", SQUARE);
    let json = dir.path().join("s.json");
    let dot = dir.path().join("s.dot");
    let o = spgraph(&["compute", "--in", &g, "--a", "a", "--b", "b", "--out", json.to_str().unwrap(), "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "distance 2\ngeodesics 2\nedges 1\n");
    let h = SpGraph::from_json(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count()), (2, 1));
    assert!(fs::read_to_string(&dot).unwrap().contains("graph"));
    let e = String::from_utf8(o.stderr).unwrap();
    assert!(e.starts_with("seed=0 limit="), "{e}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify", "all", "--corpus", "exhaustive:4", "--corpus", "random:20:6:9"];
    let first = spgraph(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, spgraph(&args).stdout);
    assert!(stdout(&first).contains("failures 0"));
}

#[test]
fn limit_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "sq.txt", SQUARE);
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_spgraph"));
        c.args(["compute", "--in", &g, "--a", "a", "--b", "b"]).args(extra).env_remove("SPG_LIMIT");
        if let Some(v) = env {
            c.env("SPG_LIMIT", v);
        }
        c.output().unwrap()
    };
    let o = run(Some("1"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error:"));
    assert_eq!(run(Some("1"), &["--limit", "5"]).status.code(), Some(0));
    assert_eq!(run(None, &[]).status.code(), Some(0));
}

#[test]
fn malformed_inputs_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let looped = write(dir.path(), "loop.txt", "a a\na b\n");
    let sq = write(dir.path(), "sq.txt", SQUARE);
    let apart = write(dir.path(), "apart.txt", "a x\nb y\n");
    for args in [
        vec!["compute", "--in", &looped, "--a", "a", "--b", "b"],
        vec!["compute", "--in", &sq, "--a", "a", "--b", "a"],
        vec!["compute", "--in", &sq, "--a", "a", "--b", "nowhere"],
        vec!["compute", "--in", "/nonexistent/graph.txt", "--a", "a", "--b", "b"],
        vec!["grid", "phi", "--dims", "2,2", "--seq", "1112"],
    ] {
        let o = spgraph(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error: "), "{args:?}");
    }
    assert_ne!(spgraph(&["no-such-command"]).status.code(), Some(0));
    // disconnected endpoints give the empty shortest path graph
    let o = spgraph(&["compute", "--in", &apart, "--a", "a", "--b", "b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "distance none\ngeodesics 0\nedges 0\n");
}

#[test]
fn verify_on_a_hand_built_c5_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "c5.json", C5_SPG);
    let o = spgraph(&["verify", "noc5", "--spg", &p]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"vertices\""), "{}", stdout(&o));
}

#[test]
fn grid_subcommands_agree_with_each_other() {
    let o = spgraph(&["grid", "phi", "--dims", "3,3,2", "--seq", "32121231"]);
    assert_eq!(stdout(&o), "(3,2,1,3,1,3,0)\n");
    let o = spgraph(&["grid", "inverse", "--dims", "3,3,2", "--point", "3,2,1,3,1,3,0"]);
    assert_eq!(stdout(&o), "32121231\n");
    let o = spgraph(&["grid", "enumerate", "--dims", "2,2,1"]);
    assert_eq!(stdout(&o).lines().count(), 30);
    assert_eq!(spgraph(&["grid", "check", "--dims", "2,1,1"]).status.code(), Some(0));
    assert_eq!(spgraph(&["grid", "staircase", "3", "2", "--check"]).status.code(), Some(0));
}

#[test]
fn constructions_and_cayley_check_out() {
    for family in [&["path", "3"][..], &["complete", "4"], &["cycle", "8"], &["oddhost", "3"], &["hypercube", "3"], &["parallel", "3", "3"]] {
        let mut args = vec!["construct"];
        args.extend_from_slice(family);
        args.push("--check");
        let o = spgraph(&args);
        assert_eq!(o.status.code(), Some(0), "{family:?}: {}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("construction: pass"), "{family:?}");
    }
    let o = spgraph(&["cayley", "4", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("vertices 24\nedges 36\n"));
}

#[test]
fn export_converts_between_formats() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "sq.txt", SQUARE);
    let o = spgraph(&["export", "--in", &g, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let back = write(dir.path(), "sq.json", &stdout(&o));
    let o = spgraph(&["export", "--in", &back, "--format", "edge-list"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(' ')).count(), 4);
    let o = spgraph(&["export", "--in", &g, "--a", "a", "--b", "b", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
}
