//! End-to-end runs of the `epg` binary: outputs and the exit-code matrix.

use std::fmt::Write as _;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn epg(args: &[&str]) -> Output {
    epg_env(args, &[])
}

fn epg_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_epg"));
    cmd.args(args).env_remove("EPG_MAX_ORDER");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", stderr(o));
    serde_json::from_str(stdout(o).trim()).expect("valid JSON")
}

fn write_table(dir: &Path, name: &str, rows: &[Vec<u32>]) -> String {
    let mut text = format!("# test table\n{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        writeln!(text, "{}", cells.join(" ")).unwrap();
    }
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

/// A Latin square with identity 0 that is not associative, found by
/// backtracking over loops of order `n`.
fn non_associative_loop(n: usize) -> Vec<Vec<u32>> {
    fn associative(t: &[u32], n: usize) -> bool {
        let m = |a: u32, b: u32| t[a as usize * n + b as usize];
        (0..n as u32).all(|a| (0..n as u32).all(|b| (0..n as u32).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
    }
    fn fill(cell: usize, n: usize, t: &mut Vec<u32>) -> bool {
        if cell == n * n {
            return !associative(t, n);
        }
        let (r, c) = (cell / n, cell % n);
        if r == 0 || c == 0 {
            t[cell] = (r + c) as u32;
            return fill(cell + 1, n, t);
        }
        for v in 0..n as u32 {
            if (0..c).all(|j| t[r * n + j] != v) && (0..r).all(|i| t[i * n + c] != v) {
                t[cell] = v;
                if fill(cell + 1, n, t) {
                    return true;
                }
            }
        }
        false
    }
    let mut t = vec![0; n * n];
    assert!(fill(0, n, &mut t));
    t.chunks(n).map(<[u32]>::to_vec).collect()
}

#[test]
fn build_formats() {
    let o = epg(&["build", "--group", "cyclic:6", "--format", "edgelist"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 15);

    let o = epg(&["build", "--group", "dicyclic:2", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph \"Q8\" {"));
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 8);

    let doc = json(&epg(&["build", "--group", "dihedral:3", "--deleted"]));
    assert_eq!(doc["order"], 6);
    assert_eq!(doc["deleted"], true);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 1);
    assert_eq!(doc["group"], "dihedral:3");

    let o = epg(&["build", "--group", "cyclic:5", "--format", "text"]);
    assert!(stdout(&o).contains("edges: 10"));
}

#[test]
fn build_respects_the_cap() {
    let o = epg(&["build", "--group", "cyclic:9999"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("9999"));

    assert_eq!(code(&epg(&["build", "--group", "cyclic:40", "--max-order", "32"])), 2);
    assert_eq!(code(&epg_env(&["build", "--group", "cyclic:40"], &[("EPG_MAX_ORDER", "32")])), 2);
    assert_eq!(code(&epg_env(&["build", "--group", "cyclic:600"], &[("EPG_MAX_ORDER", "700")])), 0);
    assert_eq!(code(&epg_env(&["build", "--group", "cyclic:6"], &[("EPG_MAX_ORDER", "lots")])), 2);
}

#[test]
fn check_examples() {
    let v = json(&epg(&["check", "--group", "cyclic:9", "--props", "eulerian"]));
    assert_eq!(v, serde_json::json!({"eulerian": true}));

    let v = json(&epg(&["check", "--group", "perm:3:\"(0 1)\",\"(0 1 2)\"", "--props", "connected", "--deleted"]));
    assert_eq!(v, serde_json::json!({"connected": false}));

    let v = json(&epg(&["check", "--group", "product:cyclic:2,cyclic:2", "--props", "star"]));
    assert_eq!(v, serde_json::json!({"star": true}));

    let v = json(&epg(&["check", "--group", "dicyclic:2", "--props", "cone_vertices,complete"]));
    assert_eq!(v["cone_vertices"].as_array().unwrap().len(), 1);
    assert_eq!(v["complete"], false);

    // no --props: every field
    let v = json(&epg(&["check", "--group", "cyclic:5"]));
    for key in [
        "connected",
        "components",
        "complete",
        "cycle",
        "forest",
        "tree",
        "star",
        "bipartite",
        "eulerian",
        "planar",
        "cone_vertices",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["planar"], false);
}

#[test]
fn check_usage_errors() {
    assert_eq!(code(&epg(&["check", "--group", "cyclic:4", "--props", "hamiltonian"])), 2);
    assert_eq!(code(&epg(&["check", "--group", "cyclic:"])), 2);
    assert_eq!(code(&epg(&["check", "--group", "cyclic:4", "--format", "dot"])), 2);
    assert_eq!(code(&epg(&["check", "--group", "cyclic:4", "--format", "json", "--format", "text"])), 2);
    assert_eq!(code(&epg(&["check", "--group", "cyclic:4", "--bogus"])), 2);
    assert_eq!(code(&epg(&["check"])), 2);
}

#[test]
fn verify_matrix() {
    let o = epg(&["verify", "--theorem", "T2.4", "--max-order", "32"]);
    let r = json(&o);
    assert_eq!(r["passed"], r["tested"]);
    assert_eq!(r["counterexamples"].as_array().unwrap().len(), 0);

    let o = epg(&["verify", "--theorem", "all", "--max-order", "24"]);
    assert_eq!(code(&o), 0);
    let reports: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(reports.len(), 14);
    assert_eq!(reports[0]["theorem"], "T2.1");
    assert_eq!(reports[13]["theorem"], "T5.4");
    for r in &reports {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["theorem", "tested", "passed", "vacuous", "counterexamples", "ms"]);
    }

    assert_eq!(code(&epg(&["verify", "--theorem", "T9.9"])), 2);
    assert_eq!(code(&epg(&["verify", "--theorem", "all,T2.1"])), 2);
    assert_eq!(code(&epg(&["verify", "--theorem", "T2.4", "--max-order", "600"])), 2);
    assert_eq!(code(&epg_env(&["verify", "--theorem", "T2.4"], &[("EPG_MAX_ORDER", "16")])), 2);

    let o = epg(&["verify", "--theorem", "T5.3,T2.2", "--format", "text"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("T2.2 ok"), "{text}");
    assert!(text.contains("T5.3 ok"));
}

#[test]
fn verify_output_is_deterministic() {
    let strip = |o: Output| -> Vec<Value> {
        stdout(&o)
            .lines()
            .map(|l| {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v["ms"] = Value::from(0);
                v
            })
            .collect()
    };
    let a = strip(epg(&["verify", "--theorem", "all", "--max-order", "20"]));
    let b = strip(epg(&["verify", "--theorem", "all", "--max-order", "20"]));
    assert_eq!(a, b);
}

#[test]
fn ingest_cases() {
    let dir = tempfile::tempdir().unwrap();

    let z2 = write_table(dir.path(), "z2.txt", &[vec![0, 1], vec![1, 0]]);
    let o = epg(&["ingest", &z2, "--format", "text"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("order: 2"));

    // Z3 with the identity labelled 2
    let shifted = write_table(dir.path(), "z3.txt", &[vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]]);
    let v = json(&epg(&["ingest", &shifted, "--props", "complete,cone_vertices"]));
    assert_eq!(v["complete"], true);
    assert_eq!(v["cone_vertices"], serde_json::json!([1, 2]));

    let loop5 = write_table(dir.path(), "loop5.txt", &non_associative_loop(5));
    let o = epg(&["ingest", &loop5]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("associativity"), "{}", stderr(&o));
    assert_eq!(code(&epg(&["ingest", &loop5, "--validate", "off"])), 0);

    let not_latin = write_table(dir.path(), "bad.txt", &[vec![0, 1], vec![1, 1]]);
    let o = epg(&["ingest", &not_latin]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("Latin square"));

    assert_eq!(code(&epg(&["ingest", &dir.path().join("missing.txt").to_string_lossy()])), 2);

    // the same table is reachable through the spec grammar
    let spec = format!("file:{z2}");
    let v = json(&epg(&["check", "--group", &spec, "--props", "star"]));
    assert_eq!(v["star"], true);
}

#[test]
fn output_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    let o = epg(&["build", "--group", "cyclic:4", "--format", "edgelist", "--output", &path.to_string_lossy()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 6);
}
