//! End-to-end runs of the `cubicbox` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cubicbox::document::BoxDocument;
use cubicbox::graph::{named, serialize_graph};
use cubicbox::{verify, Format, Graph};
use tempfile::TempDir;

fn cubicbox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubicbox")).args(args).output().expect("binary runs")
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph, format: Format) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, serialize_graph(g, format)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build(dir: &TempDir, graph: &Path, extra: &[&str]) -> (Output, PathBuf) {
    let out = dir.path().join("boxes.json");
    let mut args = vec!["build", s(graph), "--out", s(&out)];
    args.extend_from_slice(extra);
    (cubicbox(&args), out)
}

#[test]
fn build_k4_writes_the_hand_traced_boxes() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "k4.txt", &named::k4(), Format::EdgeList);
    let (out, boxes) = build(&dir, &graph, &[]);
    assert_eq!(status(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&boxes).unwrap();
    let doc = BoxDocument::from_json(&text).unwrap();
    assert_eq!(doc.n, 4);
    assert_eq!((doc.boxes[3].x, doc.boxes[3].y, doc.boxes[3].z), ([50, 80], [0, 40], [10, 15]));
    assert_eq!((doc.boxes[0].x, doc.boxes[0].y, doc.boxes[0].z), ([50, 50], [10, 30], [15, 50]));
    assert_eq!(doc.provenance.tool_version, env!("CARGO_PKG_VERSION"));
    assert_eq!(doc.provenance.input_hash.len(), 64);
    assert_eq!(doc.to_json(), text, "document rewrites byte for byte");

    let report = cubicbox(&["verify", s(&graph), s(&boxes)]);
    assert_eq!(status(&report), 0);
    let json: serde_json::Value = serde_json::from_slice(&report.stdout).unwrap();
    assert_eq!(json["edges_match"], true);
    assert_eq!(json["touch_ok"], true);
}

#[test]
fn build_reads_graph6_and_writes_debug_documents() {
    let dir = TempDir::new().unwrap();
    let g = named::petersen();
    let graph = write_graph(&dir, "petersen.g6", &g, Format::Graph6);
    let partition = dir.path().join("partition.json");
    let intervals = dir.path().join("intervals.json");
    let (out, boxes) = build(
        &dir,
        &graph,
        &["--format", "graph6", "--partition-out", s(&partition), "--intervals-out", s(&intervals)],
    );
    assert_eq!(status(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = BoxDocument::from_json(&fs::read_to_string(&boxes).unwrap()).unwrap();
    assert!(verify(&g, &doc.boxes()).passed());
    let p: serde_json::Value = serde_json::from_str(&fs::read_to_string(&partition).unwrap()).unwrap();
    assert_eq!(p["classes"].as_array().unwrap().len(), 10);
    let iv: serde_json::Value = serde_json::from_str(&fs::read_to_string(&intervals).unwrap()).unwrap();
    assert_eq!(iv["axes"].as_array().unwrap().len(), 3);
}

#[test]
fn single_vertex_gets_one_box() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "one.txt", &Graph::empty(1), Format::EdgeList);
    let (out, boxes) = build(&dir, &graph, &[]);
    assert_eq!(status(&out), 0);
    assert_eq!(BoxDocument::from_json(&fs::read_to_string(boxes).unwrap()).unwrap().n, 1);
}

#[test]
fn tampered_endpoint_fails_verification() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "k4.txt", &named::k4(), Format::EdgeList);
    let (_, boxes) = build(&dir, &graph, &[]);
    let mut doc = BoxDocument::from_json(&fs::read_to_string(&boxes).unwrap()).unwrap();
    // Box 3 meets boxes 0 to 2 at its left end on the first axis.
    doc.boxes[3].x[0] += 1;
    fs::write(&boxes, doc.to_json()).unwrap();
    let out = cubicbox(&["verify", s(&graph), s(&boxes)]);
    assert_eq!(status(&out), 1);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["edges_match"], false);
}

#[test]
fn input_errors_exit_with_status_two() {
    let dir = TempDir::new().unwrap();
    let k4 = write_graph(&dir, "k4.txt", &named::k4(), Format::EdgeList);
    let (_, boxes) = build(&dir, &k4, &[]);
    let six = write_graph(&dir, "prism.txt", &named::prism(), Format::EdgeList);
    assert_eq!(status(&cubicbox(&["verify", s(&six), s(&boxes)])), 2);

    let star = dir.path().join("star.txt");
    fs::write(&star, "n 5\n0 1\n0 2\n0 3\n0 4\n").unwrap();
    let (out, _) = build(&dir, &star, &[]);
    assert_eq!(status(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degree 4"));

    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{\"schema_version\": 9}").unwrap();
    assert_eq!(status(&cubicbox(&["verify", s(&k4), s(&garbage)])), 2);
    assert_eq!(status(&cubicbox(&["build", s(&k4), "--format", "dot"])), 2);
    assert_eq!(status(&cubicbox(&["frobnicate"])), 2);
    assert_eq!(status(&cubicbox(&["gen", "--n", "7"])), 2);
}

#[test]
fn gen_is_deterministic_and_removes_edges() {
    let k4 = cubicbox(&["gen", "--n", "4"]);
    assert_eq!(String::from_utf8(k4.stdout).unwrap(), serialize_graph(&named::k4(), Format::EdgeList));

    let a = cubicbox(&["gen", "--n", "50", "--seed", "7"]);
    let b = cubicbox(&["gen", "--n", "50", "--seed", "7"]);
    assert_eq!(status(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    let sparse = cubicbox(&["gen", "--n", "100", "--seed", "3", "--max-degree-3-fraction", "0.2"]);
    let g = cubicbox::graph::parse_graph(&String::from_utf8(sparse.stdout).unwrap(), Format::EdgeList).unwrap();
    assert_eq!(g.edge_count(), 150 - 30);
    assert!(g.max_degree() <= 3);
}

#[test]
fn bench_emits_one_row_per_size() {
    let out = cubicbox(&["bench", "--sizes", "100,200", "--seeds", "2"]);
    assert_eq!(status(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("n,runs,median_ms"));
    assert!(rows[1].starts_with("100,2,") && rows[2].starts_with("200,2,"));
}

#[test]
fn export_writes_one_cuboid_per_box() {
    let dir = TempDir::new().unwrap();
    let graph = write_graph(&dir, "k4.txt", &named::k4(), Format::EdgeList);
    let (_, boxes) = build(&dir, &graph, &[]);
    let obj = dir.path().join("k4.obj");
    assert_eq!(status(&cubicbox(&["export", s(&boxes), "--obj", s(&obj)])), 0);
    let text = fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 32);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 48);
    assert!(text.contains("# thickened: box 0 axis x"));
}
