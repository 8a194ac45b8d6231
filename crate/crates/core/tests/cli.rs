use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use unitdist::graph::Graph;
use unitdist::io::{parse_coords, write_graph};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("unitdist-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, body).unwrap();
        p
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn unitdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unitdist"))
        .args(args)
        .output()
        .unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn embed_then_verify() {
    let dir = Scratch::new("verify");
    let g = dir.file("petersen.txt", &write_graph(&Graph::petersen()));
    let out = dir.0.join("petersen.out");
    let o = unitdist(&["embed", s(&g), "--dim", "3", "--output", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc = std::fs::read_to_string(&out).unwrap();
    assert!(
        doc.contains("strategy max-degree") && doc.contains("pass true"),
        "{doc}"
    );
    assert_eq!(parse_coords(&doc).unwrap().len(), 10);

    let v = unitdist(&["verify", s(&g), s(&out)]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("pass true"));

    let tampered = dir.file("tampered.out", &move_vertex_0(&doc));
    let v = unitdist(&["verify", s(&g), s(&tampered)]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("pass false"));
}

/// Sets the first coordinate of vertex 0 to 10.
fn move_vertex_0(doc: &str) -> String {
    doc.lines()
        .map(|l| match l.split_whitespace().collect::<Vec<_>>()[..] {
            ["0", _, y, z] => format!("0 1.0e1 {y} {z}"),
            _ => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn outside_every_hypothesis_exits_2() {
    let dir = Scratch::new("scope");
    let k5 = dir.file("k5.txt", &write_graph(&Graph::complete(5)));
    assert_eq!(unitdist(&["embed", s(&k5), "--dim", "2"]).status.code(), Some(2));
    let k33 = dir.file("k33.txt", &write_graph(&Graph::complete_bipartite(3, 3)));
    let o = unitdist(&["embed", s(&k33), "--dim", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("K_{3,3}"));
    let o = unitdist(&["embed", s(&k33), "--dim", "4"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_1() {
    let dir = Scratch::new("parse");
    let bad = dir.file("bad.txt", "3 2\n0 1\n");
    let o = unitdist(&["embed", s(&bad), "--dim", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let col = dir.file("col.txt", "3\n0 1 r\n1 2 b\n");
    assert_eq!(unitdist(&["ramsey", s(&col)]).status.code(), Some(1));
    assert_eq!(
        unitdist(&["embed", "/nonexistent/graph.txt", "--dim", "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn sphere_mode_reports_sphere_deviation() {
    let dir = Scratch::new("sphere");
    let g = dir.file("c5.txt", &write_graph(&Graph::cycle(5)));
    let o = unitdist(&["embed", s(&g), "--dim", "3", "--mode", "sphere"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("strategy sphere-max-degree") && out.contains("sphere_deviation"),
        "{out}"
    );
}

#[test]
fn bound_and_ramsey_outputs() {
    let dir = Scratch::new("bound");
    let q3 = dir.file("q3.txt", &write_graph(&Graph::cube()));
    let out = stdout(&unitdist(&["bound", s(&q3)]));
    assert!(
        out.contains("euclidean_bound 3") && out.contains("spherical_bound 4"),
        "{out}"
    );

    let col = dir.file("c4.txt", "4\n0 1 r\n0 2 r\n0 3 b\n1 2 b\n1 3 r\n2 3 r\n");
    let o = unitdist(&["ramsey", s(&col), "--mode", "sphere"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim 3"));

    let o = unitdist(&["ramsey", "--exhaustive", "4", "--mode", "sphere"]);
    assert!(stdout(&o).contains("passed 64"));
}
