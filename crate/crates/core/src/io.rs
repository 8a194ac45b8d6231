//! Text formats: graphs, colourings and embedding documents.

use std::fmt::Write as _;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::graph::Graph;
use crate::ramsey::{Color, Coloring};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with `#` comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| parse_err(line, format!("expected a number, found {s:?}")))
}

/// `n m` followed by `m` lines `u v` (0-based).
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| parse_err(1, "empty graph file"))?;
    let [n, m] = head[..] else {
        return Err(parse_err(l0, "header must be \"n m\""));
    };
    let (n, m): (usize, usize) = (number(l0, n)?, number(l0, m)?);
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (ln, f) in lines {
        let [u, v] = f[..] else {
            return Err(parse_err(ln, "edge line must be \"u v\""));
        };
        let (u, v) = (number(ln, u)?, number(ln, v)?);
        if u >= n || v >= n || u == v {
            return Err(parse_err(ln, format!("invalid edge {u} {v} for {n} vertices")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(l0, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// `s` followed by one line `u v c` per pair, `c` in `r`/`b`.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| parse_err(1, "empty colouring file"))?;
    let [s] = head[..] else {
        return Err(parse_err(l0, "header must be \"s\""));
    };
    let s: usize = number(l0, s)?;
    let mut col = Coloring::uniform(s, Color::Red);
    let mut seen = vec![false; s * s.saturating_sub(1) / 2];
    let mut count = 0;
    for (ln, f) in lines {
        let [u, v, c] = f[..] else {
            return Err(parse_err(ln, "pair line must be \"u v c\""));
        };
        let (u, v): (usize, usize) = (number(ln, u)?, number(ln, v)?);
        if u >= s || v >= s || u == v {
            return Err(parse_err(ln, format!("invalid pair {u} {v} for s = {s}")));
        }
        let c = match c {
            "r" => Color::Red,
            "b" => Color::Blue,
            other => return Err(parse_err(ln, format!("colour must be r or b, found {other:?}"))),
        };
        let (a, b) = (u.min(v), u.max(v));
        let k = a * (2 * s - a - 1) / 2 + (b - a - 1);
        if seen[k] {
            return Err(parse_err(ln, format!("pair {a} {b} coloured twice")));
        }
        seen[k] = true;
        count += 1;
        col.set(u, v, c);
    }
    if count != seen.len() {
        return Err(parse_err(
            l0,
            format!("{} of {} pairs are missing a colour", seen.len() - count, seen.len()),
        ));
    }
    Ok(col)
}

pub fn write_coloring(col: &Coloring) -> String {
    let s = col.s();
    let mut out = format!("{s}\n");
    for u in 0..s {
        for v in u + 1..s {
            let c = if col.get(u, v) == Color::Red { 'r' } else { 'b' };
            let _ = writeln!(out, "{u} {v} {c}");
        }
    }
    out
}

/// Coordinate block: `dim`, `vertices`, then `coords` with one row
/// `v x_1 .. x_dim` per vertex in 17 significant digits.
pub fn write_coords(e: &Embedding) -> String {
    let mut out = format!("dim {}\nvertices {}\ncoords\n", e.dim(), e.len());
    for v in 0..e.len() {
        let _ = write!(out, "{v}");
        match e.get(v) {
            Some(p) => {
                for x in p.iter() {
                    let _ = write!(out, " {x:.16e}");
                }
            }
            None => out.push_str(" none"),
        }
        out.push('\n');
    }
    out
}

/// Reads the coordinate block of a document written by [`write_coords`];
/// other fields are ignored.
pub fn parse_coords(text: &str) -> Result<Embedding> {
    let mut dim = None;
    let mut n = None;
    let mut rows: Option<Embedding> = None;
    for (ln, f) in content_lines(text) {
        match (f[0], &mut rows) {
            ("dim", None) if f.len() == 2 => dim = Some(number::<usize>(ln, f[1])?),
            ("vertices", None) if f.len() == 2 => n = Some(number::<usize>(ln, f[1])?),
            ("coords", None) => {
                let (d, n) = dim
                    .zip(n)
                    .ok_or_else(|| parse_err(ln, "coords before dim and vertices"))?;
                rows = Some(Embedding::new(n, d));
            }
            ("report", Some(_)) => break,
            (_, Some(e)) => {
                let v: usize = number(ln, f[0])?;
                if v >= e.len() {
                    return Err(parse_err(ln, format!("vertex {v} out of range")));
                }
                if f[1..] == ["none"] {
                    continue;
                }
                if f.len() != e.dim() + 1 {
                    return Err(parse_err(ln, format!("expected {} coordinates", e.dim())));
                }
                let xs: Vec<f64> = f[1..].iter().map(|s| number(ln, s)).collect::<Result<_>>()?;
                e.set(v, Point::from_vec(xs));
            }
            _ => {}
        }
    }
    rows.ok_or_else(|| parse_err(1, "no coords section"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_comments_and_errors() {
        let g = parse_graph("# square\n4 4\n0 1\n1 2 # side\n2 3\n3 0\n").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn coloring_round_trip_and_missing_pair() {
        let col = Coloring::from_index(4, 0b101100);
        assert_eq!(parse_coloring(&write_coloring(&col)).unwrap(), col);
        assert!(parse_coloring("3\n0 1 r\n0 2 b\n").is_err());
        assert!(parse_coloring("2\n0 1 g\n").is_err());
    }

    #[test]
    fn coords_round_trip_exact() {
        let pts = vec![
            Point::from_row_slice(&[0.1, 1.0 / 3.0]),
            Point::from_row_slice(&[-2.5e-17, 7.0]),
        ];
        let e = Embedding::from_points(2, pts);
        let back = parse_coords(&write_coords(&e)).unwrap();
        assert_eq!(back.point(0), e.point(0));
        assert_eq!(back.point(1), e.point(1));
    }
}
