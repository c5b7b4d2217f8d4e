//! Plain edge-list text: a first line holding the order `n`, then one
//! whitespace-separated `u v` pair per line, 0-indexed. Blank lines and lines
//! starting with `#` are ignored.

use super::Graph;
use crate::error::{GraphError, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let bad = |line: usize, what: &str| {
        GraphError::InvalidParameter(format!("edge list line {line}: {what}"))
    };

    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| bad(line, "vertex count is not an integer"))?;

    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut fields = text.split_whitespace().map(str::parse::<usize>);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(bad(line, "expected two vertex indices")),
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
