//! graph6 short form (orders 0..=62).
//!
//! A record is one byte `n + 63` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups with each group offset by 63. The last
//! group is zero-padded.

use super::{Graph, VertexSet};
use crate::error::{GraphError, Result};

/// Largest order expressible with the one-byte header.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::Capacity { requested: n, capacity: GRAPH6_MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + 63) as char);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            group = group << 1 | col.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let err = |offset: usize, reason: String| GraphError::Parse { offset: offset + skip, reason };

    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty record".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first:#04x} is not a graph6 character")));
    }
    if first == 126 {
        return Err(err(0, "long-form order header (n > 62) is not supported".into()));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for order {n}, found {}", bytes.len()),
        ));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(offset, format!("byte {b:#04x} is not a graph6 character")));
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            if k >= nbits {
                break;
            }
            if value >> shift & 1 == 1 {
                let (i, j) = triangle_position(k);
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// Maps the k-th bit of the upper triangle to its `(row, column)` pair.
fn triangle_position(k: usize) -> (usize, usize) {
    // column j holds bits j(j-1)/2 .. j(j+1)/2
    let mut j = 1;
    while j * (j + 1) / 2 <= k {
        j += 1;
    }
    (k - j * (j - 1) / 2, j)
}
