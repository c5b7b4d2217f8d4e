//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered vertex partition to a
//! stable one, pick the first non-singleton cell, and branch on every vertex of
//! that cell. Each discrete partition is a labeling; the canonical labeling is
//! the one whose relabeled adjacency rows are lexicographically least.
//! Branches equivalent under a known automorphism that fixes the current
//! prefix are skipped. Two sources of automorphisms are used: transpositions of
//! twins (vertices with the same neighbors apart from each other), and
//! automorphisms discovered when two leaves produce the same graph.

use std::fmt;

use super::graph6::{to_graph6, GRAPH6_MAX_ORDER};
use super::{Graph, VertexSet};
use crate::error::{GraphError, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = GRAPH6_MAX_ORDER;

/// Graph6 text of the canonically relabeled graph. Equal codes iff
/// isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    let (_, canon) = canonical_labeling(g)?;
    Ok(CanonicalCode(to_graph6(&canon)?))
}

/// Returns `(perm, canon)` with `canon == g.relabel(&perm)`.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<usize>, Graph)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(GraphError::Capacity { requested: n, capacity: MAX_CANONICAL_ORDER });
    }
    let mut search = Search::new(g);
    let mut cells = vec![g.vertices()];
    if n == 0 {
        cells.clear();
    }
    search.refine(&mut cells);
    search.descend(cells, &mut Vec::new());
    let perm = search.best_perm;
    Ok((perm.clone(), g.relabel(&perm)))
}

/// Graph isomorphism test; agrees with canonical-code equality.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    match (canonical_labeling(g), canonical_labeling(h)) {
        (Ok((_, a)), Ok((_, b))) => a == b,
        _ => false,
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// twin_root[v]: least vertex of v's twin class.
    twin_root: Vec<usize>,
    best_rows: Vec<u64>,
    best_perm: Vec<usize>,
    /// vertex of the best leaf carrying each label
    best_inv: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 64;

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let mut twin_root: Vec<usize> = (0..n).collect();
        for v in 0..n {
            for u in 0..v {
                if twin_root[u] == u && is_twin(g, u, v) {
                    twin_root[v] = u;
                    break;
                }
            }
        }
        Search {
            g,
            twin_root,
            best_rows: Vec::new(),
            best_perm: Vec::new(),
            best_inv: Vec::new(),
            automorphisms: Vec::new(),
        }
    }

    /// Splits cells by neighbor counts into every cell until stable. The
    /// split key is a hash of the count vector; any isomorphism-invariant
    /// key is sound, collisions only weaken the refinement.
    fn refine(&self, cells: &mut Vec<VertexSet>) {
        let n = self.g.order();
        let mut keyed: Vec<(u64, usize)> = Vec::with_capacity(n);
        loop {
            let before = cells.len();
            if before == n {
                return;
            }
            let mut next = Vec::with_capacity(n);
            for &cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                keyed.clear();
                for v in cell {
                    let mut h = 0xcbf2_9ce4_8422_2325u64;
                    for (j, &other) in cells.iter().enumerate() {
                        let c = self.g.neighbors(v).intersection(other).len() as u64;
                        if c != 0 {
                            h = mix(h ^ (j as u64) << 8 ^ c);
                        }
                    }
                    keyed.push((h, v));
                }
                keyed.sort_unstable();
                let mut part = VertexSet::EMPTY;
                let mut key = keyed[0].0;
                for &(k, v) in &keyed {
                    if k != key {
                        next.push(part);
                        part = VertexSet::EMPTY;
                        key = k;
                    }
                    part.insert(v);
                }
                next.push(part);
            }
            *cells = next;
            if cells.len() == before {
                return;
            }
        }
    }

    fn descend(&mut self, cells: Vec<VertexSet>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut tried = VertexSet::EMPTY;
        for v in cell {
            if !tried.is_empty() && self.equivalent_to_tried(v, tried, cell, prefix) {
                continue;
            }
            tried.insert(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(VertexSet::singleton(v));
            child.push(cell.without(v));
            child.extend_from_slice(&cells[target + 1..]);
            self.refine(&mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// True when some automorphism fixing `prefix` pointwise maps an
    /// already-explored vertex of `cell` onto `v`.
    fn equivalent_to_tried(&self, v: usize, tried: VertexSet, cell: VertexSet, prefix: &[usize]) -> bool {
        let root = self.twin_root[v];
        if tried.iter().any(|u| self.twin_root[u] == root) {
            return true;
        }
        let fixing: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        // orbit of v restricted to the cell, under the twin transpositions
        // and the prefix-fixing automorphisms
        let mut orbit = VertexSet::singleton(v);
        let mut frontier = orbit;
        while let Some(x) = frontier.first() {
            frontier.remove(x);
            let mut images = VertexSet::EMPTY;
            for a in &fixing {
                images.insert(a[x]);
            }
            let rx = self.twin_root[x];
            for y in cell {
                if self.twin_root[y] == rx {
                    images.insert(y);
                }
            }
            let fresh = images.difference(orbit);
            orbit = orbit.union(fresh);
            frontier = frontier.union(fresh);
        }
        !orbit.intersection(tried).is_empty()
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let n = self.g.order();
        let mut perm = vec![0usize; n];
        for (label, c) in cells.iter().enumerate() {
            perm[c.first().expect("discrete partition")] = label;
        }
        let mut rows = vec![0u64; n];
        for v in 0..n {
            let mut row = 0u64;
            for w in self.g.neighbors(v) {
                row |= 1u64 << perm[w];
            }
            rows[perm[v]] = row;
        }
        if self.best_perm.is_empty() || rows < self.best_rows {
            self.best_inv = vec![0; n];
            for (v, &l) in perm.iter().enumerate() {
                self.best_inv[l] = v;
            }
            self.best_rows = rows;
            self.best_perm = perm;
        } else if rows == self.best_rows && self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
            let aut: Vec<usize> = perm.iter().map(|&l| self.best_inv[l]).collect();
            if aut.iter().enumerate().any(|(v, &w)| v != w) {
                self.automorphisms.push(aut);
            }
        }
    }
}

/// `u` and `v` have the same neighbors apart from each other.
fn is_twin(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

#[inline]
fn mix(mut x: u64) -> u64 {
    x ^= x >> 33;
    x = x.wrapping_mul(0xff51_afd7_ed55_8ccd);
    x ^= x >> 33;
    x = x.wrapping_mul(0xc4ce_b9fe_1a85_ec53);
    x ^ x >> 33
}
