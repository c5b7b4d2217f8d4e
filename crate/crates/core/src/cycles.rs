//! Cycles of a given length, their chords, (chorded) pancyclicity, and
//! k-tabs.
//!
//! Cycles are enumerated in a canonical rooted orientation: the first vertex
//! is the least vertex of the cycle and the second is smaller than the last.
//! Each cycle therefore appears once, and "least witness" means least vertex
//! sequence in that orientation.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, VertexSet};

/// A cycle `v_1 .. v_m` with every chord of `g` among its vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    /// Sorted pairs `(u, v)`, `u < v`.
    pub chords: Vec<(usize, usize)>,
}

impl CycleWitness {
    fn from_vertices(g: &Graph, vertices: Vec<usize>) -> Self {
        let chords = chords_of(g, &vertices);
        CycleWitness { vertices, chords }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_chorded(&self) -> bool {
        !self.chords.is_empty()
    }

    /// Checks that the witness is a cycle of `g` and its chord list is complete.
    pub fn verify(&self, g: &Graph) -> bool {
        let m = self.vertices.len();
        let set: VertexSet = self.vertices.iter().copied().collect();
        m >= 3
            && self.vertices.iter().all(|&v| v < g.order())
            && set.len() == m
            && (0..m).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % m]))
            && self.chords == chords_of(g, &self.vertices)
    }
}

/// Edges of `g` joining non-consecutive vertices of the cycle, sorted.
pub fn chords_of(g: &Graph, cycle: &[usize]) -> Vec<(usize, usize)> {
    let m = cycle.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let (a, b) = (cycle[i], cycle[j]);
            if g.has_edge(a, b) {
                out.push((a.min(b), a.max(b)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// What a search for `m`-cycles found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum CycleStatus {
    NoCycle,
    /// Some `m`-cycle exists; none has a chord. Carries the least cycle.
    ChordlessOnly(CycleWitness),
    /// The least chorded `m`-cycle.
    Chorded(CycleWitness),
}

impl CycleStatus {
    pub fn has_cycle(&self) -> bool {
        !matches!(self, CycleStatus::NoCycle)
    }

    pub fn has_chorded_cycle(&self) -> bool {
        matches!(self, CycleStatus::Chorded(_))
    }

    pub fn witness(&self) -> Option<&CycleWitness> {
        match self {
            CycleStatus::NoCycle => None,
            CycleStatus::ChordlessOnly(w) | CycleStatus::Chorded(w) => Some(w),
        }
    }
}

fn check_length(g: &Graph, m: usize, min: usize) -> Result<()> {
    if m < min || m > g.order() {
        return Err(GraphError::InvalidParameter(format!(
            "cycle length {m} outside {min}..={}",
            g.order()
        )));
    }
    Ok(())
}

/// Visits every `m`-cycle once, in increasing canonical vertex sequence.
fn for_each_cycle<B>(
    g: &Graph,
    m: usize,
    visit: &mut impl FnMut(&[usize], VertexSet) -> ControlFlow<B>,
) -> Option<B> {
    let n = g.order();
    if m < 3 || m > n {
        return None;
    }
    let mut path = Vec::with_capacity(m);
    for s in 0..=n - m {
        let allowed = g.vertices().difference(VertexSet::full(s + 1));
        if g.neighbors(s).intersection(allowed).len() < 2 {
            continue;
        }
        path.clear();
        path.push(s);
        if let ControlFlow::Break(b) =
            extend_cycle(g, m, s, allowed, &mut path, VertexSet::singleton(s), visit)
        {
            return Some(b);
        }
    }
    None
}

fn extend_cycle<B>(
    g: &Graph,
    m: usize,
    s: usize,
    allowed: VertexSet,
    path: &mut Vec<usize>,
    used: VertexSet,
    visit: &mut impl FnMut(&[usize], VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let last = *path.last().expect("rooted path");
    let free = allowed.difference(used);
    if path.len() == m - 1 {
        // closing vertex: adjacent to both ends, larger than the second vertex
        let second = path[1];
        let close = g
            .neighbors(last)
            .intersection(g.neighbors(s))
            .intersection(free)
            .difference(VertexSet::full(second + 1));
        for w in close {
            path.push(w);
            let r = visit(path, used.with(w));
            path.pop();
            r?;
        }
        return ControlFlow::Continue(());
    }
    if free.len() < m - path.len() {
        return ControlFlow::Continue(());
    }
    let mut next = g.neighbors(last).intersection(free);
    if path.len() == 1 {
        // the second vertex must be below the last one, itself a neighbor of s
        let top = g.neighbors(s).intersection(free).iter().last().unwrap_or(0);
        next = next.intersection(VertexSet::full(top));
    }
    for w in next {
        path.push(w);
        extend_cycle(g, m, s, allowed, path, used.with(w), visit)?;
        path.pop();
    }
    ControlFlow::Continue(())
}

/// The least `m`-cycle of `g` with its chords.
pub fn find_cycle(g: &Graph, m: usize) -> Result<Option<CycleWitness>> {
    check_length(g, m, 3)?;
    let found = for_each_cycle(g, m, &mut |c, _| ControlFlow::Break(c.to_vec()));
    Ok(found.map(|c| CycleWitness::from_vertices(g, c)))
}

/// The least `m`-cycle with at least one chord.
pub fn find_chorded_cycle(g: &Graph, m: usize) -> Result<Option<CycleWitness>> {
    check_length(g, m, 4)?;
    Ok(match cycle_status(g, m)? {
        CycleStatus::Chorded(w) => Some(w),
        _ => None,
    })
}

/// Distinguishes "no `m`-cycle" from "only chordless `m`-cycles".
pub fn cycle_status(g: &Graph, m: usize) -> Result<CycleStatus> {
    check_length(g, m, 3)?;
    let mut first: Option<Vec<usize>> = None;
    let chorded = for_each_cycle(g, m, &mut |c, set| {
        if first.is_none() {
            first = Some(c.to_vec());
        }
        if m > 3 && g.edges_within(set) > m {
            ControlFlow::Break(c.to_vec())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match (chorded, first) {
        (Some(c), _) => CycleStatus::Chorded(CycleWitness::from_vertices(g, c)),
        (None, Some(c)) => CycleStatus::ChordlessOnly(CycleWitness::from_vertices(g, c)),
        (None, None) => CycleStatus::NoCycle,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthStatus {
    pub length: usize,
    #[serde(flatten)]
    pub status: CycleStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PancyclicityReport {
    pub order: usize,
    /// One entry per length `3..=order`.
    pub lengths: Vec<LengthStatus>,
    pub pancyclic: bool,
    pub chorded_pancyclic: bool,
}

impl PancyclicityReport {
    pub fn status(&self, m: usize) -> Option<&CycleStatus> {
        self.lengths.iter().find(|l| l.length == m).map(|l| &l.status)
    }

    /// Lengths in `3..=n` without any cycle.
    pub fn missing_cycle_lengths(&self) -> Vec<usize> {
        self.lengths.iter().filter(|l| !l.status.has_cycle()).map(|l| l.length).collect()
    }

    /// Lengths in `4..=n` without a chorded cycle.
    pub fn missing_chorded_lengths(&self) -> Vec<usize> {
        self.lengths
            .iter()
            .filter(|l| l.length >= 4 && !l.status.has_chorded_cycle())
            .map(|l| l.length)
            .collect()
    }
}

pub fn pancyclicity_report(g: &Graph) -> Result<PancyclicityReport> {
    let n = g.order();
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "pancyclicity needs order at least 3, got {n}"
        )));
    }
    let lengths = (3..=n)
        .map(|m| cycle_status(g, m).map(|status| LengthStatus { length: m, status }))
        .collect::<Result<Vec<_>>>()?;
    let pancyclic = lengths.iter().all(|l| l.status.has_cycle());
    let chorded_pancyclic = lengths.iter().filter(|l| l.length >= 4).all(|l| l.status.has_chorded_cycle());
    Ok(PancyclicityReport { order: n, lengths, pancyclic, chorded_pancyclic })
}

/// Whether `g` has a chorded cycle of every length `4..=n`, stopping at the
/// first missing length.
pub fn is_chorded_pancyclic(g: &Graph) -> bool {
    g.order() >= 3 && (4..=g.order()).all(|m| matches!(cycle_status(g, m), Ok(CycleStatus::Chorded(_))))
}

pub fn is_pancyclic(g: &Graph) -> bool {
    g.order() >= 3 && (3..=g.order()).all(|m| matches!(cycle_status(g, m), Ok(s) if s.has_cycle()))
}

/// A path `a_0 a_1 .. a_{k+1}` whose ends are distinct host vertices and
/// whose `k` internal vertices lie outside the host.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KTab {
    pub host: VertexSet,
    pub path: Vec<usize>,
    pub k: usize,
}

impl KTab {
    pub fn endpoints(&self) -> (usize, usize) {
        (self.path[0], self.path[self.path.len() - 1])
    }

    pub fn verify(&self, g: &Graph) -> bool {
        let p = &self.path;
        let (a, b) = self.endpoints();
        let internal: VertexSet = p[1..p.len() - 1].iter().copied().collect();
        p.len() == self.k + 2
            && a != b
            && self.host.contains(a)
            && self.host.contains(b)
            && internal.len() == self.k
            && internal.intersection(self.host).is_empty()
            && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

fn check_host(g: &Graph, host: VertexSet) -> Result<()> {
    if host.is_empty() || !host.is_subset(g.vertices()) || host == g.vertices() {
        return Err(GraphError::InvalidParameter(
            "host must be a nonempty proper subset of the vertices".into(),
        ));
    }
    Ok(())
}

/// Every k-tab on `G[host]`, one per path up to reversal (first endpoint
/// smaller), in lexicographic order of the paths.
pub fn k_tabs(g: &Graph, host: VertexSet, k: usize) -> Result<Vec<KTab>> {
    check_host(g, host)?;
    if k == 0 {
        return Err(GraphError::InvalidParameter("k-tabs need k >= 1".into()));
    }
    let outside = g.vertices().difference(host);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k + 2);
    for a0 in host {
        path.clear();
        path.push(a0);
        grow_tab(g, host, outside, k, &mut path, VertexSet::EMPTY, &mut out);
    }
    Ok(out)
}

fn grow_tab(
    g: &Graph,
    host: VertexSet,
    outside: VertexSet,
    k: usize,
    path: &mut Vec<usize>,
    used: VertexSet,
    out: &mut Vec<KTab>,
) {
    let last = *path.last().expect("tab start");
    if path.len() == k + 1 {
        let a0 = path[0];
        let ends = g.neighbors(last).intersection(host).difference(VertexSet::full(a0 + 1));
        for b in ends {
            path.push(b);
            out.push(KTab { host, path: path.clone(), k });
            path.pop();
        }
        return;
    }
    for w in g.neighbors(last).intersection(outside).difference(used) {
        path.push(w);
        grow_tab(g, host, outside, k, path, used.with(w), out);
        path.pop();
    }
}

/// A k-tab with least `k`, preferring adjacent endpoints, then the least path.
/// `None` when no tab exists, which happens iff the host is not joined to the
/// rest of the graph through two distinct host vertices.
pub fn minimal_k_tab(g: &Graph, host: VertexSet) -> Result<Option<KTab>> {
    check_host(g, host)?;
    let outside = g.vertices().difference(host).len();
    for k in 1..=outside {
        let tabs = k_tabs(g, host, k)?;
        if tabs.is_empty() {
            continue;
        }
        let best = tabs
            .iter()
            .find(|t| {
                let (a, b) = t.endpoints();
                g.has_edge(a, b)
            })
            .unwrap_or(&tabs[0]);
        return Ok(Some(best.clone()));
    }
    Ok(None)
}
