//! The forbidden graphs (claw, induced paths, triangles with a pendant path)
//! and detection of induced copies of them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{components, is_connected, standard_graph, Graph, StandardKind, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    /// `K_{1,3}`.
    Claw,
    /// Induced path on `t` vertices.
    Path(usize),
    /// Triangle with a pendant path of `i` vertices hanging off one corner.
    Z(usize),
}

impl PatternKind {
    pub fn name(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::Claw => f.write_str("claw"),
            PatternKind::Path(t) => write!(f, "p{t}"),
            PatternKind::Z(i) => write!(f, "z{i}"),
        }
    }
}

impl Serialize for PatternKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for PatternKind {
    type Err = GraphError;

    /// Accepts `claw`, `pN` and `zN`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || {
            GraphError::InvalidParameter(format!(
                "unknown pattern '{s}' (expected claw, p4, p5, p6, z1, z2, or pN/zN)"
            ))
        };
        if lower == "claw" || lower == "k13" {
            return Ok(PatternKind::Claw);
        }
        let (head, tail) = lower.split_at(lower.len().min(1));
        let param: usize = tail.parse().map_err(|_| bad())?;
        let kind = match head {
            "p" => PatternKind::Path(param),
            "z" => PatternKind::Z(param),
            _ => return Err(bad()),
        };
        make_pattern(kind).map(|p| p.kind).map_err(|_| bad())
    }
}

/// A forbidden graph together with its search plans.
#[derive(Clone, Debug)]
pub struct Pattern {
    pub kind: PatternKind,
    pub graph: Graph,
    /// For each pattern vertex `i`: the pattern vertices `< i` adjacent to it.
    earlier: Vec<VertexSet>,
    /// One plan per automorphism orbit of pattern vertices, used when a copy
    /// must pass through a given host vertex.
    anchored: Vec<AnchoredPlan>,
}

#[derive(Clone, Debug)]
struct AnchoredPlan {
    /// Pattern vertices in matching order; `order[0]` sits on the anchor.
    order: Vec<usize>,
    /// For each step, the earlier steps adjacent (bit j = step j).
    adjacent_steps: Vec<VertexSet>,
}

pub fn make_pattern(kind: PatternKind) -> Result<Pattern> {
    let graph = match kind {
        PatternKind::Claw => Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)])?,
        PatternKind::Path(t) => {
            if t < 1 {
                return Err(GraphError::InvalidParameter("path pattern needs t >= 1".into()));
            }
            standard_graph(StandardKind::Path, t)?
        }
        PatternKind::Z(i) => {
            if i < 1 {
                return Err(GraphError::InvalidParameter("Z pattern needs i >= 1".into()));
            }
            let mut edges = vec![(0, 1), (1, 2), (0, 2), (2, 3)];
            edges.extend((3..2 + i).map(|v| (v, v + 1)));
            Graph::from_edge_list(3 + i, &edges)?
        }
    };
    Ok(Pattern::from_graph(kind, graph))
}

impl Pattern {
    fn from_graph(kind: PatternKind, graph: Graph) -> Self {
        let k = graph.order();
        let earlier = (0..k)
            .map(|i| graph.neighbors(i).intersection(VertexSet::full(i)))
            .collect();
        let anchored = orbit_representatives(&graph)
            .into_iter()
            .map(|s| AnchoredPlan::new(&graph, s))
            .collect();
        Pattern { kind, graph, earlier, anchored }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }
}

impl AnchoredPlan {
    fn new(p: &Graph, start: usize) -> Self {
        // breadth-first from the anchor so every later step has an earlier
        // neighbor, keeping candidate sets small
        let mut order = vec![start];
        let mut seen = VertexSet::singleton(start);
        let mut i = 0;
        while i < order.len() {
            for w in p.neighbors(order[i]).difference(seen) {
                seen.insert(w);
                order.push(w);
            }
            i += 1;
        }
        for v in p.vertices().difference(seen) {
            order.push(v);
        }
        let adjacent_steps = (0..order.len())
            .map(|s| (0..s).filter(|&t| p.has_edge(order[s], order[t])).collect())
            .collect();
        AnchoredPlan { order, adjacent_steps }
    }
}

/// One vertex from each automorphism orbit of a small pattern graph, or
/// every vertex when the pattern is too large to enumerate permutations.
fn orbit_representatives(p: &Graph) -> Vec<usize> {
    let k = p.order();
    if k > 8 {
        return (0..k).collect();
    }
    let mut orbit_of: Vec<usize> = (0..k).collect();
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |perm| {
        if p.relabel(perm) == *p {
            for v in 0..k {
                let (a, b) = (orbit_of[v], orbit_of[perm[v]]);
                let (lo, hi) = (a.min(b), a.max(b));
                for o in orbit_of.iter_mut() {
                    if *o == hi {
                        *o = lo;
                    }
                }
            }
        }
    });
    (0..k).filter(|&v| orbit_of[v] == v).collect()
}

fn permute(perm: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == perm.len() {
        visit(perm);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, visit);
        perm.swap(at, i);
    }
}

/// The lexicographically least induced embedding of `p` in `g`, as the map
/// pattern vertex -> host vertex.
pub fn contains_induced(g: &Graph, p: &Pattern) -> Option<Vec<usize>> {
    let k = p.order();
    if k > g.order() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    if extend_least(g, p, &mut map, VertexSet::EMPTY) {
        Some(map)
    } else {
        None
    }
}

fn extend_least(g: &Graph, p: &Pattern, map: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = map.len();
    if i == p.order() {
        return true;
    }
    let mut cand = g.vertices().difference(used);
    for (j, &hj) in map.iter().enumerate() {
        if p.earlier[i].contains(j) {
            cand = cand.intersection(g.neighbors(hj));
        } else {
            cand = cand.difference(g.neighbors(hj));
        }
    }
    for h in cand {
        map.push(h);
        if extend_least(g, p, map, used.with(h)) {
            return true;
        }
        map.pop();
    }
    false
}

/// Whether some induced copy of `p` in `g` uses vertex `v`.
pub fn contains_induced_through(g: &Graph, p: &Pattern, v: usize) -> bool {
    if p.order() > g.order() {
        return false;
    }
    let mut image = [0usize; crate::graph::CAPACITY];
    p.anchored.iter().any(|plan| {
        image[0] = v;
        extend_anchored(g, plan, &mut image, 1, VertexSet::singleton(v))
    })
}

fn extend_anchored(
    g: &Graph,
    plan: &AnchoredPlan,
    image: &mut [usize; crate::graph::CAPACITY],
    step: usize,
    used: VertexSet,
) -> bool {
    if step == plan.order.len() {
        return true;
    }
    let adjacent = plan.adjacent_steps[step];
    let mut cand = g.vertices().difference(used);
    for t in 0..step {
        let nb = g.neighbors(image[t]);
        cand = if adjacent.contains(t) { cand.intersection(nb) } else { cand.difference(nb) };
        if cand.is_empty() {
            return false;
        }
    }
    for h in cand {
        image[step] = h;
        if extend_anchored(g, plan, image, step + 1, used.with(h)) {
            return true;
        }
    }
    false
}

/// The first pattern of the list with an induced copy in `g`, with its least
/// witness.
pub fn first_forbidden_witness<'p>(g: &Graph, forbidden: &'p [Pattern]) -> Option<(&'p Pattern, Vec<usize>)> {
    forbidden.iter().find_map(|p| contains_induced(g, p).map(|w| (p, w)))
}

/// `g` has no induced copy of any listed pattern.
pub fn is_free_of(g: &Graph, forbidden: &[Pattern]) -> bool {
    forbidden.iter().all(|p| contains_induced(g, p).is_none())
}

/// No induced copy of any listed pattern passes through `v`. For a graph
/// whose `v`-deleted subgraph is already free, this decides freeness.
pub fn is_free_through(g: &Graph, forbidden: &[Pattern], v: usize) -> bool {
    forbidden.iter().all(|p| !contains_induced_through(g, p, v))
}

pub fn is_claw_free(g: &Graph) -> bool {
    claw_centered_anywhere(g).is_none()
}

fn claw_centered_anywhere(g: &Graph) -> Option<[usize; 3]> {
    (0..g.order()).find_map(|x| independent_triple(g, g.neighbors(x)))
}

/// Three pairwise nonadjacent vertices of `s`, least in lexicographic order.
fn independent_triple(g: &Graph, s: VertexSet) -> Option<[usize; 3]> {
    for a in s {
        let rest_a = s.difference(g.closed_neighbors(a)).difference(VertexSet::full(a + 1));
        for b in rest_a {
            let rest_b = rest_a.difference(g.closed_neighbors(b)).difference(VertexSet::full(b + 1));
            if let Some(c) = rest_b.first() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// A hamiltonian path of `g`, if there is one.
pub fn is_traceable(g: &Graph) -> Option<Vec<usize>> {
    traceable_within(g, g.vertices())
}

/// A path through exactly the vertices of `s` using edges of `G[s]`.
pub(crate) fn traceable_within(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    let start = s.first()?;
    if crate::graph::connectivity_reach(g, start, s) != s {
        return None;
    }
    let mut starts: Vec<usize> = s.to_vec();
    starts.sort_by_key(|&v| (g.neighbors(v).intersection(s).len(), v));
    let mut path = Vec::with_capacity(s.len());
    for v in starts {
        path.push(v);
        if extend_path(g, s, &mut path, s.without(v)) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn extend_path(g: &Graph, s: VertexSet, path: &mut Vec<usize>, left: VertexSet) -> bool {
    if left.is_empty() {
        return true;
    }
    let last = *path.last().expect("nonempty path");
    // every remaining vertex must still be reachable from the path end
    if crate::graph::connectivity_reach(g, last, left.with(last)) != left.with(last) {
        return false;
    }
    let mut next: Vec<usize> = g.neighbors(last).intersection(left).to_vec();
    next.sort_by_key(|&v| (g.neighbors(v).intersection(left).len(), v));
    for w in next {
        path.push(w);
        if extend_path(g, s, path, left.without(w)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Shape of `G[N(x)]`: in a claw-free graph it is connected and traceable or
/// the disjoint union of two cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NeighborhoodShape {
    /// A hamiltonian path of `G[N(x)]`. Empty when `N(x)` is empty.
    TraceableConnected { path: Vec<usize> },
    /// `N(x)` split into two cliques with no edges between them.
    TwoDisjointCliques { first: VertexSet, second: VertexSet },
    /// Three pairwise nonadjacent neighbors, i.e. a claw centered at `x`.
    Other { independent_triple: [usize; 3] },
}

pub fn neighborhood_structure(g: &Graph, x: usize) -> Result<NeighborhoodShape> {
    if x >= g.order() {
        return Err(GraphError::InvalidVertex { vertex: x, order: g.order() });
    }
    let nx = g.neighbors(x);
    if nx.is_empty() {
        return Ok(NeighborhoodShape::TraceableConnected { path: Vec::new() });
    }
    let sub = crate::graph::induced_subgraph(g, nx);
    let members = nx.to_vec();
    if is_connected(&sub) {
        if let Some(path) = traceable_within(g, nx) {
            return Ok(NeighborhoodShape::TraceableConnected { path });
        }
    } else {
        let comps = components(&sub);
        let lift = |c: VertexSet| c.iter().map(|i| members[i]).collect::<VertexSet>();
        if comps.len() == 2 && comps.iter().all(|&c| sub.edges_within(c) == c.len() * (c.len() - 1) / 2) {
            return Ok(NeighborhoodShape::TwoDisjointCliques {
                first: lift(comps[0]),
                second: lift(comps[1]),
            });
        }
    }
    match independent_triple(g, nx) {
        Some(t) => Ok(NeighborhoodShape::Other { independent_triple: t }),
        // a connected graph with independence number at most 2 is traceable
        None => unreachable!("neighborhood of {x} is neither traceable nor two cliques yet has no independent triple"),
    }
}

impl NeighborhoodShape {
    /// Checks the witness against `g` and `x`.
    pub fn verify(&self, g: &Graph, x: usize) -> bool {
        let nx = g.neighbors(x);
        match self {
            NeighborhoodShape::TraceableConnected { path } => {
                path.len() == nx.len()
                    && path.iter().copied().collect::<VertexSet>() == nx
                    && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
            }
            NeighborhoodShape::TwoDisjointCliques { first, second } => {
                let is_clique = |c: VertexSet| g.edges_within(c) == c.len() * c.len().saturating_sub(1) / 2;
                !first.is_empty()
                    && !second.is_empty()
                    && first.intersection(*second).is_empty()
                    && first.union(*second) == nx
                    && is_clique(*first)
                    && is_clique(*second)
                    && first.iter().all(|v| g.neighbors(v).intersection(*second).is_empty())
            }
            NeighborhoodShape::Other { independent_triple: [a, b, c] } => {
                [a, b, c].iter().all(|&&v| nx.contains(v))
                    && !g.has_edge(*a, *b)
                    && !g.has_edge(*a, *c)
                    && !g.has_edge(*b, *c)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cartesian_product;

    fn pat(s: &str) -> Pattern {
        make_pattern(s.parse().unwrap()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        standard_graph(StandardKind::Cycle, n).unwrap()
    }

    fn complete(n: usize) -> Graph {
        standard_graph(StandardKind::Complete, n).unwrap()
    }

    #[test]
    fn pattern_shapes() {
        let z1 = pat("z1");
        assert_eq!((z1.graph.order(), z1.graph.size()), (4, 4));
        let z2 = pat("Z2");
        assert_eq!((z2.graph.order(), z2.graph.size()), (5, 5));
        let p4 = pat("p4");
        assert_eq!((p4.graph.order(), p4.graph.size()), (4, 3));
        let claw = pat("CLAW");
        assert_eq!(claw.graph.degree_sequence(), vec![1, 1, 1, 3]);
        assert!(make_pattern(PatternKind::Path(0)).is_err());
        assert!(make_pattern(PatternKind::Z(0)).is_err());
        assert!("q3".parse::<PatternKind>().is_err());
        assert!("p0".parse::<PatternKind>().is_err());
        assert_eq!("p12".parse::<PatternKind>().unwrap(), PatternKind::Path(12));
    }

    #[test]
    fn orbit_representatives_of_patterns() {
        assert_eq!(pat("claw").anchored.len(), 2);
        assert_eq!(pat("p4").anchored.len(), 2);
        assert_eq!(pat("p5").anchored.len(), 3);
        assert_eq!(pat("z1").anchored.len(), 3);
        assert_eq!(pat("z2").anchored.len(), 4);
    }

    #[test]
    fn least_witnesses() {
        assert_eq!(contains_induced(&cycle(6), &pat("p4")), Some(vec![0, 1, 2, 3]));
        assert_eq!(contains_induced(&complete(4), &pat("z1")), None);
        let star = pat("claw").graph.clone();
        assert_eq!(contains_induced(&star, &pat("claw")), Some(vec![0, 1, 2, 3]));
        let k3 = complete(3);
        let rook = cartesian_product(&k3, &k3).unwrap();
        assert_eq!(contains_induced(&rook, &pat("z2")), None);
        assert!(contains_induced(&rook, &pat("z1")).is_some());
    }

    #[test]
    fn first_witness_respects_list_order() {
        let list = [pat("claw"), pat("p5")];
        let (p, w) = first_forbidden_witness(&cycle(7), &list).unwrap();
        assert_eq!(p.kind, PatternKind::Path(5));
        assert_eq!(w, vec![0, 1, 2, 3, 4]);

        let prism = cartesian_product(&complete(3), &complete(2)).unwrap();
        assert!(first_forbidden_witness(&prism, &[pat("claw"), pat("z2")]).is_none());

        let star = pat("claw").graph.clone();
        let only_claw = [pat("claw")];
        let (p, w) = first_forbidden_witness(&star, &only_claw).unwrap();
        assert_eq!((p.kind, w), (PatternKind::Claw, vec![0, 1, 2, 3]));
    }

    #[test]
    fn through_vertex_agrees_with_deletion() {
        let patterns = [pat("claw"), pat("p4"), pat("p5"), pat("z1"), pat("z2")];
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (1, 5)])
            .unwrap();
        for p in &patterns {
            for v in 0..g.order() {
                let whole = contains_induced(&g, p).is_some();
                let without = contains_induced(&g.remove_vertex(v), p).is_some();
                let through = contains_induced_through(&g, p, v);
                // a copy exists iff it avoids v or passes through v
                assert_eq!(whole, without || through, "{} at {v}", p.name());
            }
        }
    }

    #[test]
    fn traceability() {
        let p5 = standard_graph(StandardKind::Path, 5).unwrap();
        let path = is_traceable(&p5).unwrap();
        assert!(path == vec![0, 1, 2, 3, 4] || path == vec![4, 3, 2, 1, 0]);
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_traceable(&two_k2), None);
        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let w = is_traceable(&k23).unwrap();
        assert_eq!(w.len(), 5);
        assert!(w.windows(2).all(|e| k23.has_edge(e[0], e[1])));
        let k13 = pat("claw").graph.clone();
        assert_eq!(is_traceable(&k13), None);
    }

    #[test]
    fn neighborhood_shapes() {
        let c7 = cycle(7);
        for v in 0..7 {
            let shape = neighborhood_structure(&c7, v).unwrap();
            assert!(matches!(shape, NeighborhoodShape::TwoDisjointCliques { .. }));
            assert!(shape.verify(&c7, v));
        }
        let prism = cartesian_product(&complete(3), &complete(2)).unwrap();
        for v in 0..6 {
            let shape = neighborhood_structure(&prism, v).unwrap();
            match &shape {
                NeighborhoodShape::TwoDisjointCliques { first, second } => {
                    let mut sizes = [first.len(), second.len()];
                    sizes.sort();
                    assert_eq!(sizes, [1, 2]);
                }
                other => panic!("unexpected {other:?}"),
            }
            assert!(shape.verify(&prism, v));
        }
        let star = pat("claw").graph.clone();
        let shape = neighborhood_structure(&star, 0).unwrap();
        assert_eq!(shape, NeighborhoodShape::Other { independent_triple: [1, 2, 3] });
        assert!(shape.verify(&star, 0));
        let k5 = complete(5);
        assert!(matches!(
            neighborhood_structure(&k5, 0).unwrap(),
            NeighborhoodShape::TraceableConnected { .. }
        ));
        assert!(neighborhood_structure(&k5, 5).is_err());
    }

    #[test]
    fn claw_free_check() {
        assert!(is_claw_free(&cycle(9)));
        assert!(!is_claw_free(&pat("claw").graph));
    }
}
