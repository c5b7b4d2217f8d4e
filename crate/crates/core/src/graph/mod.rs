//! Simple undirected graphs on at most [`CAPACITY`] vertices, stored as one
//! neighbor bit set per vertex.

mod canon;
mod connectivity;
mod edge_list;
mod graph6;
mod set;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalCode, MAX_CANONICAL_ORDER};
pub use connectivity::{components, cut_vertices, is_connected, is_two_connected};
pub use edge_list::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6, GRAPH6_MAX_ORDER};
pub use set::VertexSet;
pub(crate) use connectivity::reach as connectivity_reach;

use crate::error::{GraphError, Result};

/// Maximum number of vertices in a [`Graph`].
pub const CAPACITY: usize = 64;

/// A simple undirected graph.
///
/// Invariants: adjacency is symmetric and irreflexive, and every neighbor
/// index is below [`Graph::order`]. All constructors maintain them.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Named families produced by [`standard_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Complete,
    Cycle,
    Path,
    /// `K_n` with the edge `(0, 1)` removed.
    CompleteMinusEdge,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph { adj: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating the invariants.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_capacity(n)?;
        let all = VertexSet::full(n);
        for (v, &row) in adj.iter().enumerate() {
            if let Some(w) = row.difference(all).first() {
                return Err(GraphError::InvalidVertex { vertex: w, order: n });
            }
            if row.contains(v) {
                return Err(GraphError::SelfLoop { vertex: v });
            }
            for w in row {
                if !adj[w].contains(v) {
                    return Err(GraphError::InvalidParameter(format!(
                        "adjacency is not symmetric: {v}-{w}"
                    )));
                }
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|s| s.len()).collect();
        d.sort_unstable();
        d
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Appends an isolated vertex.
    pub(crate) fn push_isolated(&mut self) -> Result<usize> {
        check_capacity(self.order() + 1)?;
        self.adj.push(VertexSet::EMPTY);
        Ok(self.adj.len() - 1)
    }

    /// Rewires the last vertex to be adjacent to exactly `s` (which must not
    /// contain the last vertex itself).
    pub(crate) fn set_last_neighbors(&mut self, s: VertexSet) {
        let last = self.adj.len() - 1;
        for u in self.adj[last] {
            self.adj[u].remove(last);
        }
        for u in s {
            self.adj[u].insert(last);
        }
        self.adj[last] = s;
    }

    /// Returns a copy with one extra vertex `n` adjacent to exactly `neighbors`.
    pub fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Self> {
        let n = self.order();
        check_capacity(n + 1)?;
        if let Some(w) = neighbors.difference(self.vertices()).first() {
            return Err(GraphError::InvalidVertex { vertex: w, order: n });
        }
        let mut adj = self.adj.clone();
        for u in neighbors {
            adj[u].insert(n);
        }
        adj.push(neighbors);
        Ok(Graph { adj })
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = row.iter().map(|w| perm[w]).collect();
        }
        Graph { adj }
    }

    /// Graph with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        induced_subgraph(self, self.vertices().without(v))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > CAPACITY {
        Err(GraphError::Capacity { requested: n, capacity: CAPACITY })
    } else {
        Ok(())
    }
}

/// The named graph of the given kind on vertices `0..n` in natural order.
pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("order must be at least 1".into()));
    }
    let mut g = Graph::empty(n)?;
    match kind {
        StandardKind::Complete | StandardKind::CompleteMinusEdge => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge_unchecked(u, v);
                }
            }
            if kind == StandardKind::CompleteMinusEdge {
                if n < 2 {
                    return Err(GraphError::InvalidParameter(
                        "complete_minus_edge needs at least 2 vertices".into(),
                    ));
                }
                g.adj[0].remove(1);
                g.adj[1].remove(0);
            }
        }
        StandardKind::Path => {
            for v in 1..n {
                g.add_edge_unchecked(v - 1, v);
            }
        }
        StandardKind::Cycle => {
            if n < 3 {
                return Err(GraphError::InvalidParameter(format!(
                    "a cycle needs at least 3 vertices, got {n}"
                )));
            }
            for v in 0..n {
                g.add_edge_unchecked(v, (v + 1) % n);
            }
        }
    }
    Ok(g)
}

/// Cartesian product `g □ h`; vertex `(a, b)` has index `a * h.order() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.order(), h.order());
    let mut p = Graph::empty(gn * hn)?;
    for a in 0..gn {
        for b in 0..hn {
            let v = a * hn + b;
            for b2 in h.neighbors(b) {
                p.adj[v].insert(a * hn + b2);
            }
            for a2 in g.neighbors(a) {
                p.adj[v].insert(a2 * hn + b);
            }
        }
    }
    Ok(p)
}

/// `G[S]`, relabeled so the i-th smallest member of `s` becomes vertex `i`.
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Graph {
    let members: Vec<usize> = s.intersection(g.vertices()).to_vec();
    let mut index = [usize::MAX; CAPACITY];
    for (i, &v) in members.iter().enumerate() {
        index[v] = i;
    }
    let adj = members
        .iter()
        .map(|&v| g.adj[v].intersection(s).iter().map(|w| index[w]).collect())
        .collect();
    Graph { adj }
}
