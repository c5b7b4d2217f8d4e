use super::{Graph, VertexSet};

/// Connected components as vertex sets, ordered by least member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut unseen = g.vertices();
    let mut out = Vec::new();
    while let Some(start) = unseen.first() {
        let comp = reach(g, start, unseen);
        unseen = unseen.difference(comp);
        out.push(comp);
    }
    out
}

/// Vertices reachable from `start` inside `within`.
pub(crate) fn reach(g: &Graph, start: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            next = next.union(g.neighbors(v));
        }
        frontier = next.intersection(within).difference(seen);
        seen = seen.union(frontier);
    }
    seen
}

/// The null graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    match g.vertices().first() {
        None => true,
        Some(s) => reach(g, s, g.vertices()) == g.vertices(),
    }
}

/// Articulation points via depth-first low-link, over every component.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = VertexSet::EMPTY;
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // explicit stack of (vertex, parent, neighbors not yet scanned)
        let mut stack = vec![(root, usize::MAX, g.neighbors(root))];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;

        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(w) = top.2.first() {
                top.2.remove(w);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, g.neighbors(w)));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        cut.insert(parent);
                    }
                }
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    cut
}

/// Connected, at least 3 vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && is_connected(g) && cut_vertices(g).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{standard_graph, StandardKind};

    fn by_deletion(g: &Graph) -> VertexSet {
        let base = components(g).len();
        (0..g.order())
            .filter(|&v| components(&g.remove_vertex(v)).len() > base)
            .collect()
    }

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let bowtie =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(cut_vertices(&bowtie).to_vec(), vec![2]);
        assert!(!is_two_connected(&bowtie));
    }

    #[test]
    fn cycles_and_paths() {
        let c6 = standard_graph(StandardKind::Cycle, 6).unwrap();
        assert!(cut_vertices(&c6).is_empty());
        let p4 = standard_graph(StandardKind::Path, 4).unwrap();
        assert_eq!(cut_vertices(&p4).to_vec(), vec![1, 2]);

        assert!(is_two_connected(&standard_graph(StandardKind::Cycle, 4).unwrap()));
        assert!(!is_two_connected(&p4));
        assert!(!is_two_connected(&standard_graph(StandardKind::Complete, 2).unwrap()));
    }

    #[test]
    fn disconnected_graphs() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (4, 5), (5, 6)]).unwrap();
        assert_eq!(components(&g).len(), 3);
        assert_eq!(cut_vertices(&g).to_vec(), vec![1, 5]);
        assert_eq!(cut_vertices(&g), by_deletion(&g));
        assert!(is_connected(&Graph::empty(0).unwrap()));
        assert!(!is_connected(&Graph::empty(2).unwrap()));
    }

    #[test]
    fn low_link_matches_deletion_on_a_mixed_graph() {
        let g = Graph::from_edge_list(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7)],
        )
        .unwrap();
        assert_eq!(cut_vertices(&g), by_deletion(&g));
        assert_eq!(cut_vertices(&g).to_vec(), vec![2, 3, 5, 6]);
    }
}
