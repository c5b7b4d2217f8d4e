//! Brute-force reference implementations. They share nothing with the
//! library beyond the `Graph` type and are deliberately naive.

#![allow(dead_code)]

use chordck::Graph;

/// Every permutation of `0..k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// All `k`-element subsets of `0..n` as sorted vectors.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).contains(v)
}

pub fn edge_count(g: &Graph) -> usize {
    let n = g.order();
    (0..n).map(|u| (u + 1..n).filter(|&v| adjacent(g, u, v)).count()).sum()
}

/// The graph on `0..n` whose edges are the set bits of `mask`, numbered in
/// the order (0,1), (0,2), (1,2), (0,3), ...
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let bits = n * n.saturating_sub(1) / 2;
    (0u64..1 << bits).map(move |m| graph_from_mask(n, m))
}

/// graph6 straight from its definition: `N(n)` then the upper triangle
/// column by column in 6-bit groups, each plus 63.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(adjacent(g, u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for &b in chunk {
            x = x << 1 | b as u8;
        }
        s.push((x + 63) as char);
    }
    s
}

/// Upper-triangle bits of `g` relabeled by `p` (vertex `v` becomes `p[v]`).
fn relabeled_mask(g: &Graph, p: &[usize]) -> u64 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &pv) in p.iter().enumerate() {
        inv[pv] = v;
    }
    let mut mask = 0u64;
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if adjacent(g, inv[u], inv[v]) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// A complete isomorphism invariant: the largest relabeled edge mask.
pub fn brute_key(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| relabeled_mask(g, p)).max().unwrap_or(0)
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || edge_count(g) != edge_count(h) {
        return false;
    }
    let target = relabeled_mask(h, &(0..n).collect::<Vec<_>>());
    permutations(n).iter().any(|p| relabeled_mask(g, p) == target)
}

pub fn connected(g: &Graph, removed: Option<usize>) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|&v| Some(v) != removed).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for &v in &alive {
            if !seen[v] && adjacent(g, u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

pub fn two_connected(g: &Graph) -> bool {
    g.order() >= 3 && connected(g, None) && (0..g.order()).all(|v| connected(g, Some(v)))
}

/// The forbidden graphs, written out by hand.
pub fn pattern_graph(name: &str) -> Graph {
    let (n, edges): (usize, Vec<(usize, usize)>) = match name {
        "claw" => (4, vec![(0, 1), (0, 2), (0, 3)]),
        "p4" => (4, vec![(0, 1), (1, 2), (2, 3)]),
        "p5" => (5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
        "p6" => (6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]),
        "z1" => (4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]),
        "z2" => (5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
        _ => panic!("no pattern {name}"),
    };
    Graph::from_edge_list(n, &edges).unwrap()
}

pub const PATTERN_NAMES: [&str; 6] = ["claw", "p4", "p5", "p6", "z1", "z2"];

/// Whether some vertex subset of `g` induces a copy of `h`; with `through`,
/// only copies containing that vertex count.
pub fn brute_contains(g: &Graph, h: &Graph, through: Option<usize>, perms: &[Vec<usize>]) -> bool {
    let k = h.order();
    if k > g.order() {
        return false;
    }
    subsets(g.order(), k).iter().any(|s| {
        through.is_none_or(|v| s.contains(&v))
            && perms.iter().any(|p| {
                (0..k).all(|a| (a + 1..k).all(|b| adjacent(h, a, b) == adjacent(g, s[p[a]], s[p[b]])))
            })
    })
}

/// `(some m-cycle exists, some m-cycle has a chord)`.
pub fn brute_cycles(g: &Graph, m: usize) -> (bool, bool) {
    let mut any = false;
    let perms = permutations(m - 1);
    for s in subsets(g.order(), m) {
        let chorded_here = {
            let inner: usize = (0..m).map(|i| (i + 1..m).filter(|&j| adjacent(g, s[i], s[j])).count()).sum();
            inner > m
        };
        let hamiltonian = perms.iter().any(|p| {
            let seq: Vec<usize> = std::iter::once(s[0]).chain(p.iter().map(|&i| s[i + 1])).collect();
            (0..m).all(|i| adjacent(g, seq[i], seq[(i + 1) % m]))
        });
        if hamiltonian {
            any = true;
            if chorded_here {
                return (true, true);
            }
        }
    }
    (any, false)
}
