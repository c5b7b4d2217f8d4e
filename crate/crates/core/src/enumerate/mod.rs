//! Isomorph-free generation of hereditary graph classes.
//!
//! Level `l` holds one canonical representative of every graph of order `l`
//! in the class (connected graphs only, unless the target connectivity is
//! `Any`). Level `l + 1` is obtained by attaching a new vertex to every parent
//! with every admissible neighborhood, keeping children with no forbidden
//! induced subgraph through the new vertex, and deduplicating by canonical
//! code. Since the classes are closed under induced subgraphs, every member of
//! order `l + 1` has a parent at level `l`: for connected targets delete a
//! non-cut vertex, otherwise any vertex.

mod sample;

pub use sample::{sample_class, SampleOptions, Sampled};

use std::collections::HashSet;
use std::io::BufRead;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{canonical_form, is_connected, is_two_connected, parse_graph6, CanonicalCode, Graph, VertexSet};
use crate::par::{self, Execution};
use crate::patterns::{is_free_through, Pattern, PatternKind};

/// Largest order for which generation without any pruning rule is allowed.
pub const UNRESTRICTED_MAX_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    #[default]
    Any,
    Connected,
    TwoConnected,
}

/// A hereditary class: graphs of `target_order` with no induced copy of any
/// forbidden pattern, optionally with bounded maximum degree, filtered by
/// connectivity at the target order.
#[derive(Clone, Debug)]
pub struct ClassSpec {
    pub target_order: usize,
    pub forbidden: Vec<Pattern>,
    pub connectivity: Connectivity,
    pub max_degree: Option<usize>,
}

impl ClassSpec {
    pub fn new(target_order: usize, forbidden: Vec<Pattern>, connectivity: Connectivity) -> Self {
        ClassSpec { target_order, forbidden, connectivity, max_degree: None }
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    fn validate(&self) -> Result<(), EnumerateError> {
        if self.target_order == 0 || self.target_order > crate::graph::MAX_CANONICAL_ORDER {
            return Err(GraphError::InvalidParameter(format!(
                "target order {} outside 1..={}",
                self.target_order,
                crate::graph::MAX_CANONICAL_ORDER
            ))
            .into());
        }
        if let Some(p) = self.forbidden.iter().find(|p| p.order() < 2) {
            return Err(GraphError::InvalidParameter(format!(
                "forbidden pattern {} has fewer than 2 vertices",
                p.name()
            ))
            .into());
        }
        if self.forbidden.is_empty() && self.max_degree.is_none() && self.target_order > UNRESTRICTED_MAX_ORDER
        {
            return Err(EnumerateError::Refused { order: self.target_order });
        }
        Ok(())
    }

    /// Whether level graphs must be connected.
    fn connected_levels(&self) -> bool {
        self.connectivity != Connectivity::Any
    }

    /// Membership test applied to the final level.
    pub fn accepts_at_target(&self, g: &Graph) -> bool {
        match self.connectivity {
            Connectivity::Any => true,
            Connectivity::Connected => is_connected(g),
            Connectivity::TwoConnected => is_two_connected(g),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct GenOptions {
    pub execution: Execution,
    /// Abort with [`EnumerateError::Incomplete`] once this instant passes.
    pub deadline: Option<Instant>,
    /// Abort when a level would hold more graphs than this.
    pub max_level_size: Option<usize>,
}

impl GenOptions {
    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.deadline = Some(Instant::now() + budget);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub order: usize,
    /// Distinct graphs kept at this order.
    pub kept: usize,
    /// Children built from parents of the previous level.
    pub candidates: u64,
    /// Children rejected by a forbidden pattern or the degree bound.
    pub pruned: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct GenStats {
    pub levels: Vec<LevelStats>,
    /// Graphs emitted at the target order after the connectivity filter.
    pub emitted: usize,
    pub seconds: f64,
}

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("refusing unrestricted generation at order {order} (limit {UNRESTRICTED_MAX_ORDER}); forbid a pattern or bound the degree")]
    Refused { order: usize },

    #[error("generation incomplete at order {order}: {reason}")]
    Incomplete { order: usize, reason: String, stats: GenStats },
}

/// Canonical representatives of a class, sorted by canonical code.
#[derive(Clone, Debug)]
pub struct GeneratedClass {
    pub codes: Vec<CanonicalCode>,
    pub stats: GenStats,
}

impl GeneratedClass {
    /// The representatives themselves (the canonically labeled graphs).
    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.codes.iter().map(|c| c.to_graph())
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

/// Level-by-level generator; reusable across several target orders.
pub struct ClassGenerator {
    forbidden: Vec<Pattern>,
    aug: Augmenter,
    order: usize,
    level: Vec<CanonicalCode>,
    stats: GenStats,
    started: Instant,
}

impl ClassGenerator {
    pub fn new(spec: &ClassSpec) -> Result<Self, EnumerateError> {
        spec.validate()?;
        // every pattern has at least 2 vertices, so K1 is always a member
        let level = vec![canonical_form(&Graph::empty(1)?)?];
        Ok(ClassGenerator {
            forbidden: spec.forbidden.clone(),
            aug: Augmenter::for_spec(spec),
            order: 1,
            stats: GenStats {
                levels: vec![LevelStats { order: 1, kept: level.len(), candidates: 0, pruned: 0 }],
                ..GenStats::default()
            },
            level,
            started: Instant::now(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Current level, sorted by canonical code.
    pub fn level(&self) -> &[CanonicalCode] {
        &self.level
    }

    pub fn stats(&self) -> &GenStats {
        &self.stats
    }

    pub fn forbidden(&self) -> &[Pattern] {
        &self.forbidden
    }

    /// Builds the next level.
    pub fn advance(&mut self, opts: &GenOptions) -> Result<(), EnumerateError> {
        let next_order = self.order + 1;
        if next_order > crate::graph::MAX_CANONICAL_ORDER {
            return Err(GraphError::Capacity {
                requested: next_order,
                capacity: crate::graph::MAX_CANONICAL_ORDER,
            }
            .into());
        }
        let aborted = AtomicBool::new(false);
        let acc = par::fold_merge(
            opts.execution,
            &self.level,
            Expansion::default,
            |mut acc, code| {
                if aborted.load(Ordering::Relaxed) {
                    return acc;
                }
                if opts.deadline.is_some_and(|d| Instant::now() > d)
                    || opts.max_level_size.is_some_and(|m| acc.children.len() > m)
                {
                    aborted.store(true, Ordering::Relaxed);
                    return acc;
                }
                self.aug.expand(&code.to_graph(), &mut acc);
                acc
            },
            Expansion::merge,
        );
        let level_stats = LevelStats {
            order: next_order,
            kept: acc.children.len(),
            candidates: acc.candidates,
            pruned: acc.pruned,
        };
        let over_size = opts.max_level_size.is_some_and(|m| acc.children.len() > m);
        if aborted.load(Ordering::Relaxed) || over_size {
            let mut stats = self.stats.clone();
            stats.levels.push(level_stats);
            stats.seconds = self.started.elapsed().as_secs_f64();
            let reason = if over_size || opts.deadline.is_none_or(|d| Instant::now() <= d) {
                "level size limit exceeded".to_string()
            } else {
                "time budget exhausted".to_string()
            };
            return Err(EnumerateError::Incomplete { order: next_order, reason, stats });
        }
        let mut level: Vec<CanonicalCode> = acc.children.into_iter().collect();
        level.sort_unstable();
        self.level = level;
        self.order = next_order;
        self.stats.levels.push(level_stats);
        self.stats.seconds = self.started.elapsed().as_secs_f64();
        Ok(())
    }

    /// Advances until the current level has the given order.
    pub fn advance_to(&mut self, order: usize, opts: &GenOptions) -> Result<(), EnumerateError> {
        while self.order < order {
            self.advance(opts)?;
        }
        Ok(())
    }
}

/// The rules for attaching a new vertex to a class member.
#[derive(Clone, Debug)]
pub(crate) struct Augmenter {
    claw_forbidden: bool,
    others: Vec<Pattern>,
    connected: bool,
    max_degree: Option<usize>,
}

impl Augmenter {
    pub(crate) fn for_spec(spec: &ClassSpec) -> Self {
        Augmenter {
            claw_forbidden: spec.forbidden.iter().any(|p| p.kind == PatternKind::Claw),
            others: spec.forbidden.iter().filter(|p| p.kind != PatternKind::Claw).cloned().collect(),
            connected: spec.connected_levels(),
            max_degree: spec.max_degree,
        }
    }

    /// Whether the last vertex `v` of `child` may be attached as it is.
    pub(crate) fn accepts(&self, child: &Graph, v: usize) -> bool {
        !(self.connected && child.neighbors(v).is_empty())
            && !(self.claw_forbidden && claw_through_new_vertex(child, v))
            && is_free_through(child, &self.others, v)
    }

    /// Attaches a new vertex to `parent` in every admissible way.
    fn expand(&self, parent: &Graph, acc: &mut Expansion) {
        let mut child = parent.clone();
        let v = child.push_isolated().expect("order checked in advance()");
        let mut subsets = Vec::new();
        self.admissible_neighborhoods(parent, 0, VertexSet::EMPTY, &mut subsets);
        for s in subsets {
            if self.connected && s.is_empty() {
                continue;
            }
            acc.candidates += 1;
            child.set_last_neighbors(s);
            if !self.accepts(&child, v) {
                acc.pruned += 1;
                continue;
            }
            let code = canonical_form(&child).expect("order within canonical range");
            acc.children.insert(code);
        }
    }

    /// Neighborhood sets for the new vertex, built vertex by vertex so that
    /// monotone violations (degree bound, a claw centered at the new vertex)
    /// cut whole subtrees.
    pub(crate) fn admissible_neighborhoods(&self, parent: &Graph, next: usize, s: VertexSet, out: &mut Vec<VertexSet>) {
        if next == parent.order() {
            out.push(s);
            return;
        }
        self.admissible_neighborhoods(parent, next + 1, s, out);
        if let Some(d) = self.max_degree {
            if s.len() + 1 > d || parent.degree(next) + 1 > d {
                return;
            }
        }
        if self.claw_forbidden {
            // an independent triple in s + next would center a claw at the new vertex
            let rest = s.difference(parent.closed_neighbors(next));
            if rest.iter().any(|a| !rest.difference(parent.closed_neighbors(a)).is_empty()) {
                return;
            }
        }
        self.admissible_neighborhoods(parent, next + 1, s.with(next), out);
    }
}

/// A claw with the new vertex `v` as a leaf: some neighbor `u` of `v` has two
/// nonadjacent neighbors outside `N[v]`. Claws centered at `v` are excluded
/// while choosing the neighborhood.
fn claw_through_new_vertex(g: &Graph, v: usize) -> bool {
    let nv = g.closed_neighbors(v);
    g.neighbors(v).iter().any(|u| {
        let leaves = g.neighbors(u).difference(nv);
        leaves.iter().any(|a| !leaves.difference(g.closed_neighbors(a)).is_empty())
    })
}

#[derive(Default)]
struct Expansion {
    children: HashSet<CanonicalCode>,
    candidates: u64,
    pruned: u64,
}

impl Expansion {
    fn merge(mut a: Self, mut b: Self) -> Self {
        if a.children.len() < b.children.len() {
            std::mem::swap(&mut a, &mut b);
        }
        a.children.extend(b.children);
        a.candidates += b.candidates;
        a.pruned += b.pruned;
        a
    }
}

/// One representative per isomorphism class of the class described by
/// `spec`, sorted by canonical code.
pub fn generate_class(spec: &ClassSpec, opts: &GenOptions) -> Result<GeneratedClass, EnumerateError> {
    let mut gen = ClassGenerator::new(spec)?;
    gen.advance_to(spec.target_order, opts)?;
    Ok(finish(spec, &gen))
}

/// Applies the target-order connectivity filter to the generator's level.
pub fn finish(spec: &ClassSpec, gen: &ClassGenerator) -> GeneratedClass {
    let codes: Vec<CanonicalCode> = match spec.connectivity {
        Connectivity::TwoConnected => {
            gen.level().iter().filter(|c| spec.accepts_at_target(&c.to_graph())).cloned().collect()
        }
        _ => gen.level().to_vec(),
    };
    let mut stats = gen.stats().clone();
    stats.emitted = codes.len();
    GeneratedClass { codes, stats }
}

/// A graph6 line that failed to decode.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct LineError {
    pub line: usize,
    #[source]
    pub source: GraphError,
}

/// Decodes one graph per non-blank line. I/O errors are reported as parse
/// errors at offset 0 of the failing line.
pub fn stream_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, LineError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        match line {
            Err(e) => Some(Err(LineError {
                line: line_no,
                source: GraphError::Parse { offset: 0, reason: e.to_string() },
            })),
            Ok(text) if text.trim().is_empty() => None,
            Ok(text) => Some(parse_graph6(text.trim()).map_err(|source| LineError { line: line_no, source })),
        }
    })
}

/// Reads a whole graph6 stream. With `skip_bad`, malformed lines are
/// collected as diagnostics; otherwise the first one is returned as an error.
pub fn read_graph6<R: BufRead>(reader: R, skip_bad: bool) -> Result<(Vec<Graph>, Vec<LineError>), LineError> {
    let mut graphs = Vec::new();
    let mut diagnostics = Vec::new();
    for item in stream_graph6(reader) {
        match item {
            Ok(g) => graphs.push(g),
            Err(e) if skip_bad => diagnostics.push(e),
            Err(e) => return Err(e),
        }
    }
    Ok((graphs, diagnostics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::make_pattern;

    fn pats(names: &[&str]) -> Vec<Pattern> {
        names.iter().map(|n| make_pattern(n.parse().unwrap()).unwrap()).collect()
    }

    fn run(n: usize, names: &[&str], c: Connectivity) -> GeneratedClass {
        generate_class(&ClassSpec::new(n, pats(names), c), &GenOptions::default()).unwrap()
    }

    #[test]
    fn only_triangle_is_two_connected_on_three_vertices() {
        let class = run(3, &["p6"], Connectivity::TwoConnected);
        assert_eq!(class.codes.len(), 1);
        let g = class.graphs().next().unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn claw_free_small_counts() {
        // graphs on 4 vertices: 11 total, the claw is the only one excluded
        assert_eq!(run(4, &["claw"], Connectivity::Any).len(), 10);
        // connected graphs on 4 vertices: 6, minus the claw
        assert_eq!(run(4, &["claw"], Connectivity::Connected).len(), 5);
    }

    #[test]
    fn unrestricted_generation_is_refused_above_limit() {
        let spec = ClassSpec::new(10, Vec::new(), Connectivity::Connected);
        assert!(matches!(generate_class(&spec, &GenOptions::default()), Err(EnumerateError::Refused { .. })));
        let spec = ClassSpec::new(5, Vec::new(), Connectivity::Any);
        assert_eq!(generate_class(&spec, &GenOptions::default()).unwrap().len(), 34);
    }

    #[test]
    fn degree_bound_prunes() {
        let spec = ClassSpec::new(6, pats(&["claw"]), Connectivity::Connected).with_max_degree(2);
        let class = generate_class(&spec, &GenOptions::default()).unwrap();
        // connected graphs with maximum degree 2 on 6 vertices: P6 and C6
        assert_eq!(class.len(), 2);
    }

    #[test]
    fn budget_exhaustion_reports_partial_stats() {
        let opts = GenOptions { deadline: Some(Instant::now()), ..GenOptions::default() };
        let spec = ClassSpec::new(7, pats(&["claw"]), Connectivity::Connected);
        match generate_class(&spec, &opts) {
            Err(EnumerateError::Incomplete { stats, .. }) => assert!(!stats.levels.is_empty()),
            other => panic!("expected incomplete, got {other:?}"),
        }
        let opts = GenOptions { max_level_size: Some(3), ..GenOptions::default() };
        assert!(matches!(generate_class(&spec, &opts), Err(EnumerateError::Incomplete { .. })));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let spec = ClassSpec::new(7, pats(&["claw", "p5"]), Connectivity::TwoConnected);
        let seq = GenOptions { execution: Execution::Sequential, ..GenOptions::default() };
        let a = generate_class(&spec, &seq).unwrap();
        let b = generate_class(&spec, &GenOptions::default()).unwrap();
        assert_eq!(a.codes, b.codes);
        assert_eq!(a.stats.levels, b.stats.levels);
    }

    #[test]
    fn graph6_streams() {
        let text = "C~\nDhc\n";
        let (graphs, diags) = read_graph6(text.as_bytes(), false).unwrap();
        assert_eq!(graphs.len(), 2);
        assert!(diags.is_empty());
        assert!(read_graph6("".as_bytes(), false).unwrap().0.is_empty());

        let bad = "C~\nC~~\nDhc\n";
        let err = read_graph6(bad.as_bytes(), false).unwrap_err();
        assert_eq!(err.line, 2);
        let (graphs, diags) = read_graph6(bad.as_bytes(), true).unwrap();
        assert_eq!((graphs.len(), diags.len()), (2, 1));
    }
}
