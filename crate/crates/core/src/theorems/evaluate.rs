use serde::Serialize;

use super::{Conclusion, ExtraHypothesis, TheoremSpec};
use crate::cycles::{cycle_status, find_cycle, pancyclicity_report, CycleStatus, PancyclicityReport};
use crate::graph::{cut_vertices, is_connected, is_isomorphic, standard_graph, Graph, StandardKind, VertexSet};
use crate::patterns::{contains_induced, PatternKind};

/// Evidence attached to one hypothesis clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClauseWitness {
    Order { order: usize, min_order: usize },
    Connectivity { order: usize, connected: bool, cut_vertices: VertexSet },
    /// The least induced copy, if any; the clause holds when there is none.
    InducedCopy { pattern: PatternKind, vertices: Option<Vec<usize>> },
    Cycle { length: usize, status: CycleStatus },
    Degree { vertex: usize, degree: usize, at_least: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    pub witness: ClauseWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConclusionEvaluation {
    pub kind: Conclusion,
    pub holds: bool,
    /// Whether `G` is the cycle `C_n`, for conclusions with that escape.
    pub is_cycle: Option<bool>,
    /// Lengths the conclusion needs but `G` lacks.
    pub missing_lengths: Vec<usize>,
    pub report: Option<PancyclicityReport>,
    /// For a single required length: the least chorded cycle, or what exists instead.
    pub cycle: Option<CycleStatus>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEvaluation {
    pub theorem: String,
    pub order: usize,
    pub hypotheses: Vec<Clause>,
    pub hypotheses_hold: bool,
    /// Every clause except the order bound holds.
    pub hypotheses_hold_ignoring_order: bool,
    pub conclusion: ConclusionEvaluation,
    pub conclusion_holds: bool,
    pub is_counterexample: bool,
}

impl GraphEvaluation {
    /// Name of the first clause that fails, hypotheses first.
    pub fn failed_clause(&self) -> Option<String> {
        if let Some(c) = self.hypotheses.iter().find(|c| !c.holds) {
            return Some(c.name.clone());
        }
        (!self.conclusion_holds).then(|| self.conclusion.kind.name())
    }
}

/// Evaluates every hypothesis clause and the conclusion of `spec` on `g`.
pub fn evaluate(spec: &TheoremSpec, g: &Graph) -> GraphEvaluation {
    let n = g.order();
    let mut hypotheses = vec![Clause {
        name: "order".into(),
        holds: n >= spec.min_order,
        witness: ClauseWitness::Order { order: n, min_order: spec.min_order },
    }];
    if spec.two_connected {
        let connected = is_connected(g);
        let cuts = cut_vertices(g);
        hypotheses.push(Clause {
            name: "two_connected".into(),
            holds: n >= 3 && connected && cuts.is_empty(),
            witness: ClauseWitness::Connectivity { order: n, connected, cut_vertices: cuts },
        });
    }
    for p in spec.patterns() {
        let copy = contains_induced(g, p);
        hypotheses.push(Clause {
            name: format!("{}_free", p.kind),
            holds: copy.is_none(),
            witness: ClauseWitness::InducedCopy { pattern: p.kind, vertices: copy },
        });
    }
    match spec.extra {
        ExtraHypothesis::None => {}
        ExtraHypothesis::HasC4 | ExtraHypothesis::HasChordedC5 => {
            let (name, length) = if spec.extra == ExtraHypothesis::HasC4 { ("has_c4", 4) } else { ("has_chorded_c5", 5) };
            let status = status_or_none(g, length);
            let holds = if length == 4 { status.has_cycle() } else { status.has_chorded_cycle() };
            hypotheses.push(Clause { name: name.into(), holds, witness: ClauseWitness::Cycle { length, status } });
        }
        ExtraHypothesis::DegreeAtLeast(d) => {
            let vertex = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
            let degree = if n == 0 { 0 } else { g.degree(vertex) };
            hypotheses.push(Clause {
                name: format!("degree_at_least_{d}"),
                holds: degree >= d,
                witness: ClauseWitness::Degree { vertex, degree, at_least: d },
            });
        }
    }
    let hypotheses_hold = hypotheses.iter().all(|c| c.holds);
    let hypotheses_hold_ignoring_order = hypotheses.iter().skip(1).all(|c| c.holds);
    let conclusion = evaluate_conclusion(spec.conclusion, g);
    let conclusion_holds = conclusion.holds;
    GraphEvaluation {
        theorem: spec.id.clone(),
        order: n,
        hypotheses,
        hypotheses_hold,
        hypotheses_hold_ignoring_order,
        conclusion,
        conclusion_holds,
        is_counterexample: hypotheses_hold && !conclusion_holds,
    }
}

fn evaluate_conclusion(kind: Conclusion, g: &Graph) -> ConclusionEvaluation {
    let mut out = ConclusionEvaluation {
        kind,
        holds: false,
        is_cycle: None,
        missing_lengths: Vec::new(),
        report: None,
        cycle: None,
    };
    match kind {
        Conclusion::ChordedCycleOfLength(m) => {
            let status = status_or_none(g, m);
            out.holds = status.has_chorded_cycle();
            if !out.holds {
                out.missing_lengths = vec![m];
            }
            out.cycle = Some(status);
        }
        _ => {
            let report = pancyclicity_report(g).ok();
            let (flag, missing) = match (&report, kind) {
                (Some(r), Conclusion::PancyclicOrCycle) => (r.pancyclic, r.missing_cycle_lengths()),
                (Some(r), _) => (r.chorded_pancyclic, r.missing_chorded_lengths()),
                // orders below 3 need no cycle at all
                (None, _) => (true, Vec::new()),
            };
            out.holds = flag;
            out.missing_lengths = missing;
            if kind != Conclusion::ChordedPancyclic {
                let cycle = is_cycle_graph(g);
                out.is_cycle = Some(cycle);
                out.holds |= cycle;
            }
            out.report = report;
        }
    }
    out
}

fn status_or_none(g: &Graph, m: usize) -> CycleStatus {
    cycle_status(g, m).unwrap_or(CycleStatus::NoCycle)
}

fn is_cycle_graph(g: &Graph) -> bool {
    g.order() >= 3 && is_isomorphic(g, &standard_graph(StandardKind::Cycle, g.order()).expect("order >= 3"))
}

/// Outcome of the cheap sweep-time check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Quick {
    /// Some non-order hypothesis fails.
    Outside,
    Holds,
    Fails,
}

/// Same verdict as [`evaluate`] ignoring the order clause, but stops at the
/// first failing clause and skips the witnesses.
pub(crate) fn quick_check(spec: &TheoremSpec, g: &Graph) -> Quick {
    let n = g.order();
    if spec.two_connected && !crate::graph::is_two_connected(g) {
        return Quick::Outside;
    }
    if spec.patterns().iter().any(|p| contains_induced(g, p).is_some()) {
        return Quick::Outside;
    }
    let extra = match spec.extra {
        ExtraHypothesis::None => true,
        ExtraHypothesis::HasC4 => matches!(find_cycle(g, 4), Ok(Some(_))),
        ExtraHypothesis::HasChordedC5 => has_chorded(g, 5),
        ExtraHypothesis::DegreeAtLeast(d) => n > 0 && g.max_degree() >= d,
    };
    if !extra {
        return Quick::Outside;
    }
    let holds = match spec.conclusion {
        Conclusion::ChordedCycleOfLength(m) => has_chorded(g, m),
        Conclusion::ChordedPancyclic => (4..=n).all(|m| has_chorded(g, m)),
        Conclusion::CycleOrChordedPancyclic => is_cycle_graph(g) || (4..=n).all(|m| has_chorded(g, m)),
        Conclusion::PancyclicOrCycle => {
            is_cycle_graph(g) || (3..=n).all(|m| status_or_none(g, m).has_cycle())
        }
    };
    if holds {
        Quick::Holds
    } else {
        Quick::Fails
    }
}

fn has_chorded(g: &Graph, m: usize) -> bool {
    status_or_none(g, m).has_chorded_cycle()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, parse_graph6};
    use crate::theorems::theorem;

    fn std(kind: StandardKind, n: usize) -> Graph {
        standard_graph(kind, n).unwrap()
    }

    #[test]
    fn c8_is_outside_p5_theorem() {
        let e = evaluate(&theorem("p5").unwrap(), &std(StandardKind::Cycle, 8));
        assert!(!e.hypotheses_hold);
        assert_eq!(e.failed_clause().as_deref(), Some("p5_free"));
        assert!(!e.is_counterexample);
    }

    #[test]
    fn rook3_against_z2() {
        let k3 = std(StandardKind::Complete, 3);
        let rook = cartesian_product(&k3, &k3).unwrap();
        let e = evaluate(&theorem("z2").unwrap(), &rook);
        assert!(!e.hypotheses_hold);
        assert!(e.hypotheses_hold_ignoring_order);
        assert!(!e.conclusion_holds);
        assert_eq!(e.conclusion.is_cycle, Some(false));
        assert!(e.conclusion.missing_lengths.contains(&4));
        assert_eq!(quick_check(&theorem("z2").unwrap(), &rook), Quick::Fails);
    }

    #[test]
    fn complete_graph_satisfies_p4() {
        let e = evaluate(&theorem("p4").unwrap(), &std(StandardKind::Complete, 5));
        assert!(e.hypotheses_hold && e.conclusion_holds && !e.is_counterexample);
        assert_eq!(e.failed_clause(), None);
    }

    #[test]
    fn cycle_escape() {
        let c10 = std(StandardKind::Cycle, 10);
        let z2 = evaluate(&theorem("z2").unwrap(), &c10);
        assert!(z2.hypotheses_hold && z2.conclusion_holds);
        assert_eq!(z2.conclusion.is_cycle, Some(true));
        // the p5 entry has no escape, and C10 is not P5-free anyway
        let c5 = std(StandardKind::Cycle, 5);
        let p4 = evaluate(&theorem("p4").unwrap(), &c5);
        assert!(!p4.hypotheses_hold);
    }

    #[test]
    fn quick_check_agrees_with_evaluate() {
        let specs: Vec<_> = super::super::theorem_catalog();
        for line in ["C~", "Dhc", "D~{", "E~~w", "Es\\o", "F~~~w", "Fs\\zw", "H~~~~~~"] {
            let g = parse_graph6(line).unwrap();
            for s in &specs {
                let e = evaluate(s, &g);
                let expected = match (e.hypotheses_hold_ignoring_order, e.conclusion_holds) {
                    (false, _) => Quick::Outside,
                    (true, true) => Quick::Holds,
                    (true, false) => Quick::Fails,
                };
                assert_eq!(quick_check(s, &g), expected, "{} on {line}", s.id);
            }
        }
    }

    #[test]
    fn degree_lemma_clause() {
        let s = theorem("lem_degree").unwrap();
        let star = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let e = evaluate(&s, &star);
        assert!(e.hypotheses.iter().any(|c| c.name == "degree_at_least_5" && c.holds));
        assert!(!e.hypotheses_hold_ignoring_order);
        let k6 = std(StandardKind::Complete, 6);
        assert!(evaluate(&s, &k6).conclusion_holds);
    }
}
