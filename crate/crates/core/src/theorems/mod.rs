//! Theorems and lemmas on chorded pancyclicity in machine-checkable form:
//! the catalog, evaluation of one graph against an entry, sweeps over whole
//! classes, sharpness search below the order bound, and named graphs.

mod evaluate;
mod gallery;
mod verify;

pub use evaluate::{evaluate, Clause, ClauseWitness, ConclusionEvaluation, GraphEvaluation};
pub use gallery::{gallery, gallery_names, gallery_self_checks, GalleryCheck};
pub use verify::{
    sharpness_search, verify, Counterexample, Fuel, Mode, OrderSummary, SamplingInfo, SharpnessResult,
    VerificationReport, VerifyError, VerifyOptions,
};

use std::fmt;

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::patterns::{make_pattern, Pattern, PatternKind};

/// A hypothesis beyond order, connectivity and forbidden subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ExtraHypothesis {
    None,
    HasC4,
    HasChordedC5,
    /// Some vertex has at least this degree.
    DegreeAtLeast(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Conclusion {
    ChordedPancyclic,
    /// `G` is the cycle `C_n` or chorded pancyclic.
    CycleOrChordedPancyclic,
    ChordedCycleOfLength(usize),
    /// `G` is the cycle `C_n` or pancyclic.
    PancyclicOrCycle,
}

impl Conclusion {
    /// Short name used as `failed_clause` in reports.
    pub fn name(&self) -> String {
        match self {
            Conclusion::ChordedPancyclic => "chorded_pancyclic".into(),
            Conclusion::CycleOrChordedPancyclic => "cycle_or_chorded_pancyclic".into(),
            Conclusion::ChordedCycleOfLength(m) => format!("chorded_c{m}"),
            Conclusion::PancyclicOrCycle => "pancyclic_or_cycle".into(),
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// One catalog entry: if a graph of order at least `min_order` (2-connected
/// when required) has no induced copy of any forbidden pattern and meets the
/// extra hypothesis, then the conclusion holds.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremSpec {
    pub id: String,
    pub statement: String,
    pub min_order: usize,
    pub forbidden: Vec<PatternKind>,
    pub two_connected: bool,
    pub extra: ExtraHypothesis,
    pub conclusion: Conclusion,
    #[serde(skip)]
    patterns: Vec<Pattern>,
}

impl TheoremSpec {
    fn new(
        id: &str,
        min_order: usize,
        forbidden: &[PatternKind],
        two_connected: bool,
        extra: ExtraHypothesis,
        conclusion: Conclusion,
    ) -> Self {
        let patterns = forbidden
            .iter()
            .map(|&k| make_pattern(k).expect("catalog patterns are valid"))
            .collect();
        let mut spec = TheoremSpec {
            id: id.to_string(),
            statement: String::new(),
            min_order,
            forbidden: forbidden.to_vec(),
            two_connected,
            extra,
            conclusion,
            patterns,
        };
        spec.statement = spec.describe();
        spec
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    fn describe(&self) -> String {
        let names: Vec<String> = self.forbidden.iter().map(|k| k.to_string()).collect();
        let mut s = String::from("if G");
        if self.two_connected {
            s.push_str(" is 2-connected,");
        }
        if self.min_order > 0 {
            s.push_str(&format!(" has order n >= {},", self.min_order));
        }
        s.push_str(&format!(" is {{{}}}-free", names.join(", ")));
        match self.extra {
            ExtraHypothesis::None => {}
            ExtraHypothesis::HasC4 => s.push_str(" and contains a C4"),
            ExtraHypothesis::HasChordedC5 => s.push_str(" and contains a chorded C5"),
            ExtraHypothesis::DegreeAtLeast(d) => s.push_str(&format!(" and has a vertex of degree >= {d}")),
        }
        s.push_str(", then ");
        s.push_str(&match self.conclusion {
            Conclusion::ChordedPancyclic => "G is chorded pancyclic".to_string(),
            Conclusion::CycleOrChordedPancyclic => "G = C_n or G is chorded pancyclic".to_string(),
            Conclusion::ChordedCycleOfLength(m) => format!("G contains a chorded C{m}"),
            Conclusion::PancyclicOrCycle => "G is a cycle or G is pancyclic".to_string(),
        });
        s
    }
}

/// The parametric entry `lem_degree` for `k >= 3`: a claw-free graph with a
/// vertex of degree at least `2k - 1` has a chorded `(k + 1)`-cycle.
pub fn degree_lemma(k: usize) -> Result<TheoremSpec> {
    if k < 3 {
        return Err(GraphError::InvalidParameter(format!("lem_degree needs k >= 3, got {k}")));
    }
    let id = if k == 3 { "lem_degree".to_string() } else { format!("lem_degree:{k}") };
    Ok(TheoremSpec::new(
        &id,
        0,
        &[PatternKind::Claw],
        false,
        ExtraHypothesis::DegreeAtLeast(2 * k - 1),
        Conclusion::ChordedCycleOfLength(k + 1),
    ))
}

pub fn theorem_catalog() -> Vec<TheoremSpec> {
    use Conclusion::*;
    use ExtraHypothesis as X;
    use PatternKind::*;
    let t = TheoremSpec::new;
    vec![
        t("z1", 10, &[Claw, Z(1)], true, X::None, CycleOrChordedPancyclic),
        t("z2", 10, &[Claw, Z(2)], true, X::None, CycleOrChordedPancyclic),
        t("p4", 5, &[Claw, Path(4)], true, X::None, ChordedPancyclic),
        t("p5", 8, &[Claw, Path(5)], true, X::None, ChordedPancyclic),
        t("p6", 13, &[Claw, Path(6)], true, X::None, ChordedPancyclic),
        t("lem_c4_to_c5_p5", 8, &[Claw, Path(5)], true, X::HasC4, ChordedCycleOfLength(5)),
        t("lem_c5_to_c4_p5", 7, &[Claw, Path(5)], true, X::HasChordedC5, ChordedCycleOfLength(4)),
        t("lem_p6_c5", 11, &[Claw, Path(6)], true, X::HasC4, ChordedCycleOfLength(5)),
        t("lem_p6_c4", 10, &[Claw, Path(6)], true, X::HasChordedC5, ChordedCycleOfLength(4)),
        t("lem_p6_c6", 13, &[Claw, Path(6)], true, X::HasChordedC5, ChordedCycleOfLength(6)),
        degree_lemma(3).expect("k = 3 is valid"),
        t("pan_z1", 10, &[Claw, Z(1)], true, X::None, PancyclicOrCycle),
        t("pan_z2", 10, &[Claw, Z(2)], true, X::None, PancyclicOrCycle),
        t("pan_p4", 6, &[Claw, Path(4)], true, X::None, PancyclicOrCycle),
        t("pan_p5", 6, &[Claw, Path(5)], true, X::None, PancyclicOrCycle),
        t("pan_p6", 10, &[Claw, Path(6)], true, X::None, PancyclicOrCycle),
    ]
}

pub fn theorem_ids() -> Vec<String> {
    let mut ids: Vec<String> = theorem_catalog().into_iter().map(|t| t.id).collect();
    ids.push("lem_degree:K".into());
    ids
}

/// Looks up a catalog entry; `lem_degree:K` selects the degree lemma for `k = K`.
pub fn theorem(id: &str) -> Result<TheoremSpec> {
    let id = id.trim();
    if let Some(k) = id.strip_prefix("lem_degree:") {
        let k: usize = k
            .parse()
            .map_err(|_| GraphError::InvalidParameter(format!("bad k in '{id}'")))?;
        return degree_lemma(k);
    }
    theorem_catalog().into_iter().find(|t| t.id == id).ok_or_else(|| {
        GraphError::InvalidParameter(format!("unknown theorem '{id}'; valid ids: {}", theorem_ids().join(", ")))
    })
}
