use serde::Serialize;

use crate::cycles::{cycle_status, is_chorded_pancyclic};
use crate::error::{GraphError, Result};
use crate::graph::{cartesian_product, is_two_connected, standard_graph, Graph, StandardKind};
use crate::patterns::{is_claw_free, is_free_of, make_pattern, PatternKind};

const NAMES: [&str; 7] = ["prism", "rook3", "k5_minus_e", "fig7", "p6_case2", "cycle(N)", "complete(N)"];

pub fn gallery_names() -> &'static [&'static str] {
    &NAMES
}

/// A named graph with a fixed labeling.
///
/// `fig7` uses `w, x, y, z, a1, a2, b -> 0..6` and `p6_case2` uses
/// `v, w, x, y, a1, a2, b -> 0..6`.
pub fn gallery(name: &str) -> Result<Graph> {
    let name = name.trim().to_ascii_lowercase();
    let k = |n| standard_graph(StandardKind::Complete, n);
    match name.as_str() {
        "prism" => cartesian_product(&k(3)?, &k(2)?),
        "rook3" => cartesian_product(&k(3)?, &k(3)?),
        "k5_minus_e" => standard_graph(StandardKind::CompleteMinusEdge, 5),
        "fig7" => Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 4), (4, 5), (5, 3), (6, 1), (6, 4), (6, 5)],
        ),
        "p6_case2" => Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (0, 4), (4, 5), (5, 2), (6, 2), (6, 5)],
        ),
        _ => {
            if let Some(n) = parametric(&name, "cycle") {
                return standard_graph(StandardKind::Cycle, n?);
            }
            if let Some(n) = parametric(&name, "complete") {
                return standard_graph(StandardKind::Complete, n?);
            }
            Err(GraphError::InvalidParameter(format!(
                "unknown gallery graph '{name}'; valid names: {}",
                NAMES.join(", ")
            )))
        }
    }
}

fn parametric(name: &str, head: &str) -> Option<Result<usize>> {
    let inner = name.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse()
            .map_err(|_| GraphError::InvalidParameter(format!("bad order in '{name}'"))),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GalleryCheck {
    pub name: &'static str,
    pub property: &'static str,
    pub holds: bool,
}

fn has_chorded(g: &Graph, m: usize) -> bool {
    cycle_status(g, m).map(|s| s.has_chorded_cycle()).unwrap_or(false)
}

/// The documented properties of the fixed gallery graphs, each checked.
pub fn gallery_self_checks() -> Vec<GalleryCheck> {
    let get = |n: &str| gallery(n).expect("fixed gallery graph");
    let pat = |k| make_pattern(k).expect("valid pattern");
    let (prism, rook3, k5e, fig7, case2) =
        (get("prism"), get("rook3"), get("k5_minus_e"), get("fig7"), get("p6_case2"));
    let c = |name, property, holds| GalleryCheck { name, property, holds };
    vec![
        c("prism", "6 vertices, 3-regular", prism.order() == 6 && prism.min_degree() == 3 && prism.max_degree() == 3),
        c("prism", "claw-free", is_claw_free(&prism)),
        c("rook3", "9 vertices, 18 edges", rook3.order() == 9 && rook3.size() == 18),
        c("rook3", "no chorded C4", !has_chorded(&rook3, 4)),
        c("rook3", "claw-free, z2-free, 2-connected", is_free_of(&rook3, &[pat(PatternKind::Claw), pat(PatternKind::Z(2))]) && is_two_connected(&rook3)),
        c("k5_minus_e", "5 vertices, 9 edges, 01 missing", k5e.order() == 5 && k5e.size() == 9 && !k5e.has_edge(0, 1)),
        c("fig7", "7 vertices, 11 edges", fig7.order() == 7 && fig7.size() == 11),
        c("fig7", "claw-free, p5-free, 2-connected", is_free_of(&fig7, &[pat(PatternKind::Claw), pat(PatternKind::Path(5))]) && is_two_connected(&fig7)),
        c("fig7", "no chorded C5, so not chorded pancyclic", !has_chorded(&fig7, 5) && !is_chorded_pancyclic(&fig7)),
        c("p6_case2", "7 vertices, 10 edges", case2.order() == 7 && case2.size() == 10),
        c("p6_case2", "claw-free, p6-free, contains C4", is_free_of(&case2, &[pat(PatternKind::Claw), pat(PatternKind::Path(6))]) && matches!(crate::cycles::find_cycle(&case2, 4), Ok(Some(_)))),
        c("p6_case2", "no chorded C5", !has_chorded(&case2, 5)),
    ]
}
