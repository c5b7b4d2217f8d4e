use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use super::evaluate::{evaluate, quick_check, GraphEvaluation, Quick};
use super::TheoremSpec;
use crate::enumerate::{
    finish, sample_class, ClassGenerator, ClassSpec, Connectivity, EnumerateError, GenOptions, SampleOptions,
};
use crate::error::GraphError;
use crate::graph::{to_graph6, CanonicalCode, Graph, MAX_CANONICAL_ORDER};
use crate::par::{self, Execution};

/// Where the graphs to check come from.
#[derive(Clone, Debug)]
pub enum Fuel {
    /// Generate the hypothesis class exhaustively, falling back to sampling.
    Builtin,
    /// Check exactly these graphs (those whose order is in range).
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub execution: Execution,
    /// Time allowed for exhaustive generation; unbounded when `None`.
    pub budget: Option<Duration>,
    /// Time for the sampled fallback; defaults to `budget`, else one minute.
    pub sample_budget: Option<Duration>,
    /// Fail with [`VerifyError::Incomplete`] instead of sampling.
    pub require_exhaustive: bool,
    /// Skip exhaustive generation at the requested orders; grow samples from
    /// the largest level below them that fits the budget.
    pub sampled_only: bool,
    pub max_level_size: Option<usize>,
    pub seed: u64,
    /// Cap on growth attempts per sampled order.
    pub max_sample_attempts: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            execution: Execution::default(),
            budget: None,
            sample_budget: None,
            require_exhaustive: false,
            sampled_only: false,
            max_level_size: Some(4_000_000),
            seed: 0,
            max_sample_attempts: 1_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderSummary {
    pub order: usize,
    pub mode: Mode,
    pub scanned: usize,
    pub hypothesis_count: usize,
    pub counterexamples: usize,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SamplingInfo {
    pub budget_seconds: f64,
    pub seed: u64,
    /// Order of the exhaustively generated graphs the samples grew from.
    pub seed_order: usize,
    pub attempts: usize,
}

/// A graph meeting every hypothesis except possibly the order bound, whose
/// conclusion fails.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub order: usize,
    /// The order is below the entry's bound, so the entry itself is not refuted.
    pub below_order_bound: bool,
    pub failed_clause: String,
    pub missing_lengths: Vec<usize>,
    pub witness: GraphEvaluation,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub order: [usize; 2],
    pub mode: Mode,
    pub scanned: usize,
    /// Scanned graphs meeting every hypothesis except the order bound.
    pub hypothesis_count: usize,
    /// Counterexamples at orders covered by the entry.
    pub violations: usize,
    /// Sorted by order, then graph6.
    pub counterexamples: Vec<Counterexample>,
    pub per_order: Vec<OrderSummary>,
    pub sampling: Option<SamplingInfo>,
    pub seconds: f64,
}

impl VerificationReport {
    fn new(spec: &TheoremSpec, orders: &RangeInclusive<usize>) -> Self {
        VerificationReport {
            theorem: spec.id.clone(),
            order: [*orders.start(), *orders.end()],
            mode: Mode::Exhaustive,
            scanned: 0,
            hypothesis_count: 0,
            violations: 0,
            counterexamples: Vec::new(),
            per_order: Vec::new(),
            sampling: None,
            seconds: 0.0,
        }
    }

    fn record(&mut self, spec: &TheoremSpec, order: usize, mode: Mode, scan: Scan, started: Instant) {
        let found = scan.failing.len();
        for (graph6, g) in scan.failing {
            let witness = evaluate(spec, &g);
            let below = order < spec.min_order;
            self.counterexamples.push(Counterexample {
                graph6,
                order,
                below_order_bound: below,
                failed_clause: spec.conclusion.name(),
                missing_lengths: witness.conclusion.missing_lengths.clone(),
                witness,
            });
            if !below {
                self.violations += 1;
            }
        }
        if mode == Mode::Sampled {
            self.mode = Mode::Sampled;
        }
        self.scanned += scan.scanned;
        self.hypothesis_count += scan.hypothesis_count;
        self.per_order.push(OrderSummary {
            order,
            mode,
            scanned: scan.scanned,
            hypothesis_count: scan.hypothesis_count,
            counterexamples: found,
            seconds: started.elapsed().as_secs_f64(),
        });
    }

    fn close(mut self, started: Instant) -> Self {
        self.counterexamples.sort_by(|a, b| (a.order, &a.graph6).cmp(&(b.order, &b.graph6)));
        self.seconds = started.elapsed().as_secs_f64();
        self
    }

    /// Whether no counterexample exists within the entry's own order range.
    pub fn is_clean(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Enumerate(EnumerateError),

    #[error("verification incomplete at order {order}: {reason}")]
    Incomplete { order: usize, reason: String, partial: Box<VerificationReport> },
}

impl From<EnumerateError> for VerifyError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Graph(g) => VerifyError::Graph(g),
            other => VerifyError::Enumerate(other),
        }
    }
}

#[derive(Default)]
struct Scan {
    scanned: usize,
    hypothesis_count: usize,
    failing: Vec<(String, Graph)>,
}

impl Scan {
    fn merge(mut self, other: Scan) -> Scan {
        self.scanned += other.scanned;
        self.hypothesis_count += other.hypothesis_count;
        self.failing.extend(other.failing);
        self
    }
}

fn scan_codes(spec: &TheoremSpec, codes: &[CanonicalCode], exec: Execution) -> Scan {
    par::fold_merge(
        exec,
        codes,
        Scan::default,
        |acc, code| scan_one(spec, acc, code.to_graph(), || code.as_str().to_string()),
        Scan::merge,
    )
}

fn scan_graphs(spec: &TheoremSpec, graphs: &[&Graph], exec: Execution) -> Scan {
    par::fold_merge(
        exec,
        graphs,
        Scan::default,
        |acc, g| scan_one(spec, acc, (*g).clone(), || to_graph6(g).expect("order checked")),
        Scan::merge,
    )
}

fn scan_one(spec: &TheoremSpec, mut acc: Scan, g: Graph, graph6: impl FnOnce() -> String) -> Scan {
    acc.scanned += 1;
    match quick_check(spec, &g) {
        Quick::Outside => {}
        Quick::Holds => acc.hypothesis_count += 1,
        Quick::Fails => {
            acc.hypothesis_count += 1;
            acc.failing.push((graph6(), g));
        }
    }
    acc
}

/// Checks `spec` on every graph of the given orders drawn from `fuel`.
///
/// Graphs below the entry's order bound are scanned too; conclusion failures
/// there are listed with `below_order_bound` set and do not count as
/// violations.
pub fn verify(
    spec: &TheoremSpec,
    orders: RangeInclusive<usize>,
    fuel: &Fuel,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let (lo, hi) = (*orders.start(), *orders.end());
    if lo == 0 || lo > hi || hi > MAX_CANONICAL_ORDER {
        return Err(GraphError::InvalidParameter(format!(
            "order range {lo}..{hi} must be nonempty within 1..={MAX_CANONICAL_ORDER}"
        ))
        .into());
    }
    let mut report = VerificationReport::new(spec, &orders);
    match fuel {
        Fuel::Graphs(graphs) => {
            for n in orders.clone() {
                let t = Instant::now();
                let batch: Vec<&Graph> = graphs.iter().filter(|g| g.order() == n).collect();
                let scan = scan_graphs(spec, &batch, opts.execution);
                report.record(spec, n, Mode::Exhaustive, scan, t);
            }
        }
        Fuel::Builtin => verify_builtin(spec, lo, hi, opts, started, &mut report)?,
    }
    Ok(report.close(started))
}

fn verify_builtin(
    spec: &TheoremSpec,
    lo: usize,
    hi: usize,
    opts: &VerifyOptions,
    started: Instant,
    report: &mut VerificationReport,
) -> Result<(), VerifyError> {
    let connectivity = if spec.two_connected { Connectivity::TwoConnected } else { Connectivity::Any };
    let class = |n| ClassSpec::new(n, spec.patterns().to_vec(), connectivity);
    let gen_opts = GenOptions {
        execution: opts.execution,
        deadline: opts.budget.map(|b| started + b),
        max_level_size: opts.max_level_size,
    };
    let mut gen = ClassGenerator::new(&class(hi))?;
    let mut exhaustive = !opts.sampled_only;
    if opts.sampled_only {
        match gen.advance_to(lo.saturating_sub(1).max(1), &gen_opts) {
            Ok(()) | Err(EnumerateError::Incomplete { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let mut sample_deadline: Option<Instant> = None;
    for n in lo..=hi {
        let t = Instant::now();
        if exhaustive {
            match gen.advance_to(n, &gen_opts) {
                Ok(()) => {
                    let codes = finish(&class(n), &gen).codes;
                    let scan = scan_codes(spec, &codes, opts.execution);
                    report.record(spec, n, Mode::Exhaustive, scan, t);
                    continue;
                }
                Err(EnumerateError::Incomplete { order, reason, .. }) => {
                    if opts.require_exhaustive {
                        let partial = std::mem::replace(report, VerificationReport::new(spec, &(lo..=hi)));
                        return Err(VerifyError::Incomplete { order, reason, partial: Box::new(partial.close(started)) });
                    }
                    exhaustive = false;
                }
                Err(e) => return Err(e.into()),
            }
        }
        let budget = opts.sample_budget.or(opts.budget).unwrap_or(Duration::from_secs(60));
        let deadline = *sample_deadline.get_or_insert_with(|| Instant::now() + budget);
        // share what is left evenly among the remaining orders
        let now = Instant::now();
        let share = deadline.saturating_duration_since(now) / (hi - n + 1) as u32;
        let sample_opts = SampleOptions {
            seed: opts.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
            execution: opts.execution,
            deadline: Some(now + share),
            max_attempts: opts.max_sample_attempts,
            batch: 256,
        };
        let sampled = sample_class(&class(n), gen.level(), &sample_opts)?;
        let info = report.sampling.get_or_insert(SamplingInfo {
            budget_seconds: budget.as_secs_f64(),
            seed: opts.seed,
            seed_order: gen.order(),
            attempts: 0,
        });
        info.attempts += sampled.attempts;
        let scan = scan_codes(spec, &sampled.codes, opts.execution);
        report.record(spec, n, Mode::Sampled, scan, t);
    }
    Ok(())
}

/// Outcome of a search below an entry's order bound.
#[derive(Clone, Debug, Serialize)]
pub struct SharpnessResult {
    pub order: usize,
    /// Every qualifying graph of this order was examined.
    pub exhaustive: bool,
    /// Graph6 strings of the graphs found, sorted.
    pub found: Vec<String>,
    pub report: VerificationReport,
}

impl SharpnessResult {
    pub fn graphs(&self) -> Vec<Graph> {
        self.report.counterexamples.iter().map(|c| c.witness_graph()).collect()
    }
}

impl Counterexample {
    pub fn witness_graph(&self) -> Graph {
        crate::graph::parse_graph6(&self.graph6).expect("reports hold valid graph6")
    }
}

/// Graphs of order `order < spec.min_order` meeting every other hypothesis
/// while violating the conclusion. An empty result is a valid outcome.
pub fn sharpness_search(spec: &TheoremSpec, order: usize, opts: &VerifyOptions) -> Result<SharpnessResult, VerifyError> {
    if order >= spec.min_order {
        return Err(GraphError::InvalidParameter(format!(
            "sharpness search needs an order below {} for {}, got {order}",
            spec.min_order, spec.id
        ))
        .into());
    }
    let opts = VerifyOptions { require_exhaustive: false, ..opts.clone() };
    let report = verify(spec, order..=order, &Fuel::Builtin, &opts)?;
    Ok(SharpnessResult {
        order,
        exhaustive: report.mode == Mode::Exhaustive,
        found: report.counterexamples.iter().map(|c| c.graph6.clone()).collect(),
        report,
    })
}
