use std::ops::RangeInclusive;
use std::path::PathBuf;

use chordck::graph::MAX_CANONICAL_ORDER;
use chordck::patterns::PatternKind;
use chordck::theorems::{theorem, theorem_ids};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Forbidden-subgraph and chorded-pancyclicity checks, class sweeps and
/// sharpness searches.
#[derive(Debug, Parser)]
#[command(name = "chordck", version)]
pub struct Cli {
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = "CHORDCK_THREADS")]
    pub threads: Option<usize>,

    /// Print the full JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report properties of each graph in a graph6 stream.
    Check(CheckArgs),
    /// Sweep a theorem over a range of orders.
    Verify(VerifyArgs),
    /// Generate one graph per isomorphism class of a forbidden-subgraph class.
    Generate(GenerateArgs),
    /// Print a named graph and check its documented properties.
    Gallery(GalleryArgs),
    /// Search below a theorem's order bound for graphs violating its conclusion.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// graph6 input file, or - for stdin.
    #[arg(long, value_name = "PATH", default_value = "-")]
    pub g6: PathBuf,

    /// Comma-separated properties: order, size, connected, 2conn, traceable,
    /// pancyclic, chorded-pancyclic, missing-chorded, or PATTERN-free.
    #[arg(long, value_delimiter = ',', value_parser = parse_prop, default_value = "claw-free,2conn,chorded-pancyclic")]
    pub props: Vec<Prop>,

    /// Evaluate a theorem's hypotheses and conclusion instead of properties.
    #[arg(long, value_parser = parse_theorem_id)]
    pub theorem: Option<String>,

    /// Report malformed lines and continue.
    #[arg(long)]
    pub skip_bad: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_theorem_id)]
    pub theorem: String,

    /// Orders to sweep, A..B (inclusive) or a single order.
    #[arg(long, value_parser = parse_orders)]
    pub orders: RangeInclusive<usize>,

    /// Check the graphs of this graph6 stream instead of generating the class.
    #[arg(long, value_name = "PATH")]
    pub g6: Option<PathBuf>,

    #[arg(long)]
    pub skip_bad: bool,

    #[command(flatten)]
    pub budget: BudgetArgs,

    /// Fail with exit code 2 rather than fall back to sampling.
    #[arg(long, conflicts_with = "sampled")]
    pub require_exhaustive: bool,

    /// Sample the requested orders instead of generating them exhaustively.
    #[arg(long)]
    pub sampled: bool,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Seconds allowed for exhaustive generation; sampling then gets as much again.
    #[arg(long, value_name = "SECONDS", value_parser = parse_seconds)]
    pub budget: Option<f64>,

    /// Seed for sampled verification.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub order: usize,

    /// Comma-separated forbidden patterns (claw, pN, zN).
    #[arg(long, value_delimiter = ',', value_parser = parse_pattern)]
    pub forbid: Vec<PatternKind>,

    #[arg(long, value_enum, default_value_t = Require::Any)]
    pub require: Require,

    #[arg(long)]
    pub max_degree: Option<usize>,

    #[arg(long, value_enum, default_value_t = Emit::G6)]
    pub emit: Emit,

    #[arg(long, value_name = "SECONDS", value_parser = parse_seconds)]
    pub budget: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GalleryArgs {
    /// prism, rook3, k5_minus_e, fig7, p6_case2, cycle(N) or complete(N);
    /// all fixed graphs when omitted.
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_parser = parse_theorem_id)]
    pub theorem: String,

    #[arg(long)]
    pub order: usize,

    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Require {
    Any,
    Connected,
    #[value(name = "2conn")]
    TwoConn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    G6,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prop {
    Order,
    Size,
    Connected,
    TwoConnected,
    Traceable,
    Pancyclic,
    ChordedPancyclic,
    MissingChorded,
    Free(PatternKind),
}

impl Prop {
    pub fn name(&self) -> String {
        match self {
            Prop::Order => "order".into(),
            Prop::Size => "size".into(),
            Prop::Connected => "connected".into(),
            Prop::TwoConnected => "2conn".into(),
            Prop::Traceable => "traceable".into(),
            Prop::Pancyclic => "pancyclic".into(),
            Prop::ChordedPancyclic => "chorded-pancyclic".into(),
            Prop::MissingChorded => "missing-chorded".into(),
            Prop::Free(k) => format!("{k}-free"),
        }
    }
}

fn parse_prop(s: &str) -> Result<Prop, String> {
    let s = s.trim().to_ascii_lowercase();
    Ok(match s.as_str() {
        "order" => Prop::Order,
        "size" => Prop::Size,
        "connected" => Prop::Connected,
        "2conn" | "2-connected" => Prop::TwoConnected,
        "traceable" => Prop::Traceable,
        "pancyclic" => Prop::Pancyclic,
        "chorded-pancyclic" => Prop::ChordedPancyclic,
        "missing-chorded" => Prop::MissingChorded,
        _ => match s.strip_suffix("-free") {
            Some(p) => Prop::Free(parse_pattern(p)?),
            None => {
                return Err(format!(
                    "unknown property '{s}' (expected order, size, connected, 2conn, traceable, pancyclic, chorded-pancyclic, missing-chorded or PATTERN-free)"
                ))
            }
        },
    })
}

fn parse_pattern(s: &str) -> Result<PatternKind, String> {
    s.parse().map_err(|e: chordck::GraphError| e.to_string())
}

fn parse_theorem_id(s: &str) -> Result<String, String> {
    theorem(s).map(|t| t.id).map_err(|_| format!("unknown theorem '{s}'; valid ids: {}", theorem_ids().join(", ")))
}

fn parse_seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        _ => Err(format!("'{s}' is not a nonnegative number of seconds")),
    }
}

pub fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order '{t}' in '{s}'"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi || hi > MAX_CANONICAL_ORDER {
        return Err(format!("order range '{s}' must be nonempty within 1..{MAX_CANONICAL_ORDER}"));
    }
    Ok(lo..=hi)
}
