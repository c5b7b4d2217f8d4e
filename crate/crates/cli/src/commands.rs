use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use chordck::cycles::{is_chorded_pancyclic, is_pancyclic, pancyclicity_report};
use chordck::enumerate::{generate_class, read_graph6, ClassSpec, Connectivity, EnumerateError, GenOptions, GenStats};
use chordck::graph::{is_connected, is_two_connected, to_graph6, Graph};
use chordck::patterns::{contains_induced, is_traceable, make_pattern, Pattern};
use chordck::theorems::{
    evaluate, gallery, gallery_self_checks, sharpness_search, theorem, verify, Fuel, GalleryCheck, Mode,
    VerificationReport, VerifyError, VerifyOptions,
};
use serde_json::{json, Value};

use crate::args::{BudgetArgs, CheckArgs, Cli, Command, Emit, GalleryArgs, GenerateArgs, Prop, Require, SearchArgs, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_INCOMPLETE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_DATA: u8 = 65;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_INTERNAL: u8 = 70;
pub const EXIT_IO: u8 = 74;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
    NoInput(String),
    Io(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Data(_) => EXIT_DATA,
            Failure::NoInput(_) => EXIT_NO_INPUT,
            Failure::Io(_) => EXIT_IO,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::NoInput(m) | Failure::Io(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(format!("write failed: {e}"))
    }
}

type Outcome = Result<u8, Failure>;

pub fn run<W: Write>(cli: &Cli, out: &mut W) -> Outcome {
    match &cli.command {
        Command::Check(a) => check(a, cli.json, out),
        Command::Verify(a) => run_verify(a, cli.json, out),
        Command::Generate(a) => generate(a, cli.json, out),
        Command::Gallery(a) => show_gallery(a, cli.json, out),
        Command::Search(a) => search(a, cli.json, out),
    }
}

fn read_input(path: &Path, skip_bad: bool) -> Result<Vec<Graph>, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| match e.kind() {
            io::ErrorKind::NotFound | io::ErrorKind::PermissionDenied => {
                Failure::NoInput(format!("cannot open {}: {e}", path.display()))
            }
            _ => Failure::Io(format!("reading {}: {e}", path.display())),
        })?
    };
    let (graphs, skipped) =
        read_graph6(text.as_bytes(), skip_bad).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    for e in skipped {
        eprintln!("chordck: skipped {}: {e}", path.display());
    }
    Ok(graphs)
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| "?".into())
}

fn write_json<W: Write>(out: &mut W, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn prop_value(p: &Prop, g: &Graph, patterns: &[Option<Pattern>], i: usize) -> Value {
    match p {
        Prop::Order => json!(g.order()),
        Prop::Size => json!(g.size()),
        Prop::Connected => json!(is_connected(g)),
        Prop::TwoConnected => json!(is_two_connected(g)),
        Prop::Traceable => json!(is_traceable(g).is_some()),
        Prop::Pancyclic => json!(is_pancyclic(g)),
        Prop::ChordedPancyclic => json!(is_chorded_pancyclic(g)),
        Prop::MissingChorded => json!(pancyclicity_report(g).map(|r| r.missing_chorded_lengths()).unwrap_or_default()),
        Prop::Free(_) => json!(contains_induced(g, patterns[i].as_ref().expect("pattern built")).is_none()),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
        other => other.to_string(),
    }
}

fn print_table<W: Write>(out: &mut W, header: &[String], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header))?;
    for r in rows {
        writeln!(out, "{}", line(r))?;
    }
    Ok(())
}

fn check<W: Write>(a: &CheckArgs, as_json: bool, out: &mut W) -> Outcome {
    let graphs = read_input(&a.g6, a.skip_bad)?;
    if let Some(id) = &a.theorem {
        let spec = theorem(id).map_err(|e| Failure::Usage(e.to_string()))?;
        let evals: Vec<_> = graphs.iter().map(|g| (g6(g), evaluate(&spec, g))).collect();
        let any_cx = evals.iter().any(|(_, e)| e.is_counterexample);
        if as_json {
            let items: Vec<Value> = evals.iter().map(|(s, e)| json!({ "graph6": s, "evaluation": e })).collect();
            write_json(out, &items)?;
        } else {
            let header: Vec<String> =
                ["graph6", "order", "hypotheses", "conclusion", "counterexample", "failed_clause"].map(String::from).to_vec();
            let rows: Vec<Vec<String>> = evals
                .iter()
                .map(|(s, e)| {
                    vec![
                        s.clone(),
                        e.order.to_string(),
                        cell(&json!(e.hypotheses_hold)),
                        cell(&json!(e.conclusion_holds)),
                        cell(&json!(e.is_counterexample)),
                        e.failed_clause().unwrap_or_else(|| "-".into()),
                    ]
                })
                .collect();
            print_table(out, &header, &rows)?;
        }
        return Ok(if any_cx { EXIT_COUNTEREXAMPLE } else { EXIT_OK });
    }
    let patterns: Vec<Option<Pattern>> = a
        .props
        .iter()
        .map(|p| match p {
            Prop::Free(k) => make_pattern(*k).map(Some).map_err(|e| Failure::Usage(e.to_string())),
            _ => Ok(None),
        })
        .collect::<Result<_, _>>()?;
    let table: Vec<(String, Vec<Value>)> = graphs
        .iter()
        .map(|g| (g6(g), a.props.iter().enumerate().map(|(i, p)| prop_value(p, g, &patterns, i)).collect()))
        .collect();
    if as_json {
        let items: Vec<Value> = table
            .iter()
            .map(|(s, vals)| {
                let props: serde_json::Map<String, Value> =
                    a.props.iter().zip(vals).map(|(p, v)| (p.name(), v.clone())).collect();
                json!({ "graph6": s, "properties": props })
            })
            .collect();
        write_json(out, &items)?;
    } else {
        let mut header = vec!["graph6".to_string()];
        header.extend(a.props.iter().map(Prop::name));
        let rows: Vec<Vec<String>> = table
            .iter()
            .map(|(s, vals)| std::iter::once(s.clone()).chain(vals.iter().map(cell)).collect())
            .collect();
        print_table(out, &header, &rows)?;
    }
    Ok(EXIT_OK)
}

fn verify_options(b: &BudgetArgs) -> VerifyOptions {
    VerifyOptions { budget: b.budget.map(Duration::from_secs_f64), seed: b.seed, ..VerifyOptions::default() }
}

fn self_check() -> Result<(), Failure> {
    let failed: Vec<GalleryCheck> = gallery_self_checks().into_iter().filter(|c| !c.holds).collect();
    if failed.is_empty() {
        return Ok(());
    }
    let names: Vec<String> = failed.iter().map(|c| format!("{}: {}", c.name, c.property)).collect();
    Err(Failure::Internal(format!("gallery self-check failed: {}", names.join("; "))))
}

fn verify_failure(e: VerifyError) -> Failure {
    match e {
        VerifyError::Graph(g) => Failure::Usage(g.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn run_verify<W: Write>(a: &VerifyArgs, as_json: bool, out: &mut W) -> Outcome {
    self_check()?;
    let spec = theorem(&a.theorem).map_err(|e| Failure::Usage(e.to_string()))?;
    let fuel = match &a.g6 {
        Some(path) => Fuel::Graphs(read_input(path, a.skip_bad)?),
        None => Fuel::Builtin,
    };
    let opts = VerifyOptions {
        require_exhaustive: a.require_exhaustive,
        sampled_only: a.sampled,
        ..verify_options(&a.budget)
    };
    let (report, code) = match verify(&spec, a.orders.clone(), &fuel, &opts) {
        Ok(r) => {
            let code = if r.violations > 0 {
                EXIT_COUNTEREXAMPLE
            } else if r.mode == Mode::Sampled {
                EXIT_INCOMPLETE
            } else {
                EXIT_OK
            };
            (r, code)
        }
        Err(VerifyError::Incomplete { order, reason, partial }) => {
            eprintln!("chordck: verification incomplete at order {order}: {reason}");
            let code = if partial.violations > 0 { EXIT_COUNTEREXAMPLE } else { EXIT_INCOMPLETE };
            (*partial, code)
        }
        Err(e) => return Err(verify_failure(e)),
    };
    if as_json {
        write_json(out, &report)?;
    } else {
        writeln!(out, "theorem {}: {}", spec.id, spec.statement)?;
        write_report(out, &report)?;
    }
    Ok(code)
}

fn write_report<W: Write>(out: &mut W, r: &VerificationReport) -> Result<(), Failure> {
    let mode = match r.mode {
        Mode::Exhaustive => "exhaustive",
        Mode::Sampled => "sampled",
    };
    writeln!(out, "orders {}..{}, mode {mode}", r.order[0], r.order[1])?;
    let header: Vec<String> = ["order", "mode", "scanned", "hypotheses", "counterexamples"].map(String::from).to_vec();
    let rows: Vec<Vec<String>> = r
        .per_order
        .iter()
        .map(|o| {
            vec![
                o.order.to_string(),
                format!("{:?}", o.mode).to_lowercase(),
                o.scanned.to_string(),
                o.hypothesis_count.to_string(),
                o.counterexamples.to_string(),
            ]
        })
        .collect();
    print_table(out, &header, &rows)?;
    if let Some(s) = &r.sampling {
        writeln!(
            out,
            "sampled from order {} with seed {}: {} attempts in a {:.0} s budget",
            s.seed_order, s.seed, s.attempts, s.budget_seconds
        )?;
    }
    for c in &r.counterexamples {
        let place = if c.below_order_bound { "below the order bound" } else { "VIOLATION" };
        writeln!(out, "counterexample {} (order {}, {place}): {} fails, missing {:?}", c.graph6, c.order, c.failed_clause, c.missing_lengths)?;
    }
    let below = r.counterexamples.len() - r.violations;
    writeln!(
        out,
        "scanned {}, hypotheses met {}, violations {}, below the order bound {}",
        r.scanned, r.hypothesis_count, r.violations, below
    )?;
    writeln!(out, "time {:.2} s", r.seconds)?;
    Ok(())
}

fn generate<W: Write>(a: &GenerateArgs, as_json: bool, out: &mut W) -> Outcome {
    let forbidden: Vec<Pattern> = a
        .forbid
        .iter()
        .map(|&k| make_pattern(k).map_err(|e| Failure::Usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    let connectivity = match a.require {
        Require::Any => Connectivity::Any,
        Require::Connected => Connectivity::Connected,
        Require::TwoConn => Connectivity::TwoConnected,
    };
    let mut spec = ClassSpec::new(a.order, forbidden, connectivity);
    if let Some(d) = a.max_degree {
        spec = spec.with_max_degree(d);
    }
    let mut opts = GenOptions::default();
    if let Some(b) = a.budget {
        opts = opts.with_budget(Duration::from_secs_f64(b));
    }
    let started = Instant::now();
    let class = match generate_class(&spec, &opts) {
        Ok(c) => c,
        Err(EnumerateError::Incomplete { order, reason, stats }) => {
            eprintln!("chordck: generation incomplete at order {order}: {reason}");
            if as_json || a.emit == Emit::Json {
                write_json(out, &json!({ "complete": false, "stats": stats }))?;
            }
            return Ok(EXIT_INCOMPLETE);
        }
        Err(e) => return Err(Failure::Usage(e.to_string())),
    };
    if as_json || a.emit == Emit::Json {
        let forbid: Vec<String> = a.forbid.iter().map(|k| k.to_string()).collect();
        let codes: Vec<&str> = class.codes.iter().map(|c| c.as_str()).collect();
        write_json(
            out,
            &json!({
                "complete": true,
                "order": a.order,
                "forbidden": forbid,
                "connectivity": connectivity,
                "max_degree": a.max_degree,
                "count": codes.len(),
                "graphs": codes,
                "stats": class.stats,
            }),
        )?;
    } else {
        for c in &class.codes {
            writeln!(out, "{}", c.as_str())?;
        }
        summarize(&class.stats, started);
    }
    Ok(EXIT_OK)
}

fn summarize(stats: &GenStats, started: Instant) {
    let kept: Vec<String> = stats.levels.iter().map(|l| l.kept.to_string()).collect();
    eprintln!(
        "chordck: {} graphs emitted; level sizes {}; {:.2} s",
        stats.emitted,
        kept.join(" "),
        started.elapsed().as_secs_f64()
    );
}

fn show_gallery<W: Write>(a: &GalleryArgs, as_json: bool, out: &mut W) -> Outcome {
    let fixed = ["prism", "rook3", "k5_minus_e", "fig7", "p6_case2"];
    let names: Vec<String> = match &a.name {
        Some(n) => vec![n.trim().to_ascii_lowercase()],
        None => fixed.iter().map(|s| s.to_string()).collect(),
    };
    let checks = gallery_self_checks();
    let mut all_hold = true;
    let mut items = Vec::new();
    for name in &names {
        let g = gallery(name).map_err(|e| Failure::Usage(e.to_string()))?;
        let mine: Vec<&GalleryCheck> = checks.iter().filter(|c| c.name == name.as_str()).collect();
        all_hold &= mine.iter().all(|c| c.holds);
        if as_json {
            items.push(json!({
                "name": name,
                "graph6": g6(&g),
                "order": g.order(),
                "size": g.size(),
                "edges": g.edges().collect::<Vec<_>>(),
                "checks": mine,
            }));
        } else {
            writeln!(out, "{name}: {}", g6(&g))?;
            writeln!(out, "  order {}, size {}", g.order(), g.size())?;
            for c in mine {
                writeln!(out, "  {}: {}", c.property, if c.holds { "confirmed" } else { "FAILED" })?;
            }
        }
    }
    if as_json {
        if a.name.is_some() {
            write_json(out, &items[0])?;
        } else {
            write_json(out, &items)?;
        }
    }
    if all_hold {
        Ok(EXIT_OK)
    } else {
        Err(Failure::Internal("a gallery self-check failed".into()))
    }
}

fn search<W: Write>(a: &SearchArgs, as_json: bool, out: &mut W) -> Outcome {
    let spec = theorem(&a.theorem).map_err(|e| Failure::Usage(e.to_string()))?;
    let result = sharpness_search(&spec, a.order, &verify_options(&a.budget)).map_err(verify_failure)?;
    if as_json {
        write_json(out, &result)?;
    } else {
        let mode = if result.exhaustive { "exhaustive" } else { "sampled" };
        writeln!(out, "search {} at order {} ({mode}): {} found", spec.id, a.order, result.found.len())?;
        for c in &result.report.counterexamples {
            writeln!(out, "{}  {} fails, missing {:?}", c.graph6, c.failed_clause, c.missing_lengths)?;
        }
        writeln!(out, "scanned {}, hypotheses met {}", result.report.scanned, result.report.hypothesis_count)?;
        writeln!(out, "time {:.2} s", result.report.seconds)?;
    }
    Ok(if !result.found.is_empty() {
        EXIT_COUNTEREXAMPLE
    } else if result.exhaustive {
        EXIT_OK
    } else {
        EXIT_INCOMPLETE
    })
}
