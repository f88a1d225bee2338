//! The `rainbow` command line: argument parsing, file loading and the
//! mapping from outcomes to exit codes. `main` only prints what [`run`]
//! returns.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rainbow_core::coloring::io::parse_coloring;
use rainbow_core::coloring::{chromatic_number, circular_chromatic_number, ColoringError};
use rainbow_core::constructions::{theorem1, theorem2, theorem3, theorem4, ConstructionError};
use rainbow_core::graph::dimacs::parse_dimacs;
use rainbow_core::graph::edge_list::{parse_edge_list, parse_orientation};
use rainbow_core::harness::{run_sweep, HarnessError, SweepConfig};
use rainbow_core::rainbow::{verify_directed_rainbow, RainbowError, RainbowTable};
use rainbow_core::{Budget, Graph, KColoring, Orientation};
use serde_json::{json, Value};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    /// The requested property is false, or the search ran out of budget.
    Refuted = 1,
    /// Bad arguments, unreadable or malformed input, or an input that does
    /// not meet a construction's hypothesis.
    Input = 2,
    /// A guaranteed conclusion failed verification.
    Internal = 3,
}

/// What a command produced: a JSON payload for stdout, diagnostics for
/// stderr and an exit code.
#[derive(Debug)]
pub struct CommandResult {
    pub exit: Exit,
    pub payload: Option<Value>,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult { exit: Exit::Success, payload: Some(payload), diagnostics: Vec::new() }
    }

    fn error(exit: Exit, message: impl Into<String>) -> Self {
        CommandResult { exit, payload: None, diagnostics: vec![message.into()] }
    }

    fn with(mut self, exit: Exit, message: impl Into<String>) -> Self {
        self.exit = exit;
        self.diagnostics.push(message.into());
        self
    }

    pub fn code(&self) -> i32 {
        self.exit as i32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// DIMACS `p edge` / `e u v`, 1-based.
    Dimacs,
    /// One `u v` pair per line, 0-based.
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Every vertex lies on a full rainbow path.
    #[value(name = "lies_on")]
    LiesOn,
    /// Every vertex begins a full rainbow path.
    Begins,
    /// The orientation has a directed full rainbow path.
    Directed,
}

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Optimal colorings with full rainbow paths")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic or circular chromatic number of a graph
    Chromatic {
        input: PathBuf,
        /// Compute chi_c with a witness (n, d)-coloring
        #[arg(long)]
        circular: bool,
        /// Input format; by default `.col` and `.dimacs` files are DIMACS and
        /// everything else is an edge list
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Search budget in milliseconds
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Build and verify a coloring with full rainbow paths
    Color {
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        theorem: u8,
        /// Comma-separated cycle of length chi for theorem 3, e.g. "0,1,2"
        #[arg(long)]
        cycle: Option<String>,
        /// Arc list (`u v` per line, 0-based) for theorem 4
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Check a coloring against the exact rainbow-path verifier
    Verify {
        input: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Palette size; defaults to the file's `k` or its largest color
        #[arg(long)]
        k: Option<usize>,
        /// Arc list for `--mode directed`
        #[arg(long)]
        orientation: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
    },
    /// Run a sweep described by a JSON config
    Sweep {
        config: PathBuf,
        /// Where to write the JSON-lines records
        #[arg(long)]
        out: PathBuf,
        /// Overrides the config seed
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the config per-graph budget
        #[arg(long)]
        budget_ms: Option<u64>,
    },
}

pub fn run(cli: Cli) -> CommandResult {
    let result = match cli.command {
        Command::Chromatic { input, circular, format, budget_ms } => {
            cmd_chromatic(&input, circular, format, budget(budget_ms))
        }
        Command::Color { input, theorem, cycle, orientation, format, budget_ms } => {
            cmd_color(&input, theorem, cycle.as_deref(), orientation.as_deref(), format, budget(budget_ms))
        }
        Command::Verify { input, coloring, mode, k, orientation, format } => {
            cmd_verify(&input, &coloring, mode, k, orientation.as_deref(), format)
        }
        Command::Sweep { config, out, seed, budget_ms } => cmd_sweep(&config, &out, seed, budget_ms),
    };
    result.unwrap_or_else(|e| CommandResult::error(Exit::Input, format!("{e:#}")))
}

fn budget(ms: Option<u64>) -> Budget {
    ms.map_or_else(Budget::unlimited, |ms| Budget::with_time(Duration::from_millis(ms)))
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_graph(path: &Path, format: Option<GraphFormat>) -> anyhow::Result<Graph> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("col" | "dimacs") => GraphFormat::Dimacs,
        _ => GraphFormat::Edges,
    });
    let text = read(path)?;
    let g = match format {
        GraphFormat::Dimacs => parse_dimacs(&text),
        GraphFormat::Edges => parse_edge_list(&text),
    };
    g.with_context(|| format!("malformed graph {}", path.display()))
}

fn load_orientation(g: &Graph, path: &Path) -> anyhow::Result<Orientation> {
    parse_orientation(g, &read(path)?).with_context(|| format!("malformed orientation {}", path.display()))
}

fn construction_failure(e: ConstructionError) -> CommandResult {
    let exit = match e {
        ConstructionError::Internal(_) => Exit::Internal,
        ConstructionError::Budget(_) => Exit::Refuted,
        _ => Exit::Input,
    };
    CommandResult::error(exit, e.to_string())
}

fn cmd_chromatic(
    input: &Path,
    circular: bool,
    format: Option<GraphFormat>,
    budget: Budget,
) -> anyhow::Result<CommandResult> {
    let g = load_graph(input, format)?;
    if g.is_empty() {
        return Ok(CommandResult::error(Exit::Input, "graph has no vertices"));
    }
    if !circular {
        let (chi, _) = chromatic_number(&g);
        return Ok(CommandResult::ok(json!({ "chi": chi })));
    }
    Ok(match circular_chromatic_number(&g, &budget) {
        Ok((chi_c, witness)) => CommandResult::ok(json!({
            "chi_c": { "n": chi_c.n, "d": chi_c.d },
            "witness": witness.values(),
        })),
        Err(ColoringError::Budget(e)) => CommandResult::error(Exit::Refuted, e.to_string()),
        Err(e @ ColoringError::TooManyValues(_)) => CommandResult::error(Exit::Input, e.to_string()),
        Err(e) => CommandResult::error(Exit::Internal, e.to_string()),
    })
}

fn parse_cycle(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',').map(|t| t.trim().parse::<usize>().with_context(|| format!("invalid cycle vertex `{t}`"))).collect()
}

fn cmd_color(
    input: &Path,
    theorem: u8,
    cycle: Option<&str>,
    orientation: Option<&Path>,
    format: Option<GraphFormat>,
    budget: Budget,
) -> anyhow::Result<CommandResult> {
    let g = load_graph(input, format)?;
    if cycle.is_some() && theorem != 3 {
        anyhow::bail!("--cycle applies to theorem 3 only");
    }
    if orientation.is_some() && theorem != 4 {
        anyhow::bail!("--orientation applies to theorem 4 only");
    }
    let built = match theorem {
        1 => theorem1(&g, &budget).map(|out| {
            let witnesses = json!(out.report.witnesses);
            (out.coloring.clone(), witnesses, json!(out))
        }),
        2 => theorem2(&g, &budget).map(|out| {
            let witnesses = json!({ "full": out.report.witnesses, "weak": out.weak_witnesses });
            (out.coloring.clone(), witnesses, json!(out))
        }),
        3 => {
            let cycle = cycle.map(parse_cycle).transpose()?;
            theorem3(&g, cycle.as_deref(), &budget).map(|out| {
                let witnesses = json!(out.report.witnesses);
                (out.coloring.clone(), witnesses, json!(out))
            })
        }
        4 => {
            let path = orientation.context("theorem 4 needs --orientation")?;
            let d = load_orientation(&g, path)?;
            return Ok(match theorem4(&d) {
                Ok(out) => {
                    let verdict = verify_directed(&d, &out.coloring);
                    envelope(4, &out.coloring, json!([out.witness.vertices]), json!(out), verdict)
                }
                Err(e) => construction_failure(e),
            });
        }
        _ => unreachable!("clap restricts --theorem to 1..=4"),
    };
    Ok(match built {
        Ok((f, witnesses, trace)) => {
            let verdict = verify_undirected(&g, &f, theorem);
            envelope(theorem, &f, witnesses, trace, verdict)
        }
        Err(e) => construction_failure(e),
    })
}

/// Independent re-check of a construction's conclusion: `Ok(verified)` or
/// the reason it failed.
type Verdict = Result<Value, String>;

fn verify_undirected(g: &Graph, f: &KColoring, theorem: u8) -> Verdict {
    let (chi, _) = chromatic_number(g);
    if f.k() != chi {
        return Err(format!("coloring uses {} colors, chi is {chi}", f.k()));
    }
    if let Some((u, v)) = f.first_conflict(g) {
        return Err(format!("edge {{{u}, {v}}} is monochromatic"));
    }
    let table = RainbowTable::build(g, f).map_err(|e| e.to_string())?;
    let lies_on = g.vertices().all(|v| table.lies_on(v));
    let begins = g.vertices().filter(|&v| table.begins(v)).count();
    let ok = match theorem {
        1 => lies_on,
        2 => g.vertices().all(|v| table.begins(v) || table.begins_with_order(v, chi - 1)),
        _ => begins == g.vertex_count(),
    };
    let verified = json!({ "proper": true, "lies_on": lies_on, "begins_count": begins });
    if ok {
        Ok(verified)
    } else {
        Err(format!("theorem {theorem} conclusion does not hold: {verified}"))
    }
}

fn verify_directed(d: &Orientation, f: &KColoring) -> Verdict {
    if f.k() != 3 || !f.is_proper(d.base()) {
        return Err("not a proper 3-coloring".into());
    }
    match verify_directed_rainbow(d, f) {
        Ok(Some(path)) => Ok(json!({ "proper": true, "directed_path": path.vertices })),
        Ok(None) => Err("no directed full rainbow path".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn envelope(theorem: u8, f: &KColoring, witnesses: Value, trace: Value, verdict: Verdict) -> CommandResult {
    let mut payload = json!({
        "theorem": theorem,
        "k": f.k(),
        "coloring": f.colors(),
        "witnesses": witnesses,
        "trace": trace,
    });
    match verdict {
        Ok(verified) => {
            payload["verified"] = verified;
            CommandResult::ok(payload)
        }
        Err(reason) => {
            payload["verified"] = Value::Bool(false);
            CommandResult::ok(payload).with(Exit::Internal, format!("internal verification failure: {reason}"))
        }
    }
}

fn cmd_verify(
    input: &Path,
    coloring: &Path,
    mode: Mode,
    k: Option<usize>,
    orientation: Option<&Path>,
    format: Option<GraphFormat>,
) -> anyhow::Result<CommandResult> {
    let g = load_graph(input, format)?;
    let f =
        parse_coloring(&read(coloring)?, k).with_context(|| format!("malformed coloring {}", coloring.display()))?;
    if f.len() != g.vertex_count() {
        anyhow::bail!("coloring has {} vertices, graph has {}", f.len(), g.vertex_count());
    }
    if let Some((u, v)) = f.first_conflict(&g) {
        anyhow::bail!("coloring is not proper: edge {{{u}, {v}}} has both ends colored {}", f.color(u));
    }
    if orientation.is_some() != (mode == Mode::Directed) {
        anyhow::bail!("--orientation is required with --mode directed and only allowed there");
    }
    let too_many = |e: RainbowError| CommandResult::error(Exit::Input, e.to_string());

    if let Some(path) = orientation {
        let d = load_orientation(&g, path)?;
        return Ok(match verify_directed_rainbow(&d, &f) {
            Ok(witness) => {
                let holds = witness.is_some();
                let result = CommandResult::ok(json!({
                    "mode": "directed",
                    "holds": holds,
                    "witness": witness.map(|w| w.vertices),
                }));
                if holds {
                    result
                } else {
                    result.with(Exit::Refuted, "no directed full rainbow path")
                }
            }
            Err(e) => too_many(e),
        });
    }

    let table = match RainbowTable::build(&g, &f) {
        Ok(t) => t,
        Err(e) => return Ok(too_many(e)),
    };
    let report = table.report();
    let (name, verdicts) = match mode {
        Mode::LiesOn => ("lies_on", &report.lies_on),
        _ => ("begins", &report.begins),
    };
    let failing: Vec<usize> = g.vertices().filter(|&v| !verdicts[v]).collect();
    let result = CommandResult::ok(json!({
        "mode": name,
        "holds": failing.is_empty(),
        "k": f.k(),
        "report": report,
    }));
    Ok(if failing.is_empty() {
        result
    } else {
        result.with(Exit::Refuted, format!("{name} fails at vertices {failing:?}"))
    })
}

fn cmd_sweep(config: &Path, out: &Path, seed: Option<u64>, budget_ms: Option<u64>) -> anyhow::Result<CommandResult> {
    let mut cfg = SweepConfig::from_json(&read(config)?).with_context(|| format!("bad config {}", config.display()))?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    if let Some(ms) = budget_ms {
        cfg.budget_ms = ms;
    }
    let report = match run_sweep(&cfg) {
        Ok(r) => r,
        Err(e @ (HarnessError::Config(_) | HarnessError::TooLarge { .. } | HarnessError::Graph(_))) => {
            return Ok(CommandResult::error(Exit::Input, e.to_string()))
        }
    };
    let file = fs::File::create(out).with_context(|| format!("cannot create {}", out.display()))?;
    let mut writer = std::io::BufWriter::new(file);
    report
        .write_jsonl(&mut writer)
        .and_then(|_| std::io::Write::flush(&mut writer))
        .with_context(|| format!("cannot write {}", out.display()))?;

    let result = CommandResult::ok(report.summary());
    Ok(if report.has_failures() {
        let n = report.counters.fail;
        result.with(Exit::Internal, format!("{n} failing records, see {}", out.display()))
    } else if report.counterexample.as_ref().is_some_and(|s| s.counterexample.is_some()) {
        result.with(Exit::Refuted, "counterexample found")
    } else {
        result
    })
}
