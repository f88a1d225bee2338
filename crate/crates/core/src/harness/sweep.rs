use std::collections::BTreeSet;
use std::io::{self, Write};
use std::time::Duration;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::conjecture::{confirm_c7_exception, search_counterexample_in, C7Report, CounterexampleSearch};
use super::corpus::{enumerate_connected_graphs, sample_connected_graphs, EXHAUSTIVE_LIMIT};
use super::HarnessError;
use crate::budget::Budget;
use crate::coloring::{chromatic_number, circular_chromatic_number, is_valid_circular, KColoring};
use crate::constructions::{theorem1, theorem2, theorem3, theorem4, ConstructionError};
use crate::graph::{generate, Family, Graph, Orientation};
use crate::rainbow::{verify_directed_rainbow, verify_rainbow, RainbowTable};

/// Graphs with at most this many edges get every orientation checked.
const ORIENTATION_EXHAUSTIVE_EDGES: usize = 12;
/// Sampled orientations per graph above that size.
const ORIENTATION_SAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    ChiBounds,
    C7Exception,
}

impl Check {
    pub const ALL: [Check; 6] =
        [Check::Theorem1, Check::Theorem2, Check::Theorem3, Check::Theorem4, Check::ChiBounds, Check::C7Exception];
}

/// Seeded random connected graphs added to the corpus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomCorpus {
    pub count: usize,
    pub min_vertices: usize,
    pub max_vertices: usize,
}

/// What to sweep and which properties to check.
///
/// The corpus is every connected labelled graph on `1..=max_vertices`
/// vertices, then `families`, then `random`. Omitted fields take the values of
/// [`SweepConfig::default`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub families: Vec<Family>,
    pub random: Option<RandomCorpus>,
    pub seed: u64,
    /// Per-graph, per-check wall-clock budget. Zero skips every budgeted
    /// check.
    pub budget_ms: u64,
    pub checks: BTreeSet<Check>,
    /// Also look for a graph where no `chi`-coloring has every vertex begin a
    /// full rainbow path.
    pub counterexample_search: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_vertices: 5,
            families: Vec::new(),
            random: None,
            seed: 0,
            budget_ms: 30_000,
            checks: Check::ALL.into_iter().collect(),
            counterexample_search: false,
        }
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let cfg: SweepConfig = serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.max_vertices > EXHAUSTIVE_LIMIT {
            return Err(HarnessError::TooLarge { requested: self.max_vertices, limit: EXHAUSTIVE_LIMIT });
        }
        if self.max_vertices == 0 && self.families.is_empty() && self.random.as_ref().is_none_or(|r| r.count == 0) {
            return Err(HarnessError::Config("the corpus is empty".into()));
        }
        if let Some(r) = &self.random {
            if r.min_vertices == 0 || r.min_vertices > r.max_vertices || r.max_vertices > 64 {
                return Err(HarnessError::Config(format!(
                    "random vertex range {}..={} is invalid",
                    r.min_vertices, r.max_vertices
                )));
            }
        }
        for family in &self.families {
            generate(family)?;
        }
        Ok(())
    }

    pub fn budget(&self) -> Budget {
        Budget::with_time(Duration::from_millis(self.budget_ms))
    }

    /// The corpus in sweep order.
    pub fn corpus(&self) -> Result<Vec<Graph>, HarnessError> {
        self.validate()?;
        let mut graphs: Vec<Graph> = enumerate_connected_graphs(self.max_vertices)?.collect();
        for family in &self.families {
            graphs.push(generate(family)?);
        }
        if let Some(r) = &self.random {
            graphs.extend(sample_connected_graphs(r.count, r.min_vertices, r.max_vertices, self.seed));
        }
        Ok(graphs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// The oracle refuted a guaranteed conclusion.
    Fail,
    /// Hypothesis not met, input unsupported, or budget exhausted.
    Skipped,
    /// Outside every proven case; nothing is claimed.
    Open,
}

/// The outcome of one check on one graph. Failures carry everything needed
/// to replay them with [`run_check`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub graph: Graph,
    pub check: Check,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<KColoring>,
    /// Arcs of the offending orientation, for failed orientation checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<(usize, usize)>>,
}

impl SweepRecord {
    fn new(graph: &Graph, check: Check, status: Status, reason: Option<String>) -> Self {
        SweepRecord { graph: graph.clone(), check, status, reason, coloring: None, orientation: None }
    }

    fn pass(graph: &Graph, check: Check) -> Self {
        Self::new(graph, check, Status::Pass, None)
    }

    fn fail(graph: &Graph, check: Check, reason: impl Into<String>, coloring: Option<KColoring>) -> Self {
        SweepRecord { coloring, ..Self::new(graph, check, Status::Fail, Some(reason.into())) }
    }

    fn skipped(graph: &Graph, check: Check, reason: impl Into<String>) -> Self {
        Self::new(graph, check, Status::Skipped, Some(reason.into()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub graphs: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub open: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub records: Vec<SweepRecord>,
    pub counters: Counters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c7_exception: Option<C7Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleSearch>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &SweepRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.counters.fail > 0
    }

    /// One JSON object per record, one per line.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for record in &self.records {
            serde_json::to_writer(&mut out, record)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    /// Everything except the records.
    pub fn summary(&self) -> serde_json::Value {
        let mut summary = serde_json::json!({ "counters": self.counters });
        if let Some(c7) = &self.c7_exception {
            summary["c7_exception"] = serde_json::to_value(c7).expect("serializable");
            summary["begins_everywhere_colorings"] = c7.c7.begins_everywhere.into();
        }
        if let Some(search) = &self.counterexample {
            summary["counterexample_search"] = serde_json::to_value(search).expect("serializable");
        }
        summary
    }
}

/// Runs every enabled check on every corpus graph.
///
/// Graphs are processed in parallel; records come back in corpus order with
/// checks in [`Check`] order, so the report depends only on `cfg`. The
/// `c7_exception` check contributes two records (for `C_7` and `C_5`) after the
/// corpus.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, HarnessError> {
    let corpus = cfg.corpus()?;
    let per_graph: Vec<Check> = cfg.checks.iter().copied().filter(|&c| c != Check::C7Exception).collect();
    let mut records: Vec<SweepRecord> =
        corpus.par_iter().flat_map_iter(|g| per_graph.iter().map(move |&check| run_check(g, check, cfg))).collect();

    let c7_exception = cfg.checks.contains(&Check::C7Exception).then(|| {
        let report = confirm_c7_exception();
        for counts in [&report.c7, &report.c5] {
            let ok = if counts.graph.vertex_count() == 7 {
                counts.begins_everywhere == 0 && counts.lies_on_everywhere >= 1
            } else {
                counts.begins_everywhere >= 1
            };
            records.push(if ok {
                SweepRecord::pass(&counts.graph, Check::C7Exception)
            } else {
                SweepRecord::fail(
                    &counts.graph,
                    Check::C7Exception,
                    format!(
                        "{} begins-everywhere and {} lies-on-everywhere colorings",
                        counts.begins_everywhere, counts.lies_on_everywhere
                    ),
                    None,
                )
            });
        }
        report
    });
    let counterexample = cfg.counterexample_search.then(|| search_counterexample_in(&corpus, &cfg.budget_per_graph()));

    let mut counters = Counters { graphs: corpus.len(), ..Counters::default() };
    for r in &records {
        match r.status {
            Status::Pass => counters.pass += 1,
            Status::Fail => counters.fail += 1,
            Status::Skipped => counters.skipped += 1,
            Status::Open => counters.open += 1,
        }
    }
    Ok(SweepReport { records, counters, c7_exception, counterexample })
}

impl SweepConfig {
    pub(crate) fn budget_per_graph(&self) -> Duration {
        Duration::from_millis(self.budget_ms)
    }
}

/// Runs one check on one graph with `cfg`'s budget and seed. Replaying a
/// record's graph and check reproduces the record, up to budget timing.
pub fn run_check(g: &Graph, check: Check, cfg: &SweepConfig) -> SweepRecord {
    match check {
        Check::Theorem1 => check_theorem1(g, &cfg.budget()),
        Check::Theorem2 => check_theorem2(g, &cfg.budget()),
        Check::Theorem3 => check_theorem3(g, &cfg.budget()),
        Check::Theorem4 => check_theorem4(g, cfg.seed),
        Check::ChiBounds => check_chi_bounds(g, &cfg.budget()),
        Check::C7Exception => {
            let counts = super::conjecture::exception_counts(g, chromatic_number(g).0, &cfg.budget());
            match counts {
                Ok(c) => SweepRecord::new(
                    g,
                    check,
                    Status::Pass,
                    Some(format!(
                        "{} begins-everywhere and {} lies-on-everywhere colorings",
                        c.begins_everywhere, c.lies_on_everywhere
                    )),
                ),
                Err(e) => SweepRecord::skipped(g, check, e.to_string()),
            }
        }
    }
}

/// Maps construction errors that do not refute anything to `Skipped`.
fn construction_error(g: &Graph, check: Check, e: ConstructionError) -> SweepRecord {
    match e {
        ConstructionError::Internal(msg) => SweepRecord::fail(g, check, msg, None),
        other => SweepRecord::skipped(g, check, other.to_string()),
    }
}

fn check_theorem1(g: &Graph, budget: &Budget) -> SweepRecord {
    let check = Check::Theorem1;
    let out = match theorem1(g, budget) {
        Ok(out) => out,
        Err(e) => return construction_error(g, check, e),
    };
    let f = out.coloring;
    let (k, _) = chromatic_number(g);
    if f.k() != k || !f.is_proper(g) {
        return SweepRecord::fail(g, check, format!("not a proper {k}-coloring"), Some(f));
    }
    match verify_rainbow(g, &f) {
        Ok(report) => match report.lies_on.iter().position(|&b| !b) {
            None => SweepRecord::pass(g, check),
            Some(v) => SweepRecord::fail(g, check, format!("vertex {v} lies on no full rainbow path"), Some(f)),
        },
        Err(e) => SweepRecord::skipped(g, check, e.to_string()),
    }
}

fn check_theorem2(g: &Graph, budget: &Budget) -> SweepRecord {
    let check = Check::Theorem2;
    let r = match theorem2(g, budget) {
        Ok(r) => r,
        Err(e) => return construction_error(g, check, e),
    };
    let f = r.coloring;
    let (k, _) = chromatic_number(g);
    let (n, d) = (r.shifted_circular.n() as u64, r.shifted_circular.d() as u64);
    if f.k() != k || !f.is_proper(g) {
        return SweepRecord::fail(g, check, format!("not a proper {k}-coloring"), Some(f));
    }
    let k64 = k as u64;
    let bound = Ratio::new(k64 * (n + d - k64 * d), n);
    if Ratio::from(r.strong_set.len() as u64) < bound * Ratio::from(g.vertex_count() as u64) {
        return SweepRecord::fail(
            g,
            check,
            format!("{} strong vertices, bound {} of {}", r.strong_set.len(), bound, g.vertex_count()),
            Some(f),
        );
    }
    let table = match RainbowTable::build(g, &f) {
        Ok(t) => t,
        Err(e) => return SweepRecord::skipped(g, check, e.to_string()),
    };
    if let Some(&v) = r.strong_set.iter().find(|&&v| !table.begins(v)) {
        return SweepRecord::fail(g, check, format!("strong vertex {v} begins no full rainbow path"), Some(f));
    }
    if let Some(&v) = r.weak_set.iter().find(|&&v| !table.begins_with_order(v, k - 1)) {
        return SweepRecord::fail(
            g,
            check,
            format!("weak vertex {v} begins no rainbow path of order {}", k - 1),
            Some(f),
        );
    }
    SweepRecord::pass(g, check)
}

fn check_theorem3(g: &Graph, budget: &Budget) -> SweepRecord {
    let check = Check::Theorem3;
    let out = match theorem3(g, None, budget) {
        Ok(out) => out,
        Err(ConstructionError::Hypothesis(msg)) if msg.starts_with("no cycle") && chromatic_number(g).0 >= 4 => {
            return SweepRecord::new(g, check, Status::Open, Some(msg));
        }
        Err(e) => return construction_error(g, check, e),
    };
    let f = out.coloring;
    let (k, _) = chromatic_number(g);
    if f.k() != k || !f.is_proper(g) {
        return SweepRecord::fail(g, check, format!("not a proper {k}-coloring"), Some(f));
    }
    match verify_rainbow(g, &f) {
        Ok(report) => match report.begins.iter().position(|&b| !b) {
            None => SweepRecord::pass(g, check),
            Some(v) => SweepRecord::fail(g, check, format!("vertex {v} begins no full rainbow path"), Some(f)),
        },
        Err(e) => SweepRecord::skipped(g, check, e.to_string()),
    }
}

/// FNV-1a over the edge list, so sampled orientations depend on the graph
/// and the seed only.
fn graph_seed(g: &Graph, seed: u64) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed;
    for &(u, v) in g.edges() {
        for x in [u as u64, v as u64] {
            h ^= x;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Orientation masks checked for `g`: all of them for small edge counts,
/// otherwise a seeded sample.
pub(crate) fn orientation_masks(g: &Graph, seed: u64) -> Vec<u64> {
    let m = g.edge_count();
    if m <= ORIENTATION_EXHAUSTIVE_EDGES {
        (0..1u64 << m).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(graph_seed(g, seed));
        let mask = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
        (0..ORIENTATION_SAMPLES).map(|_| rng.gen::<u64>() & mask).collect()
    }
}

fn check_theorem4(g: &Graph, seed: u64) -> SweepRecord {
    let check = Check::Theorem4;
    if g.edge_count() > 64 {
        return SweepRecord::skipped(g, check, "more than 64 edges");
    }
    let (k, _) = chromatic_number(g);
    if k != 3 || !g.is_connected() {
        return SweepRecord::skipped(g, check, format!("chromatic number is {k}, not 3, or graph is disconnected"));
    }
    let masks = orientation_masks(g, seed);
    for &mask in &masks {
        let d = Orientation::from_mask(g.clone(), mask);
        let failure = match theorem4(&d) {
            Err(e) if e.is_internal() => Some((e.to_string(), None)),
            Err(e) => return SweepRecord::skipped(g, check, e.to_string()),
            Ok(out) => {
                let f = out.coloring;
                if f.k() != 3 || !f.is_proper(g) {
                    Some(("not a proper 3-coloring".to_string(), Some(f)))
                } else {
                    match verify_directed_rainbow(&d, &f) {
                        Ok(Some(_)) => None,
                        Ok(None) => Some(("no directed full rainbow path".to_string(), Some(f))),
                        Err(e) => Some((e.to_string(), Some(f))),
                    }
                }
            }
        };
        if let Some((reason, coloring)) = failure {
            let mut record = SweepRecord::fail(g, check, reason, coloring);
            record.orientation = Some(d.arcs());
            return record;
        }
    }
    SweepRecord::new(g, check, Status::Pass, Some(format!("{} orientations", masks.len())))
}

fn check_chi_bounds(g: &Graph, budget: &Budget) -> SweepRecord {
    let check = Check::ChiBounds;
    let (chi, witness) = chromatic_number(g);
    if chi == 0 {
        return SweepRecord::skipped(g, check, "graph has no vertices");
    }
    if !witness.is_proper(g) {
        return SweepRecord::fail(g, check, "chromatic witness is not proper", Some(witness));
    }
    let (chi_c, c) = match circular_chromatic_number(g, budget) {
        Ok(x) => x,
        Err(e) => return SweepRecord::skipped(g, check, e.to_string()),
    };
    let (n, d) = (chi_c.n, chi_c.d);
    if (chi - 1) * d >= n || n > chi * d || chi_c.ceil() != chi {
        return SweepRecord::fail(g, check, format!("chi_c = {chi_c} is outside ({}, {chi}]", chi - 1), None);
    }
    if c.n() != n || c.d() != d || !is_valid_circular(g, &c) {
        return SweepRecord::fail(g, check, format!("witness is not a valid ({n}, {d})-coloring"), None);
    }
    SweepRecord::new(g, check, Status::Pass, Some(format!("chi = {chi}, chi_c = {chi_c}")))
}
