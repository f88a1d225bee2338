use std::time::Duration;

use serde::Serialize;

use super::HarnessError;
use crate::budget::{Budget, BudgetExhausted, Meter};
use crate::coloring::{chromatic_number, enumerate_proper_colorings, KColoring};
use crate::graph::{generate, Family, Graph};
use crate::rainbow::{RainbowError, RainbowTable};

use super::sweep::SweepConfig;

/// Exhaustive counts over all proper `k`-colorings of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionCounts {
    pub graph: Graph,
    pub k: usize,
    pub colorings: usize,
    /// Colorings in which every vertex begins a full rainbow path.
    pub begins_everywhere: usize,
    /// Colorings in which every vertex lies on a full rainbow path.
    pub lies_on_everywhere: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C7Report {
    pub c7: ExceptionCounts,
    pub c5: ExceptionCounts,
    /// No coloring of `C_7` has the begins property, one has the lies-on
    /// property, and `C_5` has a coloring with the begins property.
    pub confirmed: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CountError {
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

/// Counts the proper `k`-colorings of `g` with the begins and lies-on
/// properties everywhere.
pub fn exception_counts(g: &Graph, k: usize, budget: &Budget) -> Result<ExceptionCounts, CountError> {
    let mut meter = Meter::new(budget);
    let mut counts = ExceptionCounts { graph: g.clone(), k, colorings: 0, begins_everywhere: 0, lies_on_everywhere: 0 };
    for f in enumerate_proper_colorings(g, k) {
        meter.tick()?;
        let table = RainbowTable::build(g, &f)?;
        counts.colorings += 1;
        if g.vertices().all(|v| table.begins(v)) {
            counts.begins_everywhere += 1;
        }
        if g.vertices().all(|v| table.lies_on(v)) {
            counts.lies_on_everywhere += 1;
        }
    }
    Ok(counts)
}

/// Enumerates every proper 3-coloring of `C_7` and of `C_5`.
pub fn confirm_c7_exception() -> C7Report {
    let count = |k| {
        let g = generate(&Family::Cycle(k)).expect("valid cycle");
        exception_counts(&g, 3, &Budget::unlimited()).expect("three colors, no budget")
    };
    let (c7, c5) = (count(7), count(5));
    let confirmed = c7.begins_everywhere == 0 && c7.lies_on_everywhere >= 1 && c5.begins_everywhere >= 1;
    C7Report { c7, c5, confirmed }
}

/// True for any labelling of the 7-cycle.
pub fn is_seven_cycle(g: &Graph) -> bool {
    g.vertex_count() == 7 && g.edge_count() == 7 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2)
}

/// A graph on which no `chi`-coloring has every vertex begin a full rainbow
/// path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingCase {
    pub graph: Graph,
    pub k: usize,
    /// Colorings examined, counted up to permutation of the colors.
    pub colorings: usize,
    /// The graph is the 7-cycle.
    pub known_exception: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CounterexampleSearch {
    /// Graphs fully decided.
    pub examined: usize,
    /// Graphs abandoned on budget or color-count limits; the search is
    /// partial when this is nonzero.
    pub skipped: usize,
    /// The first failing graph other than the 7-cycle.
    pub counterexample: Option<FailingCase>,
    /// The first 7-cycle met, if any.
    pub known_exception: Option<FailingCase>,
}

impl CounterexampleSearch {
    /// The counterexample if there is one, else the known exception.
    pub fn failing_case(&self) -> Option<&FailingCase> {
        self.counterexample.as_ref().or(self.known_exception.as_ref())
    }
}

/// True when `f` introduces colors in the order `1, 2, …` along the vertex
/// order; every coloring class under color permutation has exactly one such
/// member.
fn is_canonical(f: &KColoring) -> bool {
    let mut next = 1;
    for &c in f.colors() {
        if c > next {
            return false;
        }
        if c == next {
            next += 1;
        }
    }
    true
}

/// `Some(colorings tried)` when no `k`-coloring has the begins property
/// everywhere, `None` once one is found.
fn no_begins_coloring(g: &Graph, k: usize, budget: &Budget) -> Result<Option<usize>, CountError> {
    let mut meter = Meter::new(budget);
    let mut tried = 0;
    for f in enumerate_proper_colorings(g, k).filter(is_canonical) {
        meter.tick()?;
        tried += 1;
        let table = RainbowTable::build(g, &f)?;
        if g.vertices().all(|v| table.begins(v)) {
            return Ok(None);
        }
    }
    Ok(Some(tried))
}

/// Searches `cfg`'s corpus for a graph where no `chi`-coloring has every
/// vertex begin a full rainbow path.
pub fn search_counterexample(cfg: &SweepConfig) -> Result<CounterexampleSearch, HarnessError> {
    Ok(search_counterexample_in(&cfg.corpus()?, &cfg.budget_per_graph()))
}

/// Stops at the first counterexample. Each graph gets its own budget of
/// `per_graph`; graphs that run out are counted as skipped.
pub fn search_counterexample_in(graphs: &[Graph], per_graph: &Duration) -> CounterexampleSearch {
    let mut search = CounterexampleSearch::default();
    for g in graphs {
        let (k, _) = chromatic_number(g);
        if k == 0 {
            continue;
        }
        match no_begins_coloring(g, k, &Budget::with_time(*per_graph)) {
            Ok(None) => search.examined += 1,
            Ok(Some(colorings)) => {
                search.examined += 1;
                let known_exception = is_seven_cycle(g);
                let case = FailingCase { graph: g.clone(), k, colorings, known_exception };
                if known_exception {
                    search.known_exception.get_or_insert(case);
                } else {
                    search.counterexample = Some(case);
                    break;
                }
            }
            Err(_) => search.skipped += 1,
        }
    }
    search
}
