//! Corpora of small graphs and sweeps that check every construction against
//! the exact verifiers.

mod conjecture;
mod corpus;
mod sweep;

use thiserror::Error;

pub use conjecture::{
    confirm_c7_exception, exception_counts, is_seven_cycle, search_counterexample, search_counterexample_in, C7Report,
    CounterexampleSearch, ExceptionCounts, FailingCase,
};
pub use corpus::{enumerate_connected_graphs, sample_connected_graphs, ConnectedGraphs, EXHAUSTIVE_LIMIT};
pub use sweep::{run_check, run_sweep, Check, Counters, RandomCorpus, Status, SweepConfig, SweepRecord, SweepReport};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("exhaustive enumeration is limited to {limit} vertices, asked for {requested}")]
    TooLarge { requested: usize, limit: usize },
    #[error("invalid sweep configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}
