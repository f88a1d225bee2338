//! Colorings with full rainbow paths, built step by step and verified.
//!
//! * [`theorem1`]: every vertex lies on a full rainbow path.
//! * [`theorem2`]: when `chi_c < chi`, a guaranteed fraction of vertices
//!   begin full rainbow paths and the rest begin paths one shorter.
//! * [`theorem3`]: with a cycle of length `chi`, every vertex begins a full
//!   rainbow path.
//! * [`theorem4`]: a 3-chromatic graph under any orientation has a
//!   3-coloring with a directed full rainbow path.
//!
//! Every returned coloring has been re-checked by the exact verifiers in
//! [`crate::rainbow`]; a failed check surfaces as
//! [`ConstructionError::Internal`].

mod theorem1;
mod theorem2;
mod theorem3;
mod theorem4;

use thiserror::Error;

use crate::budget::BudgetExhausted;
use crate::coloring::ColoringError;
use crate::graph::Graph;
use crate::rainbow::RainbowError;

pub use theorem1::{theorem1, RecoloredSet, Theorem1Output, Theorem1Trace};
pub use theorem2::{theorem2, Theorem2Result};
pub use theorem3::{theorem3, Phase1Step, Phase2Stage, Shift, Theorem3Output};
pub use theorem4::{theorem4, Theorem4Case, Theorem4Decomposition, Theorem4Output};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected ({0} components)")]
    Disconnected(usize),
    /// The input does not satisfy the construction's hypothesis.
    #[error("{0}")]
    Hypothesis(String),
    /// The input is beyond what the exact verifiers handle.
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
    /// A guaranteed conclusion failed verification.
    #[error("internal verification failure: {0}")]
    Internal(String),
}

impl ConstructionError {
    pub fn is_internal(&self) -> bool {
        matches!(self, ConstructionError::Internal(_))
    }
}

impl From<RainbowError> for ConstructionError {
    fn from(e: RainbowError) -> Self {
        match e {
            RainbowError::TooManyColors { .. } => ConstructionError::Unsupported(e.to_string()),
            _ => ConstructionError::Internal(e.to_string()),
        }
    }
}

impl From<ColoringError> for ConstructionError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::Budget(b) => ConstructionError::Budget(b),
            ColoringError::EmptyGraph => ConstructionError::EmptyGraph,
            ColoringError::TooManyValues(_) => ConstructionError::Unsupported(e.to_string()),
            other => ConstructionError::Internal(other.to_string()),
        }
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<(), ConstructionError> {
    if g.is_empty() {
        return Err(ConstructionError::EmptyGraph);
    }
    match g.connected_components().len() {
        1 => Ok(()),
        n => Err(ConstructionError::Disconnected(n)),
    }
}

pub(crate) fn internal(message: impl Into<String>) -> ConstructionError {
    ConstructionError::Internal(message.into())
}
