use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted")]
pub struct BudgetExhausted;

/// Wall-clock and node limits for the exponential searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    max_nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    /// Expires `limit` from now. A zero limit is already expired.
    pub fn with_time(limit: Duration) -> Self {
        Budget { deadline: Some(Instant::now() + limit), max_nodes: None }
    }

    pub fn nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = Some(max_nodes);
        self
    }

    /// Fails once the deadline has passed or `nodes` exceeds the node limit.
    pub fn check(&self, nodes: u64) -> Result<(), BudgetExhausted> {
        if self.max_nodes.is_some_and(|max| nodes > max) {
            return Err(BudgetExhausted);
        }
        match self.deadline {
            Some(deadline) if Instant::now() >= deadline => Err(BudgetExhausted),
            _ => Ok(()),
        }
    }
}

/// Counts search nodes and consults the budget every 256 of them.
#[derive(Debug)]
pub(crate) struct Meter<'b> {
    budget: &'b Budget,
    nodes: u64,
}

impl<'b> Meter<'b> {
    pub(crate) fn new(budget: &'b Budget) -> Self {
        Meter { budget, nodes: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<(), BudgetExhausted> {
        self.nodes += 1;
        if self.nodes & 0xff == 0 || self.budget.max_nodes.is_some() {
            self.budget.check(self.nodes)?;
        }
        Ok(())
    }
}
