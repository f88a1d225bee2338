//! Successor digraphs, shift recolorings, and exact verifiers for rainbow
//! paths.
//!
//! For a coloring `f` with colors in `1..=k`, the successor digraph has an arc
//! `u -> v` for every edge `uv` with `f(v) = f(u) + 1 (mod k)`. The same
//! construction with step `d` modulo `n` applies to `(n, d)`-colorings.

mod digraph;
mod verify;

use thiserror::Error;

pub use digraph::{backward_set, cycle_windows, forward_set, shift_down, shift_up, walk_depth_ok, SuccessorDigraph};
pub use verify::{verify_directed_rainbow, verify_rainbow, RainbowReport, RainbowTable, DEFAULT_MAX_COLORS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("{k} colors exceed the verifier ceiling of {limit}")]
    TooManyColors { k: usize, limit: usize },
    #[error("coloring covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("shifted coloring is not proper on edge {{{0}, {1}}}")]
    ShiftNotProper(usize, usize),
}
