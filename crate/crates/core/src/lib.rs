//! Optimal graph colorings with full rainbow paths.
//!
//! A proper coloring with `k = chi(G)` colors; a path is *rainbow* when its
//! vertices carry distinct colors and *full* when it has `k` vertices. The
//! [`constructions`] module builds colorings in which every vertex lies on,
//! or begins, a full rainbow path, using the circular-coloring machinery in
//! [`coloring`] and the successor digraphs and exact verifiers in
//! [`rainbow`]. [`harness`] drives exhaustive sweeps over small graphs.

pub mod budget;
pub mod coloring;
pub mod constructions;
pub mod graph;
pub mod harness;
pub mod rainbow;

pub use budget::{Budget, BudgetExhausted};
pub use coloring::{CircularColoring, CircularNumber, KColoring};
pub use graph::{Graph, Orientation, PathWitness, VertexSet};
pub use rainbow::{RainbowReport, SuccessorDigraph};
