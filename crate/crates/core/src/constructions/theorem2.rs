use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use super::{internal, require_connected, ConstructionError};
use crate::budget::Budget;
use crate::coloring::{
    chromatic_number, circular_chromatic_number, find_theorem5_coloring, CircularColoring, KColoring,
};
use crate::graph::Graph;
use crate::rainbow::{RainbowReport, RainbowTable};

#[derive(Clone, Debug, Serialize)]
pub struct Theorem2Result {
    pub base_circular: CircularColoring,
    /// Rotation applied to `base_circular`, in `0..n`.
    pub shift: usize,
    pub shifted_circular: CircularColoring,
    /// `ceil(c' / d)` for the shifted coloring `c'`.
    pub coloring: KColoring,
    /// Vertices whose shifted value has residue mod `d` in `1..=(n mod d)`;
    /// each begins a full rainbow path.
    pub strong_set: Vec<usize>,
    /// The remaining vertices; each begins a rainbow path on `k - 1`
    /// vertices.
    pub weak_set: Vec<usize>,
    /// `k (n/d + 1 - k) / (n/d)`; `|strong_set| >= bound * |V|`.
    #[serde(serialize_with = "ratio_string")]
    pub bound: Ratio<u64>,
    pub report: RainbowReport,
    /// A `k - 1` vertex rainbow path from each weak vertex.
    pub weak_witnesses: BTreeMap<usize, Vec<usize>>,
}

fn ratio_string<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn is_strong(value: usize, n: usize, d: usize) -> bool {
    (1..=n % d).contains(&(value % d))
}

/// For a connected graph with `chi_c = n/d < chi = k`: a `k`-coloring in which
/// at least `k (n/d + 1 - k) / (n/d) * |V|` vertices begin full rainbow paths
/// and every other vertex begins a rainbow path on `k - 1` vertices.
///
/// The values `i` with `i mod d` in `1..=(n mod d)` make up a `k (n mod d) / n`
/// share of `[n]`; averaging over the `n` rotations of the base coloring, one
/// rotation puts at least that share of the vertices on such values. The
/// rotation with the most strong vertices (smallest on ties) is used.
pub fn theorem2(g: &Graph, budget: &Budget) -> Result<Theorem2Result, ConstructionError> {
    require_connected(g)?;
    let (k, _) = chromatic_number(g);
    let (chi_c, _) = circular_chromatic_number(g, budget)?;
    if chi_c.is_integral() {
        return Err(ConstructionError::Hypothesis("chi_c equals chi: Theorem 2 inapplicable".into()));
    }
    let (n, d) = (chi_c.n, chi_c.d);
    let base = find_theorem5_coloring(g, n, d, budget)?;

    let strong_count = |c: &CircularColoring| c.values().iter().filter(|&&x| is_strong(x, n, d)).count();
    let shift = (0..n).max_by_key(|&s| (strong_count(&base.rotated(s)), std::cmp::Reverse(s))).expect("n >= 1");
    let shifted = base.rotated(shift);
    let f = shifted.ceil_coloring();
    if f.k() != k || !f.is_proper(g) {
        return Err(internal("ceil(c/d) is not a proper chi-coloring"));
    }

    let (strong_set, weak_set): (Vec<usize>, Vec<usize>) =
        g.vertices().partition(|&u| is_strong(shifted.value(u), n, d));

    let bound = Ratio::new((k * (n + d - k * d)) as u64, n as u64);
    if Ratio::from(strong_set.len() as u64) < bound * Ratio::from(g.vertex_count() as u64) {
        return Err(internal(format!(
            "{} strong vertices fall below {} of {}",
            strong_set.len(),
            bound,
            g.vertex_count()
        )));
    }

    let table = RainbowTable::build(g, &f)?;
    if let Some(&u) = strong_set.iter().find(|&&u| !table.begins(u)) {
        return Err(internal(format!("strong vertex {u} begins no full rainbow path")));
    }
    let mut weak_witnesses = BTreeMap::new();
    for &v in &weak_set {
        let path = table
            .begins_with_order_witness(v, k - 1)
            .ok_or_else(|| internal(format!("weak vertex {v} begins no rainbow path on {} vertices", k - 1)))?;
        weak_witnesses.insert(v, path.vertices);
    }
    let report = table.report();

    Ok(Theorem2Result {
        base_circular: base,
        shift,
        shifted_circular: shifted,
        coloring: f,
        strong_set,
        weak_set,
        bound,
        report,
        weak_witnesses,
    })
}
