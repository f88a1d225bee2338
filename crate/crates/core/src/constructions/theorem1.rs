use serde::Serialize;

use super::{internal, require_connected, ConstructionError};
use crate::budget::Budget;
use crate::coloring::{circular_chromatic_number, find_theorem5_coloring, CircularColoring, KColoring};
use crate::graph::Graph;
use crate::rainbow::{verify_rainbow, RainbowReport, RainbowTable};

/// Vertices of class `V_index` moved to color `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecoloredSet {
    pub index: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Trace {
    /// The `(n, d)`-coloring with the successor-walk property.
    pub base_circular: CircularColoring,
    /// `ceil(c / d)`.
    pub initial_f: KColoring,
    /// `V_1, …, V_n`: `V_i` holds the vertices valued `((i - 1) d mod n) + 1`.
    pub color_classes: Vec<Vec<usize>>,
    /// One entry per class whose residue test failed, in processing order.
    pub recolored_sets: Vec<RecoloredSet>,
    /// `f_0, …, f_n`; `f_{i+1}` differs from `f_i` only on `V_{i+1}`.
    pub stages: Vec<KColoring>,
    pub final_f: KColoring,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Output {
    pub coloring: KColoring,
    pub trace: Theorem1Trace,
    pub report: RainbowReport,
}

/// A `chi(G)`-coloring of a connected graph in which every vertex lies on a
/// full rainbow path.
///
/// Take the circular chromatic number `n/d` and an `(n, d)`-coloring `c` in
/// which every vertex begins a `+d` walk on `n` vertices.
///
/// * `d = 1`: `c` itself is a `k`-coloring and every vertex begins a full
///   rainbow path.
/// * `d >= 2`: start from `f = ceil(c / d)`. Walking the classes
///   `V_{k+1}, …, V_n` in order, a class whose value has residue mod `d` in
///   `1..=(n mod d)` is already covered by its walks. Otherwise the class
///   vertices not yet on a full rainbow path have no neighbour colored `k`;
///   recoloring them to `k` turns their walks into full rainbow paths and
///   breaks no existing one.
pub fn theorem1(g: &Graph, budget: &Budget) -> Result<Theorem1Output, ConstructionError> {
    require_connected(g)?;
    let (chi_c, _) = circular_chromatic_number(g, budget)?;
    let (n, d) = (chi_c.n, chi_c.d);
    let k = chi_c.ceil();
    let c = find_theorem5_coloring(g, n, d, budget)?;
    let f0 = c.ceil_coloring();
    if !f0.is_proper(g) {
        return Err(internal("ceil(c/d) is not a proper coloring"));
    }

    let color_classes: Vec<Vec<usize>> = (1..=n)
        .map(|i| {
            let value = ((i - 1) * d) % n + 1;
            g.vertices().filter(|&u| c.value(u) == value).collect()
        })
        .collect();

    let mut stages = vec![f0.clone(); k.min(n) + 1];
    let mut recolored_sets = Vec::new();
    if d >= 2 {
        for i in k..n {
            budget.check(0)?;
            let current = stages[i].clone();
            let residue = ((i * d) % n + 1) % d;
            if (1..=n % d).contains(&residue) {
                stages.push(current);
                continue;
            }
            let table = RainbowTable::build(g, &current)?;
            let class = &color_classes[i];
            let uncovered: Vec<usize> = class.iter().copied().filter(|&u| !table.lies_on(u)).collect();
            let mut next = current.clone();
            for &u in &uncovered {
                next = next.with_color(u, k);
            }
            if let Some((u, v)) = next.first_conflict(g) {
                return Err(internal(format!("recoloring class {} to {k} conflicts on edge {{{u}, {v}}}", i + 1)));
            }
            recolored_sets.push(RecoloredSet { index: i + 1, vertices: uncovered });
            stages.push(next);
        }
    } else {
        stages.resize(n + 1, f0.clone());
    }

    let final_f = stages.last().expect("at least f_0").clone();
    let report = verify_rainbow(g, &final_f)?;
    if !report.all_lie_on() {
        let v = report.lies_on.iter().position(|&b| !b).unwrap();
        return Err(internal(format!("vertex {v} lies on no full rainbow path")));
    }
    Ok(Theorem1Output {
        coloring: final_f.clone(),
        trace: Theorem1Trace { base_circular: c, initial_f: f0, color_classes, recolored_sets, stages, final_f },
        report,
    })
}
