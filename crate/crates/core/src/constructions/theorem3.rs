use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::{internal, require_connected, ConstructionError};
use crate::budget::{Budget, Meter};
use crate::coloring::{chromatic_number, enumerate_proper_colorings, KColoring};
use crate::graph::{find_cycle_of_length, Graph, PathWitness, VertexSet};
use crate::rainbow::{
    backward_set, cycle_windows, forward_set, shift_down, shift_up, RainbowReport, RainbowTable, SuccessorDigraph,
    DEFAULT_MAX_COLORS,
};

/// Colorings visited by the breadth-first shift search before falling back
/// to enumeration.
const SHIFT_SEARCH_LIMIT: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shift {
    Up,
    Down,
}

/// One round of the cycle local search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Phase1Step {
    /// Longest run of consecutive cycle vertices with distinct colors,
    /// before the shift.
    pub longest: usize,
    /// The run vertex `u_j` whose color matches the vertex preceding the run.
    pub pivot: usize,
    pub shift: Shift,
}

/// How the begins property was extended from the directed cycle to all
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "stage")]
pub enum Phase2Stage {
    /// The coloring found by the local search already works.
    Immediate,
    /// Improving single shifts.
    Greedy { moves: usize },
    /// Breadth-first search over shift sequences.
    ShiftSearch { visited: usize },
    /// Enumeration of all proper colorings.
    Exhaustive { visited: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem3Output {
    pub coloring: KColoring,
    pub report: RainbowReport,
    /// The cycle of length `k` the search ran on.
    pub cycle: Vec<usize>,
    pub phase1: Vec<Phase1Step>,
    /// A directed cycle of the successor digraph once the local search ends.
    pub directed_cycle: Vec<usize>,
    /// Full rainbow paths read off `directed_cycle`, one per cycle vertex.
    pub cycle_witnesses: Vec<Vec<usize>>,
    pub phase2: Phase2Stage,
}

/// A `chi(G)`-coloring of a connected graph with a cycle of length
/// `k = chi(G) >= 3` in which every vertex begins a full rainbow path.
///
/// Phase 1 is the local search on the cycle `C`: while the successor digraph
/// `D_f` is acyclic, take a longest run `u_1 … u_l` of consecutive cycle
/// vertices with distinct colors, recolor so that `f(u_i) = i`, let `u_k` be
/// the cycle vertex before `u_1` and `j = f(u_k)`. Shifting up the forward set
/// of `u_j` (if it misses `u_k`) or down its backward set (otherwise) makes
/// `u_k u_1 … u_l` a longer run. A run of length `k` closes a directed cycle,
/// so this takes fewer than `k` rounds.
///
/// Phase 2 starts from a coloring whose successor digraph has a directed
/// cycle; every cycle vertex begins a full rainbow path. The remaining
/// vertices are handled by improving shifts, then a bounded search over
/// shift sequences, then enumeration of all proper `k`-colorings. Whatever
/// stage succeeds, the result is re-verified.
pub fn theorem3(g: &Graph, cycle: Option<&[usize]>, budget: &Budget) -> Result<Theorem3Output, ConstructionError> {
    require_connected(g)?;
    budget.check(0)?;
    let (k, start) = chromatic_number(g);
    if k < 3 {
        return Err(ConstructionError::Hypothesis(format!("chromatic number {k} is below 3")));
    }
    if k > DEFAULT_MAX_COLORS {
        return Err(ConstructionError::Unsupported(format!("{k} colors exceed the verifier ceiling")));
    }
    let cycle = match cycle {
        Some(vertices) => {
            let witness = PathWitness::undirected(vertices.to_vec());
            if vertices.len() != k || !witness.is_closed_cycle_in(g) {
                return Err(ConstructionError::Hypothesis(format!(
                    "supplied vertices do not form a cycle of length {k}"
                )));
            }
            witness.vertices
        }
        None => {
            find_cycle_of_length(g, k)
                .expect("k >= 3")
                .ok_or_else(|| ConstructionError::Hypothesis(format!("no cycle of length {k}")))?
                .vertices
        }
    };

    let (f, phase1, directed_cycle) = local_search(g, &cycle, start, budget)?;
    let cycle_witnesses: Vec<Vec<usize>> = cycle_windows(&directed_cycle, k).into_iter().map(|w| w.vertices).collect();
    {
        let table = RainbowTable::build(g, &f)?;
        for w in &cycle_windows(&directed_cycle, k) {
            let v = w.vertices[0];
            if !table.begins(v) {
                return Err(internal(format!("vertex {v} on a directed cycle begins no full rainbow path")));
            }
        }
    }

    let (f, phase2) = extend_to_all(g, f, budget)?;
    let report = RainbowTable::build(g, &f)?.report();
    if let Some(v) = report.begins.iter().position(|&b| !b) {
        return Err(internal(format!("vertex {v} begins no full rainbow path")));
    }
    Ok(Theorem3Output { coloring: f, report, cycle, phase1, directed_cycle, cycle_witnesses, phase2 })
}

/// Longest run of consecutive cycle vertices with distinct colors, as
/// `(length, start index, direction)`. Ties go to the smallest start, forward
/// before backward.
fn longest_run(f: &KColoring, cycle: &[usize]) -> (usize, usize, isize) {
    let k = cycle.len();
    let mut best = (0, 0, 1);
    for start in 0..k {
        for dir in [1isize, -1] {
            let mut seen = vec![false; f.k() + 1];
            let mut len = 0;
            while len < k {
                let v = cycle[at(start, dir, len, k)];
                if seen[f.color(v)] {
                    break;
                }
                seen[f.color(v)] = true;
                len += 1;
            }
            if len > best.0 {
                best = (len, start, dir);
            }
        }
    }
    best
}

fn at(start: usize, dir: isize, offset: usize, k: usize) -> usize {
    (start as isize + dir * offset as isize).rem_euclid(k as isize) as usize
}

type LocalSearch = (KColoring, Vec<Phase1Step>, Vec<usize>);

fn local_search(
    g: &Graph,
    cycle: &[usize],
    mut f: KColoring,
    budget: &Budget,
) -> Result<LocalSearch, ConstructionError> {
    let k = cycle.len();
    let mut steps = Vec::new();
    for _ in 0..=k {
        budget.check(0)?;
        if let Some(dc) = SuccessorDigraph::of_coloring(g, &f).directed_cycle() {
            return Ok((f, steps, dc));
        }
        let (len, start, dir) = longest_run(&f, cycle);
        let run: Vec<usize> = (0..len).map(|i| cycle[at(start, dir, i, k)]).collect();

        // colors along the run become 1..=len, the rest follow in increasing order
        let mut perm = vec![0; k];
        for (i, &v) in run.iter().enumerate() {
            perm[f.color(v) - 1] = i + 1;
        }
        for (next, slot) in (len + 1..).zip(perm.iter_mut().filter(|p| **p == 0)) {
            *slot = next;
        }
        f = f.permuted(&perm);
        let dg = SuccessorDigraph::of_coloring(g, &f);
        if let Some(dc) = dg.directed_cycle() {
            return Ok((f, steps, dc));
        }
        if len == k {
            return Err(internal("rainbow cycle without a directed cycle in D_f"));
        }

        let before = cycle[at(start, dir, k - 1, k)];
        let j = f.color(before);
        if j > len {
            return Err(internal("run is not maximal"));
        }
        let pivot = run[j - 1];
        let x: VertexSet = [pivot].into();
        let (shifted, shift) = if !forward_set(&dg, &x).contains(&before) {
            (shift_up(g, &f, &x)?, Shift::Up)
        } else if !backward_set(&dg, &x).contains(&before) {
            (shift_down(g, &f, &x)?, Shift::Down)
        } else {
            return Err(internal("vertex both before and after the pivot in an acyclic D_f"));
        };
        if longest_run(&shifted, cycle).0 <= len {
            return Err(internal("shift did not lengthen the rainbow run"));
        }
        steps.push(Phase1Step { longest: len, pivot, shift });
        f = shifted;
    }
    Err(internal("local search did not terminate within k rounds"))
}

fn begin_count(g: &Graph, f: &KColoring) -> Result<usize, ConstructionError> {
    let table = RainbowTable::build(g, f)?;
    Ok(g.vertices().filter(|&v| table.begins(v)).count())
}

/// Single-vertex shifts at failing vertices and along shortest paths from
/// them to vertices that already begin a full rainbow path, plus the shift
/// of the whole failing set.
fn candidate_moves(g: &Graph, f: &KColoring, table: &RainbowTable<'_>) -> Result<Vec<KColoring>, ConstructionError> {
    let failing: Vec<usize> = g.vertices().filter(|&v| !table.begins(v)).collect();
    let mut sets: Vec<VertexSet> = failing.iter().map(|&x| [x].into()).collect();
    sets.push(failing.iter().copied().collect());
    for &x in &failing {
        if let Some(path) = shortest_path_to(g, x, |v| table.begins(v)) {
            sets.extend(path.into_iter().skip(1).map(|y| VertexSet::from([y])));
        }
    }
    let mut out = Vec::with_capacity(2 * sets.len());
    for set in &sets {
        out.push(shift_up(g, f, set)?);
        out.push(shift_down(g, f, set)?);
    }
    Ok(out)
}

fn shortest_path_to(g: &Graph, from: usize, target: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u != from && target(u) {
            let mut path = vec![u];
            let mut x = u;
            while x != from {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

fn extend_to_all(g: &Graph, mut f: KColoring, budget: &Budget) -> Result<(KColoring, Phase2Stage), ConstructionError> {
    let n = g.vertex_count();
    let mut current = begin_count(g, &f)?;
    if current == n {
        return Ok((f, Phase2Stage::Immediate));
    }

    let mut moves = 0;
    loop {
        budget.check(0)?;
        let table = RainbowTable::build(g, &f)?;
        let mut best: Option<(usize, KColoring)> = None;
        for candidate in candidate_moves(g, &f, &table)? {
            let count = begin_count(g, &candidate)?;
            if count > best.as_ref().map_or(current, |b| b.0) {
                best = Some((count, candidate));
            }
        }
        let Some((count, next)) = best else { break };
        f = next;
        current = count;
        moves += 1;
        if current == n {
            return Ok((f, Phase2Stage::Greedy { moves }));
        }
    }

    let mut meter = Meter::new(budget);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([f.colors().to_vec()]);
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(h) = queue.pop_front() {
        for v in g.vertices() {
            let x: VertexSet = [v].into();
            for next in [shift_up(g, &h, &x)?, shift_down(g, &h, &x)?] {
                meter.tick()?;
                if seen.len() >= SHIFT_SEARCH_LIMIT || !seen.insert(next.colors().to_vec()) {
                    continue;
                }
                if begin_count(g, &next)? == n {
                    return Ok((next, Phase2Stage::ShiftSearch { visited: seen.len() }));
                }
                queue.push_back(next);
            }
        }
    }

    for (index, candidate) in enumerate_proper_colorings(g, f.k()).enumerate() {
        meter.tick()?;
        let visited = index + 1;
        if begin_count(g, &candidate)? == n {
            return Ok((candidate, Phase2Stage::Exhaustive { visited }));
        }
    }
    Err(internal("no proper coloring lets every vertex begin a full rainbow path"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn run(family: Family) -> Theorem3Output {
        let g = generate(&family).unwrap();
        let out = theorem3(&g, None, &Budget::unlimited()).unwrap();
        assert!(out.coloring.is_proper(&g));
        assert!(out.report.all_begin());
        assert!(out.phase1.len() < out.cycle.len());
        out
    }

    #[test]
    fn wheel_and_cliques() {
        let out = run(Family::Wheel(5));
        assert_eq!(out.coloring.k(), 4);
        run(Family::Complete(4));
        run(Family::Complete(5));
        run(Family::Wheel(7));
    }

    #[test]
    fn directed_cycle_windows_begin() {
        let out = run(Family::Wheel(5));
        assert_eq!(out.directed_cycle.len() % 4, 0);
        assert_eq!(out.cycle_witnesses.len(), out.directed_cycle.len());
    }

    #[test]
    fn c5_has_no_triangle() {
        let g = generate(&Family::Cycle(5)).unwrap();
        assert_eq!(
            theorem3(&g, None, &Budget::unlimited()).unwrap_err(),
            ConstructionError::Hypothesis("no cycle of length 3".into())
        );
    }

    #[test]
    fn supplied_cycle_is_checked() {
        let g = generate(&Family::Wheel(5)).unwrap();
        assert!(theorem3(&g, Some(&[0, 1, 2, 5]), &Budget::unlimited()).is_ok());
        assert!(matches!(
            theorem3(&g, Some(&[0, 1, 2, 3]), &Budget::unlimited()),
            Err(ConstructionError::Hypothesis(_))
        ));
    }

    #[test]
    fn longest_run_prefers_first() {
        let f = KColoring::new(4, vec![1, 2, 1, 3]).unwrap();
        assert_eq!(longest_run(&f, &[0, 1, 2, 3]), (3, 1, 1));
    }

    #[test]
    fn zero_budget() {
        let g = generate(&Family::Complete(4)).unwrap();
        let zero = Budget::with_time(std::time::Duration::ZERO);
        assert!(matches!(theorem3(&g, None, &zero), Err(ConstructionError::Budget(_))));
    }
}
