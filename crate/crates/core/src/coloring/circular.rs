use std::collections::VecDeque;
use std::ops::ControlFlow;

use num_integer::Integer;

use super::{
    add_mod, chromatic_number, circular_compatible, valid_parameters, CircularColoring, CircularNumber, ColoringError,
};
use crate::budget::{Budget, BudgetExhausted, Meter};
use crate::graph::Graph;
use crate::rainbow::{walk_depth_ok, SuccessorDigraph};

/// Backtracking CSP over `(n, d)`-colorings with forward checking.
///
/// Vertices are assigned in breadth-first order per component, and the first
/// vertex of every component is fixed to value `1`: rotating all values of a
/// component preserves validity, so no solution class is lost.
#[derive(Debug)]
pub struct CircularSearch<'g> {
    g: &'g Graph,
    n: usize,
    d: usize,
    order: Vec<usize>,
    is_root: Vec<bool>,
    /// `compatible[a - 1]` has bit `b - 1` set iff values `a` and `b` may sit
    /// on adjacent vertices.
    compatible: Vec<u64>,
    /// Vertices whose closed neighbourhood becomes fully assigned at each
    /// position of `order`; only populated when successors are required.
    closes_at: Vec<Vec<usize>>,
}

impl<'g> CircularSearch<'g> {
    pub fn new(g: &'g Graph, n: usize, d: usize) -> Result<Self, ColoringError> {
        if !valid_parameters(n, d) {
            return Err(ColoringError::CircularParameters { n, d });
        }
        if n > 64 {
            return Err(ColoringError::TooManyValues(n));
        }
        let mut order = Vec::with_capacity(g.vertex_count());
        let mut is_root = vec![false; g.vertex_count()];
        let mut seen = vec![false; g.vertex_count()];
        for root in g.vertices() {
            if seen[root] {
                continue;
            }
            is_root[root] = true;
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let compatible = (1..=n)
            .map(|a| (1..=n).filter(|&b| circular_compatible(a, b, n, d)).fold(0u64, |mask, b| mask | 1 << (b - 1)))
            .collect();
        Ok(CircularSearch { g, n, d, order, is_root, compatible, closes_at: Vec::new() })
    }

    /// Prune partial assignments in which some vertex with a fully assigned
    /// neighbourhood has no neighbour valued `c(v) + d (mod n)`. Every
    /// coloring with the successor-walk property passes this test.
    pub fn require_successors(mut self) -> Self {
        let mut position = vec![0; self.g.vertex_count()];
        for (i, &v) in self.order.iter().enumerate() {
            position[v] = i;
        }
        let mut closes_at = vec![Vec::new(); self.order.len()];
        for v in self.g.vertices() {
            let last = self.g.neighbors(v).iter().map(|&w| position[w]).fold(position[v], usize::max);
            closes_at[last].push(v);
        }
        self.closes_at = closes_at;
        self
    }

    /// Calls `visit` on every solution (in deterministic order) until it
    /// breaks. Returns `true` if `visit` broke.
    pub fn for_each<F>(&self, budget: &Budget, mut visit: F) -> Result<bool, BudgetExhausted>
    where
        F: FnMut(&CircularColoring) -> ControlFlow<()>,
    {
        let n = self.g.vertex_count();
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut values = vec![0usize; n];
        let mut domains = vec![full; n];
        let mut meter = Meter::new(budget);
        budget.check(0)?;
        let flow = self.search(0, &mut values, &mut domains, &mut meter, &mut visit)?;
        Ok(flow.is_break())
    }

    /// First solution in search order.
    pub fn first(&self, budget: &Budget) -> Result<Option<CircularColoring>, BudgetExhausted> {
        let mut found = None;
        self.for_each(budget, |c| {
            found = Some(c.clone());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    fn search<F>(
        &self,
        pos: usize,
        values: &mut [usize],
        domains: &mut [u64],
        meter: &mut Meter<'_>,
        visit: &mut F,
    ) -> Result<ControlFlow<()>, BudgetExhausted>
    where
        F: FnMut(&CircularColoring) -> ControlFlow<()>,
    {
        let Some(&v) = self.order.get(pos) else {
            let coloring = CircularColoring::from_raw(self.n, self.d, values.to_vec());
            return Ok(visit(&coloring));
        };
        let mut candidates = domains[v];
        if self.is_root[v] {
            candidates &= 1;
        }
        let mut saved: Vec<(usize, u64)> = Vec::with_capacity(self.g.degree(v));
        while candidates != 0 {
            let value = candidates.trailing_zeros() as usize + 1;
            candidates &= candidates - 1;
            meter.tick()?;
            values[v] = value;

            saved.clear();
            let mut consistent = true;
            for &w in self.g.neighbors(v) {
                if values[w] == 0 {
                    saved.push((w, domains[w]));
                    domains[w] &= self.compatible[value - 1];
                    if domains[w] == 0 {
                        consistent = false;
                        break;
                    }
                }
            }
            if consistent && !self.closes_at.is_empty() && self.n > 1 {
                consistent = self.closes_at[pos].iter().all(|&w| {
                    let next = add_mod(values[w], self.d as isize, self.n);
                    self.g.neighbors(w).iter().any(|&x| values[x] == next)
                });
            }
            if consistent && self.search(pos + 1, values, domains, meter, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            for &(w, domain) in &saved {
                domains[w] = domain;
            }
            values[v] = 0;
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Some `(n, d)`-coloring of `g`, if one exists.
pub fn circular_colorable(
    g: &Graph,
    n: usize,
    d: usize,
    budget: &Budget,
) -> Result<Option<CircularColoring>, ColoringError> {
    Ok(CircularSearch::new(g, n, d)?.first(budget)?)
}

/// Exact circular chromatic number with a witness coloring.
///
/// Candidates are the reduced fractions `n/d` with `n <= |V|` and
/// `chi - 1 < n/d <= chi`, tried in increasing order; the first colorable one
/// is the minimum. Graphs with `chi = 1` get `1/1`, bipartite graphs with an
/// edge get `2/1`.
pub fn circular_chromatic_number(
    g: &Graph,
    budget: &Budget,
) -> Result<(CircularNumber, CircularColoring), ColoringError> {
    let (chi, witness) = chromatic_number(g);
    match chi {
        0 => return Err(ColoringError::EmptyGraph),
        1 | 2 => {
            let c = CircularColoring::from_raw(chi, 1, witness.colors().to_vec());
            return Ok((CircularNumber { n: chi, d: 1 }, c));
        }
        _ => {}
    }
    let vertex_count = g.vertex_count();
    let mut candidates = Vec::new();
    for n in chi..=vertex_count {
        for d in 1..=n / 2 {
            if n.gcd(&d) == 1 && (chi - 1) * d < n && n <= chi * d {
                candidates.push(CircularNumber { n, d });
            }
        }
    }
    candidates.sort();
    for candidate in candidates {
        if candidate.d == 1 {
            // candidate == chi/1: any proper chi-coloring is a (chi, 1)-coloring
            let c = CircularColoring::from_raw(chi, 1, witness.colors().to_vec());
            return Ok((candidate, c));
        }
        if let Some(c) = circular_colorable(g, candidate.n, candidate.d, budget)? {
            return Ok((candidate, c));
        }
    }
    unreachable!("chi/1 is always a candidate")
}

/// An `(n, d)`-coloring in which every vertex begins a walk of `n` vertices
/// along which values step by `+d (mod n)`.
///
/// Such a coloring exists whenever `n/d` is the circular chromatic number of a
/// connected graph. This is a verified search: (n, d)-colorings are enumerated
/// with successor pruning and each complete one is checked with
/// [`walk_depth_ok`]. The first hit in search order is returned.
pub fn find_theorem5_coloring(
    g: &Graph,
    n: usize,
    d: usize,
    budget: &Budget,
) -> Result<CircularColoring, ColoringError> {
    let search = CircularSearch::new(g, n, d)?.require_successors();
    let mut found = None;
    search.for_each(budget, |c| {
        let digraph = SuccessorDigraph::of_circular(g, c);
        if walk_depth_ok(&digraph, n).len() == g.vertex_count() {
            found = Some(c.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    found.ok_or(ColoringError::Theorem5NotFound { n, d })
}
