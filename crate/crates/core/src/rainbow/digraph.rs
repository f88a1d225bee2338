use std::collections::VecDeque;

use super::RainbowError;
use crate::coloring::{add_mod, CircularColoring, KColoring};
use crate::graph::{Graph, PathWitness, VertexSet};

/// Arcs `u -> v` over edges `uv` with `label(v) = label(u) + step (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorDigraph {
    step: usize,
    modulus: usize,
    labels: Vec<usize>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl SuccessorDigraph {
    /// `D_f` of a `k`-coloring: step 1 modulo `k`. For `k = 2` every edge
    /// carries arcs in both directions.
    pub fn of_coloring(g: &Graph, f: &KColoring) -> Self {
        Self::from_labels(g, f.colors(), 1, f.k())
    }

    /// `D_c` of an `(n, d)`-coloring: step `d` modulo `n`.
    pub fn of_circular(g: &Graph, c: &CircularColoring) -> Self {
        Self::from_labels(g, c.values(), c.d(), c.n())
    }

    fn from_labels(g: &Graph, labels: &[usize], step: usize, modulus: usize) -> Self {
        let n = g.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        if modulus > 0 {
            for &(a, b) in g.edges() {
                for (u, v) in [(a, b), (b, a)] {
                    if add_mod(labels[u], step as isize, modulus) == labels[v] {
                        out[u].push(v);
                        inn[v].push(u);
                    }
                }
            }
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        SuccessorDigraph { step, modulus, labels: labels.to_vec(), out, inn }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out.iter().enumerate().flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v))).collect()
    }

    /// Some directed cycle as its vertex sequence (the arc from the last
    /// vertex back to the first closes it), or `None` if acyclic.
    ///
    /// Labels grow by `step` along every arc, so a closed cycle's length is a
    /// multiple of `modulus / gcd(modulus, step)`; for colorings (step 1) a
    /// multiple of `k`.
    pub fn directed_cycle(&self) -> Option<Vec<usize>> {
        const WHITE: u8 = 0;
        const GRAY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.vertex_count();
        let mut state = vec![WHITE; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if state[root] != WHITE {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            state[root] = GRAY;
            while let Some(&mut (u, ref mut next)) = stack.last_mut() {
                if let Some(&w) = self.out[u].get(*next) {
                    *next += 1;
                    match state[w] {
                        WHITE => {
                            state[w] = GRAY;
                            parent[w] = u;
                            stack.push((w, 0));
                        }
                        GRAY => {
                            let mut cycle = vec![u];
                            let mut x = u;
                            while x != w {
                                x = parent[x];
                                cycle.push(x);
                            }
                            cycle.reverse();
                            return Some(cycle);
                        }
                        _ => {}
                    }
                } else {
                    state[u] = BLACK;
                    stack.pop();
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self) -> bool {
        self.directed_cycle().is_none()
    }

    fn reach(&self, sources: &VertexSet, forward: bool) -> VertexSet {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue: VecDeque<usize> = sources.iter().copied().collect();
        for &x in sources {
            seen[x] = true;
        }
        while let Some(u) = queue.pop_front() {
            let next = if forward { &self.out[u] } else { &self.inn[u] };
            for &w in next {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.vertex_count()).filter(|&v| seen[v]).collect()
    }
}

/// `V+(X)`: vertices reachable from `X` by directed paths, `X` included.
pub fn forward_set(dg: &SuccessorDigraph, x: &VertexSet) -> VertexSet {
    dg.reach(x, true)
}

/// `V-(X)`: vertices from which `X` is reachable, `X` included.
pub fn backward_set(dg: &SuccessorDigraph, x: &VertexSet) -> VertexSet {
    dg.reach(x, false)
}

fn shift(g: &Graph, f: &KColoring, set: &VertexSet, delta: isize) -> Result<KColoring, RainbowError> {
    let mut colors = f.colors().to_vec();
    for &v in set {
        colors[v] = add_mod(colors[v], delta, f.k());
    }
    let shifted = KColoring::new(f.k(), colors).expect("shift stays within 1..=k");
    match shifted.first_conflict(g) {
        None => Ok(shifted),
        Some((u, v)) => Err(RainbowError::ShiftNotProper(u, v)),
    }
}

/// `f+_X`: every color in `V+(X)` of `D_f` raised by one, modulo `k`.
///
/// No edge leaves `V+(X)` towards a vertex colored one higher (it would be an
/// arc), so the result is proper; it is re-checked anyway.
pub fn shift_up(g: &Graph, f: &KColoring, x: &VertexSet) -> Result<KColoring, RainbowError> {
    let dg = SuccessorDigraph::of_coloring(g, f);
    shift(g, f, &forward_set(&dg, x), 1)
}

/// `f-_X`: every color in `V-(X)` of `D_f` lowered by one, modulo `k`.
pub fn shift_down(g: &Graph, f: &KColoring, x: &VertexSet) -> Result<KColoring, RainbowError> {
    let dg = SuccessorDigraph::of_coloring(g, f);
    shift(g, f, &backward_set(&dg, x), -1)
}

/// Vertices that begin a directed walk on `depth` vertices.
///
/// Level 1 is every vertex; level `t + 1` keeps the vertices with an
/// out-neighbour in level `t`. When `gcd(modulus, step) = 1` and
/// `depth <= modulus`, the labels along such a walk are pairwise distinct, so
/// the walk is a path.
pub fn walk_depth_ok(dg: &SuccessorDigraph, depth: usize) -> VertexSet {
    let n = dg.vertex_count();
    let mut level = vec![true; n];
    for _ in 1..depth {
        let next: Vec<bool> = (0..n).map(|v| dg.out[v].iter().any(|&w| level[w])).collect();
        if next == level {
            break;
        }
        level = next;
    }
    (0..n).filter(|&v| level[v]).collect()
}

/// All windows of `len` consecutive vertices along a closed directed cycle,
/// one starting at each cycle vertex.
///
/// On a directed cycle of a successor digraph with step 1 and modulus `k`, a
/// window of `k` vertices carries `k` consecutive labels and is therefore a
/// full rainbow path.
pub fn cycle_windows(cycle: &[usize], len: usize) -> Vec<PathWitness> {
    let m = cycle.len();
    if len > m {
        return Vec::new();
    }
    (0..m).map(|start| PathWitness::undirected((0..len).map(|i| cycle[(start + i) % m]).collect())).collect()
}
