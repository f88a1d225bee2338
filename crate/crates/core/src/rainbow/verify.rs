use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::RainbowError;
use crate::coloring::KColoring;
use crate::graph::{Graph, Orientation, PathWitness};

/// Largest palette the subset tables accept unless a caller raises it.
pub const DEFAULT_MAX_COLORS: usize = 10;

/// Exact table of rainbow paths by endpoint and color set.
///
/// `ends(v, S)` holds iff some path ends at `v` whose vertices carry exactly
/// the colors of `S`, each once. Such paths are automatically simple. The
/// table is filled in increasing order of `S` (as a bitmask, bit `c - 1` for
/// color `c`): a path ending at `v` with set `S` is `v` alone when
/// `S = {f(v)}`, and otherwise extends a path ending at a neighbour `w` with
/// set `S \ {f(v)}`. Size `2^k * |V|`; time `O(2^k (|V| + |E|))`.
#[derive(Debug)]
pub struct RainbowTable<'a> {
    f: &'a KColoring,
    n: usize,
    full: usize,
    reach: Vec<bool>,
    /// Predecessor lists: neighbours for undirected tables, in-neighbours for
    /// directed ones.
    pred: Vec<&'a [usize]>,
    directed: bool,
}

fn bit(color: usize) -> usize {
    1 << (color - 1)
}

impl<'a> RainbowTable<'a> {
    pub fn build(g: &'a Graph, f: &'a KColoring) -> Result<Self, RainbowError> {
        Self::build_with_limit(g, f, DEFAULT_MAX_COLORS)
    }

    pub fn build_with_limit(g: &'a Graph, f: &'a KColoring, limit: usize) -> Result<Self, RainbowError> {
        let pred = g.vertices().map(|v| g.neighbors(v)).collect();
        Self::fill(g.vertex_count(), f, limit, pred, false)
    }

    /// Table over directed paths of an orientation.
    pub fn build_directed(d: &'a Orientation, f: &'a KColoring) -> Result<Self, RainbowError> {
        let pred = d.base().vertices().map(|v| d.in_neighbors(v)).collect();
        Self::fill(d.base().vertex_count(), f, DEFAULT_MAX_COLORS, pred, true)
    }

    fn fill(
        n: usize,
        f: &'a KColoring,
        limit: usize,
        pred: Vec<&'a [usize]>,
        directed: bool,
    ) -> Result<Self, RainbowError> {
        let k = f.k();
        if k > limit || k >= usize::BITS as usize {
            return Err(RainbowError::TooManyColors { k, limit });
        }
        if f.len() != n {
            return Err(RainbowError::LengthMismatch { expected: n, found: f.len() });
        }
        let full = (1usize << k) - 1;
        let mut reach = vec![false; (full + 1) * n];
        for mask in 1..=full {
            for v in 0..n {
                let own = bit(f.color(v));
                if mask & own == 0 {
                    continue;
                }
                let rest = mask ^ own;
                reach[mask * n + v] =
                    rest == 0 || pred[v].iter().any(|&w| rest & bit(f.color(w)) != 0 && reach[rest * n + w]);
            }
        }
        Ok(RainbowTable { f, n, full, reach, pred, directed })
    }

    pub fn k(&self) -> usize {
        self.f.k()
    }

    /// A rainbow path with color set `mask` ends at `v`.
    pub fn ends(&self, v: usize, mask: usize) -> bool {
        mask <= self.full && self.reach[mask * self.n + v]
    }

    /// Some full rainbow path begins at `v`. In the undirected case this is
    /// the reverse of a full path ending at `v`.
    pub fn begins(&self, v: usize) -> bool {
        debug_assert!(!self.directed);
        self.ends(v, self.full)
    }

    /// Some rainbow path on `order` vertices begins at `v`.
    pub fn begins_with_order(&self, v: usize, order: usize) -> bool {
        self.set_with_order(v, order).is_some()
    }

    fn set_with_order(&self, v: usize, order: usize) -> Option<usize> {
        let own = bit(self.f.color(v));
        (0..=self.full).find(|&mask| mask & own != 0 && mask.count_ones() as usize == order && self.ends(v, mask))
    }

    /// Color set `S` witnessing that `v` lies on a full rainbow path: a path
    /// ending at `v` with colors `S` and one ending at `v` with colors
    /// `T = ([k] \ S) ∪ {f(v)}`. The two share only `v`, because every other
    /// vertex of one carries a color absent from the other, so joining the
    /// first with the reverse of the second is a full rainbow path.
    fn split_for(&self, v: usize) -> Option<usize> {
        let own = bit(self.f.color(v));
        (0..=self.full).filter(|&s| s & own != 0).find(|&s| self.ends(v, s) && self.ends(v, (self.full ^ s) | own))
    }

    pub fn lies_on(&self, v: usize) -> bool {
        debug_assert!(!self.directed);
        self.split_for(v).is_some()
    }

    /// A path ending at `v` with color set `mask`, listed from its start to `v`.
    /// Predecessors are chosen by smallest index.
    pub fn path_ending_at(&self, v: usize, mask: usize) -> Option<Vec<usize>> {
        if !self.ends(v, mask) {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        let mut m = mask;
        loop {
            m ^= bit(self.f.color(cur));
            if m == 0 {
                break;
            }
            cur = *self.pred[cur]
                .iter()
                .find(|&&w| m & bit(self.f.color(w)) != 0 && self.reach[m * self.n + w])
                .expect("table entry has a predecessor");
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    pub fn begins_witness(&self, v: usize) -> Option<PathWitness> {
        let mut path = self.path_ending_at(v, self.full)?;
        path.reverse();
        Some(PathWitness::undirected(path))
    }

    pub fn begins_with_order_witness(&self, v: usize, order: usize) -> Option<PathWitness> {
        let mut path = self.path_ending_at(v, self.set_with_order(v, order)?)?;
        path.reverse();
        Some(PathWitness::undirected(path))
    }

    pub fn lies_on_witness(&self, v: usize) -> Option<PathWitness> {
        let s = self.split_for(v)?;
        let own = bit(self.f.color(v));
        let mut path = self.path_ending_at(v, s)?;
        let mut tail = self.path_ending_at(v, (self.full ^ s) | own)?;
        tail.pop();
        tail.reverse();
        path.extend(tail);
        Some(PathWitness::undirected(path))
    }

    /// First full directed rainbow path, by smallest end vertex.
    pub fn directed_witness(&self) -> Option<PathWitness> {
        debug_assert!(self.directed);
        (0..self.n)
            .find(|&v| self.ends(v, self.full))
            .and_then(|v| self.path_ending_at(v, self.full))
            .map(PathWitness::directed)
    }

    /// Per-vertex verdicts with one witness per vertex: a path starting at
    /// the vertex when it begins one, otherwise a path through it.
    pub fn report(&self) -> RainbowReport {
        let mut report = RainbowReport {
            k: self.k(),
            lies_on: Vec::with_capacity(self.n),
            begins: Vec::with_capacity(self.n),
            witnesses: BTreeMap::new(),
        };
        for v in 0..self.n {
            let witness = self.begins_witness(v);
            let begins = witness.is_some();
            let witness = witness.or_else(|| self.lies_on_witness(v));
            report.begins.push(begins);
            report.lies_on.push(witness.is_some());
            if let Some(w) = witness {
                report.witnesses.insert(v, w.vertices);
            }
        }
        report
    }
}

/// Per-vertex rainbow verdicts for a coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowReport {
    #[serde(skip)]
    pub k: usize,
    pub lies_on: Vec<bool>,
    pub begins: Vec<bool>,
    /// Vertex to witness path (as a vertex list).
    pub witnesses: BTreeMap<usize, Vec<usize>>,
}

impl RainbowReport {
    pub fn all_lie_on(&self) -> bool {
        self.lies_on.iter().all(|&b| b)
    }

    pub fn all_begin(&self) -> bool {
        self.begins.iter().all(|&b| b)
    }

    pub fn begin_count(&self) -> usize {
        self.begins.iter().filter(|&&b| b).count()
    }

    pub fn witness(&self, v: usize) -> Option<PathWitness> {
        self.witnesses.get(&v).cloned().map(PathWitness::undirected)
    }
}

/// Exact lies-on / begins verdicts with witnesses.
pub fn verify_rainbow(g: &Graph, f: &KColoring) -> Result<RainbowReport, RainbowError> {
    Ok(RainbowTable::build(g, f)?.report())
}

/// A directed path of order `k` in `d` whose colors are pairwise distinct, if
/// any.
pub fn verify_directed_rainbow(d: &Orientation, f: &KColoring) -> Result<Option<PathWitness>, RainbowError> {
    Ok(RainbowTable::build_directed(d, f)?.directed_witness())
}
