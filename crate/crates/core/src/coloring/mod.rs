//! Proper `k`-colorings, `(n, d)`-colorings and the exact searches over them.

mod chromatic;
mod circular;
mod enumerate;
pub mod io;

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::BudgetExhausted;
use crate::graph::Graph;

pub use chromatic::{chromatic_number, greedy_clique_bound};
pub use circular::{circular_chromatic_number, circular_colorable, find_theorem5_coloring, CircularSearch};
pub use enumerate::{enumerate_proper_colorings, random_proper_coloring, ProperColorings};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("vertex {vertex} has value {value}, outside 1..={n}")]
    ValueOutOfRange { vertex: usize, value: usize, n: usize },
    #[error("invalid circular parameters ({n}, {d}): need n >= 2d and gcd(n, d) = 1")]
    CircularParameters { n: usize, d: usize },
    #[error("coloring covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {{{0}, {1}}} violates the coloring constraint")]
    Conflict(usize, usize),
    #[error("circular search supports at most 64 values, got {0}")]
    TooManyValues(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("no ({n}, {d})-coloring with the successor-walk property exists; is n/d the circular chromatic number?")]
    Theorem5NotFound { n: usize, d: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A map `V -> [k]`; colors are `1..=k`.
///
/// Construction only checks the color range; properness is a property of the
/// pair (graph, coloring) and is checked with [`KColoring::is_proper`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "KColoringData")]
pub struct KColoring {
    k: usize,
    colors: Vec<usize>,
}

#[derive(Deserialize)]
struct KColoringData {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<KColoringData> for KColoring {
    type Error = ColoringError;

    fn try_from(data: KColoringData) -> Result<Self, Self::Error> {
        KColoring::new(data.k, data.colors)
    }
}

impl KColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(KColoring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// First edge (in `g.edges()` order) whose ends share a color.
    pub fn first_conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().iter().copied().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    /// Covers every vertex of `g` and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count() && self.first_conflict(g).is_none()
    }

    /// Recolors through `perm`, where `perm[c - 1]` is the new color of `c`.
    /// `perm` must be a permutation of `1..=k`.
    pub fn permuted(&self, perm: &[usize]) -> KColoring {
        debug_assert_eq!(perm.len(), self.k);
        KColoring { k: self.k, colors: self.colors.iter().map(|&c| perm[c - 1]).collect() }
    }

    /// Same colors with `v` recolored to `color`.
    pub fn with_color(&self, v: usize, color: usize) -> KColoring {
        debug_assert!((1..=self.k).contains(&color));
        let mut colors = self.colors.clone();
        colors[v] = color;
        KColoring { k: self.k, colors }
    }

    pub(crate) fn from_raw(k: usize, colors: Vec<usize>) -> KColoring {
        debug_assert!(colors.iter().all(|&c| (1..=k).contains(&c)));
        KColoring { k, colors }
    }
}

/// Adds `delta` to a color in `1..=modulus`, wrapping around.
pub(crate) fn add_mod(color: usize, delta: isize, modulus: usize) -> usize {
    let m = modulus as isize;
    ((color as isize - 1 + delta).rem_euclid(m) + 1) as usize
}

/// A map `c: V -> [n]` with `d <= |c(u) - c(v)| <= n - d` on every edge.
///
/// `(n, d) = (1, 1)` is admitted for graphs without edges.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CircularColoring {
    n: usize,
    d: usize,
    values: Vec<usize>,
}

pub(crate) fn valid_parameters(n: usize, d: usize) -> bool {
    (n, d) == (1, 1) || (d >= 1 && n >= 2 * d && n.gcd(&d) == 1)
}

/// Circular distance test for a single edge.
pub(crate) fn circular_compatible(a: usize, b: usize, n: usize, d: usize) -> bool {
    let diff = a.abs_diff(b);
    d <= diff && diff <= n - d
}

impl CircularColoring {
    pub fn new(n: usize, d: usize, values: Vec<usize>) -> Result<Self, ColoringError> {
        if !valid_parameters(n, d) {
            return Err(ColoringError::CircularParameters { n, d });
        }
        if let Some((vertex, &value)) = values.iter().enumerate().find(|(_, &c)| c == 0 || c > n) {
            return Err(ColoringError::ValueOutOfRange { vertex, value, n });
        }
        Ok(CircularColoring { n, d, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, v: usize) -> usize {
        self.values[v]
    }

    /// The circular number `n/d` of this coloring's parameters.
    pub fn ratio(&self) -> CircularNumber {
        CircularNumber { n: self.n, d: self.d }
    }

    /// All values increased by `shift`, wrapping `n` back to `1`. Rotation
    /// preserves validity and the successor digraph.
    pub fn rotated(&self, shift: usize) -> CircularColoring {
        CircularColoring {
            n: self.n,
            d: self.d,
            values: self.values.iter().map(|&c| add_mod(c, (shift % self.n) as isize, self.n)).collect(),
        }
    }

    /// `u -> ceil(c(u) / d)`, a proper `ceil(n/d)`-coloring whenever `self`
    /// is valid.
    pub fn ceil_coloring(&self) -> KColoring {
        let k = self.n.div_ceil(self.d);
        KColoring::from_raw(k, self.values.iter().map(|&c| c.div_ceil(self.d)).collect())
    }

    pub(crate) fn from_raw(n: usize, d: usize, values: Vec<usize>) -> Self {
        CircularColoring { n, d, values }
    }
}

/// True iff `c` covers every vertex of `g` with admissible parameters and
/// respects the circular distance on every edge.
pub fn is_valid_circular(g: &Graph, c: &CircularColoring) -> bool {
    valid_parameters(c.n, c.d)
        && c.values.len() == g.vertex_count()
        && c.values.iter().all(|&x| (1..=c.n).contains(&x))
        && g.edges().iter().all(|&(u, v)| circular_compatible(c.values[u], c.values[v], c.n, c.d))
}

/// A reduced fraction `n/d`: the value of the circular chromatic number.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CircularNumber {
    pub n: usize,
    pub d: usize,
}

impl CircularNumber {
    pub fn new(n: usize, d: usize) -> Result<Self, ColoringError> {
        if valid_parameters(n, d) {
            Ok(CircularNumber { n, d })
        } else {
            Err(ColoringError::CircularParameters { n, d })
        }
    }

    pub fn ratio(&self) -> Ratio<u64> {
        Ratio::new_raw(self.n as u64, self.d as u64)
    }

    /// `ceil(n/d)`, which equals the chromatic number.
    pub fn ceil(&self) -> usize {
        self.n.div_ceil(self.d)
    }

    pub fn is_integral(&self) -> bool {
        self.d == 1
    }
}

impl Ord for CircularNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n * other.d).cmp(&(other.n * self.d))
    }
}

impl PartialOrd for CircularNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CircularNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.n, self.d)
    }
}
