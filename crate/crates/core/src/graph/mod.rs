//! Simple undirected graphs, orientations and path witnesses.
//!
//! Vertices are dense `0..vertex_count` indices. File formats translate to and
//! from this indexing at the boundary (see [`dimacs`] and [`edge_list`]).

mod cycles;
pub mod dimacs;
pub mod edge_list;
pub mod generators;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cycles::find_cycle_of_length;
pub use generators::{generate, mycielski, Family};

/// Sorted set of vertex indices.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair ({0}, {1}) is not an edge of the base graph")]
    NotAnEdge(usize, usize),
    #[error("edge {{{0}, {1}}} is oriented twice")]
    DuplicateArc(usize, usize),
    #[error("edge {{{0}, {1}}} has no orientation")]
    MissingArc(usize, usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl GraphError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        GraphError::Parse { line, message: message.into() }
    }
}

/// A finite simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically.
/// Neighbor lists are sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphData> for Graph {
    type Error = GraphError;

    fn try_from(data: GraphData) -> Result<Self, Self::Error> {
        Graph::from_edges(data.n, data.edges)
    }
}

impl From<Graph> for GraphData {
    fn from(g: Graph) -> Self {
        GraphData { n: g.vertex_count(), edges: g.edges }
    }
}

impl Graph {
    /// Edgeless graph on `vertex_count` vertices.
    pub fn empty(vertex_count: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); vertex_count], edges: Vec::new() }
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// direction) collapse to one; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency, edges: set.into_iter().collect() })
    }

    /// Graph on `vertex_count` vertices whose edges are the set bits of
    /// `mask`, in the order `(0,1), (0,2), …, (0,n-1), (1,2), …`.
    pub fn from_edge_mask(vertex_count: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Graph::from_edges(vertex_count, edges).expect("mask edges are simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut component = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// True for graphs with exactly one component. The graph without
    /// vertices is not connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced edges are simple")
    }

    /// True if no two vertices of `set` are adjacent.
    pub fn is_independent<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> bool {
        let members: Vec<usize> = set.into_iter().copied().collect();
        members.iter().all(|&u| self.adjacency[u].iter().all(|w| !members.contains(w)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count(), self.edges)
    }
}

/// An orientation of a base graph: exactly one arc per edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    base: Graph,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Orientation {
    pub fn new<I>(base: Graph, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = base.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut oriented = BTreeSet::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), vertex_count: n });
            }
            if !base.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
            if !oriented.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateArc(u.min(v), u.max(v)));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        if let Some(&(u, v)) = base.edges().iter().find(|e| !oriented.contains(e)) {
            return Err(GraphError::MissingArc(u, v));
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Orientation { base, out, inn })
    }

    /// Orientation selected by bit `i` of `mask` for the `i`-th base edge
    /// `(u, v)` (`u < v`): bit clear gives `u -> v`, bit set gives `v -> u`.
    pub fn from_mask(base: Graph, mask: u64) -> Self {
        let arcs: Vec<(usize, usize)> = base
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        Orientation::new(base, arcs).expect("mask orientation covers every edge once")
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u].binary_search(&v).is_ok()
    }

    /// All arcs sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<_> =
            self.out.iter().enumerate().flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v))).collect();
        arcs.sort_unstable();
        arcs
    }
}

/// A path given by its vertex sequence. When `directed` is set, consecutive
/// vertices must follow arcs of an orientation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    #[serde(default)]
    pub directed: bool,
}

impl PathWitness {
    pub fn undirected(vertices: Vec<usize>) -> Self {
        PathWitness { vertices, directed: false }
    }

    pub fn directed(vertices: Vec<usize>) -> Self {
        PathWitness { vertices, directed: true }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    fn distinct(&self) -> bool {
        let set: BTreeSet<_> = self.vertices.iter().collect();
        set.len() == self.vertices.len()
    }

    /// Distinct vertices, consecutive ones adjacent in `g`.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.vertex_count())
            && self.distinct()
            && self.vertices.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    /// Distinct vertices, consecutive ones joined by a forward arc of `d`.
    pub fn is_directed_path_in(&self, d: &Orientation) -> bool {
        self.vertices.iter().all(|&v| v < d.base().vertex_count())
            && self.distinct()
            && self.vertices.windows(2).all(|w| d.has_arc(w[0], w[1]))
    }

    /// True if the vertices form a cycle of `g` when the last is joined back
    /// to the first.
    pub fn is_closed_cycle_in(&self, g: &Graph) -> bool {
        self.vertices.len() >= 3 && self.is_path_in(g) && g.has_edge(self.vertices[0], *self.vertices.last().unwrap())
    }
}
