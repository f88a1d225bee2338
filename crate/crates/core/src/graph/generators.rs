//! Deterministic graph families used by the test corpus and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A named graph family with its parameters.
///
/// Serialized externally tagged, e.g. `{"cycle": 5}`, `"petersen"`,
/// `{"mycielski": {"cycle": 5}}` or
/// `{"random_gnp": {"n": 8, "p": 0.4, "seed": 7}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `C_k`, `k >= 3`.
    Cycle(usize),
    /// `K_k`, `k >= 1`.
    Complete(usize),
    /// Path on `k >= 1` vertices.
    Path(usize),
    /// Rim `C_k` (vertices `0..k`) plus a hub (vertex `k`) adjacent to the
    /// whole rim, `k >= 4`.
    Wheel(usize),
    Petersen,
    /// Mycielskian of the base family.
    Mycielski(Box<Family>),
    /// Erdős–Rényi `G(n, p)`. Pairs `(u, v)`, `u < v`, are visited in
    /// lexicographic order and kept when a `ChaCha8Rng` seeded with
    /// `seed_from_u64(seed)` draws an `f64` below `p`.
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
}

fn out_of_range(message: String) -> GraphError {
    GraphError::Parameter(message)
}

/// Builds the graph for `family`. Identical parameters give identical graphs.
pub fn generate(family: &Family) -> Result<Graph, GraphError> {
    match *family {
        Family::Cycle(k) => {
            if k < 3 {
                return Err(out_of_range(format!("cycle needs k >= 3, got {k}")));
            }
            Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
        }
        Family::Complete(k) => {
            if k < 1 {
                return Err(out_of_range("complete graph needs k >= 1".into()));
            }
            Graph::from_edges(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
        }
        Family::Path(k) => {
            if k < 1 {
                return Err(out_of_range("path needs k >= 1".into()));
            }
            Graph::from_edges(k, (1..k).map(|i| (i - 1, i)))
        }
        Family::Wheel(k) => {
            if k < 4 {
                return Err(out_of_range(format!("wheel needs k >= 4, got {k}")));
            }
            let rim = (0..k).map(|i| (i, (i + 1) % k));
            let spokes = (0..k).map(|i| (i, k));
            Graph::from_edges(k + 1, rim.chain(spokes))
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        Family::Mycielski(ref base) => Ok(mycielski(&generate(base)?)),
        Family::RandomGnp { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(out_of_range(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

/// Mycielskian: originals `0..n`, shadows `n..2n` (shadow `n+i` joined to the
/// neighbours of `i`), and an apex `2n` joined to every shadow.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::from_edges(2 * n + 1, edges).expect("mycielskian is simple")
}
