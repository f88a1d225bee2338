use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HarnessError;
use crate::graph::{generate, Family, Graph};

/// Largest vertex count for labelled exhaustive enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 7;

/// All connected labelled graphs on `1..=max_n` vertices, by vertex count and
/// then by edge mask (see [`Graph::from_edge_mask`]). Graphs are distinct as
/// labelled graphs; isomorphic copies are all produced.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    max_n: usize,
    n: usize,
    mask: u64,
}

pub fn enumerate_connected_graphs(max_n: usize) -> Result<ConnectedGraphs, HarnessError> {
    if max_n > EXHAUSTIVE_LIMIT {
        return Err(HarnessError::TooLarge { requested: max_n, limit: EXHAUSTIVE_LIMIT });
    }
    Ok(ConnectedGraphs { max_n, n: 1, mask: 0 })
}

/// Bitmask connectivity test over the edge mask, without building the graph.
fn mask_connected(n: usize, mask: u64) -> bool {
    let mut adjacency = [0u8; EXHAUSTIVE_LIMIT];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                adjacency[u] |= 1 << v;
                adjacency[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    let all = ((1u16 << n) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        for (v, &row) in adjacency.iter().enumerate().take(n) {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & all == all
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.n <= self.max_n {
            let pairs = self.n * (self.n - 1) / 2;
            while self.mask < 1 << pairs {
                let mask = self.mask;
                self.mask += 1;
                if mask_connected(self.n, mask) {
                    return Some(Graph::from_edge_mask(self.n, mask));
                }
            }
            self.n += 1;
            self.mask = 0;
        }
        None
    }
}

/// `count` connected graphs with vertex counts drawn from `min_n..=max_n`.
///
/// Each draw picks `n`, an edge probability in `[0.25, 0.7)` and a graph seed
/// from a `ChaCha8Rng` seeded with `seed`, then builds `G(n, p)`; disconnected
/// draws are discarded.
pub fn sample_connected_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_n..=max_n);
        let p = rng.gen_range(0.25..0.7);
        let g = generate(&Family::RandomGnp { n, p, seed: rng.gen() }).expect("valid probability");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_connected_graphs(3).unwrap().count(), 6);
        let four = enumerate_connected_graphs(4).unwrap().filter(|g| g.vertex_count() == 4).count();
        assert_eq!(four, 38);
    }

    #[test]
    fn matches_graph_connectivity() {
        for mask in 0..1u64 << 10 {
            assert_eq!(mask_connected(5, mask), Graph::from_edge_mask(5, mask).is_connected());
        }
    }

    #[test]
    fn limit() {
        assert!(enumerate_connected_graphs(8).is_err());
    }

    #[test]
    fn samples_are_seeded_and_connected() {
        let a = sample_connected_graphs(10, 7, 10, 5);
        assert_eq!(a, sample_connected_graphs(10, 7, 10, 5));
        assert!(a.iter().all(|g| g.is_connected() && (7..=10).contains(&g.vertex_count())));
    }
}
