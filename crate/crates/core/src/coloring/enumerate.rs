use rand::seq::SliceRandom;
use rand::Rng;

use super::KColoring;
use crate::graph::Graph;

/// Every proper `k`-coloring of a graph exactly once, in lexicographic order
/// of the color vector `(f(0), f(1), …)`.
#[derive(Debug)]
pub struct ProperColorings<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    started: bool,
    exhausted: bool,
}

pub fn enumerate_proper_colorings(g: &Graph, k: usize) -> ProperColorings<'_> {
    ProperColorings { g, k, colors: vec![0; g.vertex_count()], started: false, exhausted: false }
}

impl ProperColorings<'_> {
    fn clashes(&self, v: usize, color: usize) -> bool {
        self.g.neighbors(v).iter().any(|&w| w < v && self.colors[w] == color)
    }
}

impl Iterator for ProperColorings<'_> {
    type Item = KColoring;

    fn next(&mut self) -> Option<KColoring> {
        if self.exhausted {
            return None;
        }
        let n = self.colors.len();
        if n == 0 {
            self.exhausted = true;
            return Some(KColoring::from_raw(self.k, Vec::new()));
        }
        // resume by advancing the last vertex of the previous solution
        let mut v = if self.started { n - 1 } else { 0 };
        self.started = true;
        loop {
            let mut color = self.colors[v] + 1;
            while color <= self.k && self.clashes(v, color) {
                color += 1;
            }
            if color <= self.k {
                self.colors[v] = color;
                if v + 1 == n {
                    return Some(KColoring::from_raw(self.k, self.colors.clone()));
                }
                v += 1;
            } else {
                self.colors[v] = 0;
                if v == 0 {
                    self.exhausted = true;
                    return None;
                }
                v -= 1;
            }
        }
    }
}

/// A proper `k`-coloring found by randomized backtracking (vertices in index
/// order, colors tried in a fresh random order at every node). `None` when
/// `g` is not `k`-colorable. Not uniform over colorings.
pub fn random_proper_coloring<R: Rng + ?Sized>(g: &Graph, k: usize, rng: &mut R) -> Option<KColoring> {
    fn go<R: Rng + ?Sized>(g: &Graph, k: usize, v: usize, colors: &mut [usize], rng: &mut R) -> bool {
        if v == colors.len() {
            return true;
        }
        let mut palette: Vec<usize> = (1..=k).collect();
        palette.shuffle(rng);
        for c in palette {
            if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if go(g, k, v + 1, colors, rng) {
                return true;
            }
        }
        colors[v] = 0;
        false
    }
    if k == 0 && !g.is_empty() {
        return None;
    }
    let mut colors = vec![0; g.vertex_count()];
    go(g, k, 0, &mut colors, rng).then(|| KColoring::from_raw(k, colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn count(family: Family, k: usize) -> usize {
        let g = generate(&family).unwrap();
        enumerate_proper_colorings(&g, k).inspect(|f| assert!(f.is_proper(&g))).count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(Family::Complete(3), 3), 6);
        assert_eq!(count(Family::Cycle(4), 2), 2);
        // chromatic polynomial of C_n at 3: 2^n + 2(-1)^n
        assert_eq!(count(Family::Cycle(5), 3), 30);
        assert_eq!(count(Family::Cycle(5), 2), 0);
        // trees: k (k-1)^(n-1)
        assert_eq!(count(Family::Path(5), 3), 3 * 16);
    }

    #[test]
    fn lexicographic_and_distinct() {
        let g = generate(&Family::Cycle(6)).unwrap();
        let all: Vec<_> = enumerate_proper_colorings(&g, 3).map(|f| f.colors().to_vec()).collect();
        assert_eq!(all.len(), 66);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn random_is_proper() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = generate(&Family::Petersen).unwrap();
        for _ in 0..20 {
            assert!(random_proper_coloring(&g, 3, &mut rng).unwrap().is_proper(&g));
        }
        assert!(random_proper_coloring(&g, 2, &mut rng).is_none());
    }
}
