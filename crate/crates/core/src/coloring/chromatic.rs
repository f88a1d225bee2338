use super::KColoring;
use crate::graph::Graph;

/// Exact chromatic number with a witness coloring.
///
/// Iterative deepening from a greedy clique lower bound up to the greedy
/// upper bound; each level is a backtracking search over vertices in
/// largest-degree-first order where a vertex may open at most one new color.
/// The empty graph gets `0` and an empty witness.
pub fn chromatic_number(g: &Graph) -> (usize, KColoring) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, KColoring::from_raw(0, Vec::new()));
    }
    let order = degree_order(g);
    let greedy = greedy_coloring(g, &order);
    let upper = greedy.k();
    let lower = greedy_clique_bound(g);
    for k in lower..upper {
        if let Some(witness) = color_with(g, &order, k) {
            return (k, witness);
        }
    }
    (upper, greedy)
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy_coloring(g: &Graph, order: &[usize]) -> KColoring {
    let mut colors = vec![0usize; g.vertex_count()];
    for &v in order {
        let mut c = 1;
        while g.neighbors(v).iter().any(|&w| colors[w] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    let k = colors.iter().copied().max().unwrap_or(0);
    KColoring::from_raw(k, colors)
}

/// Size of the largest clique found by growing greedily from every vertex,
/// candidates taken by decreasing degree. At least 1 on nonempty graphs.
pub fn greedy_clique_bound(g: &Graph) -> usize {
    let order = degree_order(g);
    let mut best = usize::from(!g.is_empty());
    for &seed in &order {
        let mut clique = vec![seed];
        for &v in &order {
            if v != seed && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn color_with(g: &Graph, order: &[usize], k: usize) -> Option<KColoring> {
    fn search(g: &Graph, order: &[usize], k: usize, pos: usize, used: usize, colors: &mut [usize]) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        for c in 1..=k.min(used + 1) {
            if g.neighbors(v).iter().any(|&w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if search(g, order, k, pos + 1, used.max(c), colors) {
                return true;
            }
        }
        colors[v] = 0;
        false
    }

    let mut colors = vec![0usize; g.vertex_count()];
    search(g, order, k, 0, 0, &mut colors).then(|| KColoring::from_raw(k, colors))
}
