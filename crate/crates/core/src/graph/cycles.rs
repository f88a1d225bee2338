use std::collections::VecDeque;

use super::{Graph, GraphError, PathWitness};

/// Finds a cycle with exactly `k` vertices.
///
/// Returns the lexicographically smallest vertex sequence among all cycles of
/// length `k` (it starts at the cycle's smallest vertex; the closing edge
/// joins the last vertex back to the first). Depth-first backtracking, pruned
/// by the distance back to the start vertex.
pub fn find_cycle_of_length(g: &Graph, k: usize) -> Result<Option<PathWitness>, GraphError> {
    if k < 3 {
        return Err(GraphError::Parameter(format!("cycle length must be >= 3, got {k}")));
    }
    let n = g.vertex_count();
    if k > n {
        return Ok(None);
    }
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(k);
    for start in 0..n {
        let dist = distances_within(g, start);
        path.clear();
        path.push(start);
        on_path[start] = true;
        let found = extend(g, k, &dist, &mut path, &mut on_path);
        on_path[start] = false;
        if found {
            return Ok(Some(PathWitness::undirected(path)));
        }
    }
    Ok(None)
}

/// BFS distances from `start` using only vertices `>= start`.
fn distances_within(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if w > start && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn extend(g: &Graph, k: usize, dist: &[usize], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    if path.len() == k {
        return g.has_edge(last, start);
    }
    let remaining = k - path.len();
    for &w in g.neighbors(last) {
        // the cycle is anchored at its smallest vertex
        if w <= start || on_path[w] || dist[w] > remaining {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend(g, k, dist, path, on_path) {
            return true;
        }
        on_path[w] = false;
        path.pop();
    }
    false
}
