//! Brute-force reference implementations shared by the integration and
//! acceptance tests. Nothing here calls the library's search code.
#![allow(dead_code)]

use rainbow_core::Graph;

/// Per-vertex (begins, lies_on) verdicts by listing every simple path on `k`
/// vertices and testing its colors afterwards.
pub fn naive_rainbow(g: &Graph, colors: &[usize], k: usize) -> (Vec<bool>, Vec<bool>) {
    let n = g.vertex_count();
    let mut begins = vec![false; n];
    let mut lies_on = vec![false; n];
    let mut path = Vec::with_capacity(k);
    let mut on_path = vec![false; n];
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        extend(g, colors, k, &mut path, &mut on_path, &mut begins, &mut lies_on);
        on_path[start] = false;
        path.pop();
    }
    (begins, lies_on)
}

fn extend(
    g: &Graph,
    colors: &[usize],
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    begins: &mut [bool],
    lies_on: &mut [bool],
) {
    if path.len() == k {
        let mut seen = 0u64;
        for &v in path.iter() {
            seen |= 1 << colors[v];
        }
        if seen.count_ones() as usize == k {
            begins[path[0]] = true;
            for &v in path.iter() {
                lies_on[v] = true;
            }
        }
        return;
    }
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend(g, colors, k, path, on_path, begins, lies_on);
            path.pop();
            on_path[w] = false;
        }
    }
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Every proper map `V -> 1..=k`, by counting through all `k^n` maps.
pub fn brute_colorings(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let total = k.pow(n as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut colors = vec![0; n];
        for c in colors.iter_mut().rev() {
            *c = code % k + 1;
            code /= k;
        }
        if is_proper(g, &colors) {
            out.push(colors);
        }
    }
    out
}

pub fn brute_chromatic(g: &Graph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    (1..).find(|&k| !brute_colorings(g, k).is_empty()).unwrap()
}

/// Whether `g` has a cycle on exactly `len` vertices, by trying every
/// sequence of distinct vertices.
pub fn brute_has_cycle(g: &Graph, len: usize) -> bool {
    fn go(g: &Graph, len: usize, seq: &mut Vec<usize>) -> bool {
        if seq.len() == len {
            return g.has_edge(seq[len - 1], seq[0]);
        }
        let last = *seq.last().unwrap();
        for &w in g.neighbors(last) {
            if !seq.contains(&w) {
                seq.push(w);
                let found = go(g, len, seq);
                seq.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    (0..g.vertex_count()).any(|s| go(g, len, &mut vec![s]))
}

/// `gcd` by Euclid, for checking reduced fractions.
pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `c` is a valid `(n, d)`-coloring of `g`.
pub fn is_circular(g: &Graph, values: &[usize], n: usize, d: usize) -> bool {
    values.len() == g.vertex_count()
        && values.iter().all(|&x| (1..=n).contains(&x))
        && g.edges().iter().all(|&(u, v)| {
            let diff = values[u].abs_diff(values[v]);
            d <= diff && diff <= n - d
        })
}

/// Every vertex reachable from vertex 0, by repeated edge relaxation.
pub fn brute_reachable_all(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if n == 0 {
        return false;
    }
    seen[0] = true;
    loop {
        let mut changed = false;
        for &(u, v) in g.edges() {
            if seen[u] != seen[v] {
                seen[u] = true;
                seen[v] = true;
                changed = true;
            }
        }
        if !changed {
            return seen.iter().all(|&s| s);
        }
    }
}
