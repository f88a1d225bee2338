mod oracle;

use proptest::prelude::*;
use rainbow_core::coloring::io::{parse_coloring, write_coloring};
use rainbow_core::coloring::{
    chromatic_number, circular_chromatic_number, circular_colorable, enumerate_proper_colorings, random_proper_coloring,
};
use rainbow_core::graph::dimacs::{parse_dimacs, write_dimacs};
use rainbow_core::graph::edge_list::{parse_edge_list, parse_orientation, write_edge_list, write_orientation};
use rainbow_core::graph::find_cycle_of_length;
use rainbow_core::harness::SweepConfig;
use rainbow_core::rainbow::{backward_set, forward_set, shift_down, shift_up, verify_rainbow};
use rainbow_core::{Budget, Graph, KColoring, Orientation, SuccessorDigraph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), any::<u64>().prop_map(move |m| if pairs == 0 { 0 } else { m & (u64::MAX >> (64 - pairs)) }))
            .prop_map(|(n, mask)| Graph::from_edge_mask(n, mask))
    })
}

/// A graph with a proper coloring on `chi + extra` colors.
fn colored(max_n: usize) -> impl Strategy<Value = (Graph, KColoring)> {
    (graph(max_n), 0..2usize, any::<u64>()).prop_map(|(g, extra, seed)| {
        let k = chromatic_number(&g).0.max(1) + extra;
        let f = random_proper_coloring(&g, k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        (g, f)
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parsers_never_panic(text in "\\PC{0,200}") {
        let _ = parse_dimacs(&text);
        let _ = parse_edge_list(&text);
        let _ = parse_coloring(&text, None);
        let _ = parse_coloring(&text, Some(3));
        let _ = SweepConfig::from_json(&text);
        let base = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let _ = parse_orientation(&base, &text);
    }

    #[test]
    fn line_parsers_never_panic(lines in prop::collection::vec("(p|e|c|#)? ?(edge|col)? ?[0-9]{0,3} ?[0-9]{0,3}", 0..12)) {
        let text = lines.join("\n");
        let _ = parse_dimacs(&text);
        let _ = parse_edge_list(&text);
        let _ = parse_coloring(&text, None);
    }

    #[test]
    fn dimacs_round_trip(g in graph(9)) {
        let text = write_dimacs(&g);
        prop_assert_eq!(parse_dimacs(&text).unwrap(), g.clone());
        prop_assert_eq!(write_dimacs(&parse_dimacs(&text).unwrap()), text);
    }

    #[test]
    fn edge_list_round_trip(g in graph(9)) {
        prop_assume!(g.edge_count() > 0 && g.degree(g.vertex_count() - 1) > 0);
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn orientation_round_trip(g in graph(7), mask in any::<u64>()) {
        let d = Orientation::from_mask(g.clone(), mask);
        prop_assert_eq!(parse_orientation(&g, &write_orientation(&d)).unwrap(), d);
    }

    #[test]
    fn coloring_round_trip((_g, f) in colored(9)) {
        prop_assert_eq!(parse_coloring(&write_coloring(&f), Some(f.k())).unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(parse_coloring(&json, None).unwrap(), f);
    }

    #[test]
    fn graph_json_round_trip(g in graph(9)) {
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
    }

    #[test]
    fn chromatic_number_matches_brute_force(g in graph(7)) {
        let (k, witness) = chromatic_number(&g);
        prop_assert_eq!(k, oracle::brute_chromatic(&g));
        prop_assert!(g.vertex_count() == 0 || (witness.k() == k && witness.is_proper(&g)));
    }

    #[test]
    fn proper_coloring_counts(g in graph(6), k in 1..4usize) {
        let ours: Vec<Vec<usize>> = enumerate_proper_colorings(&g, k).map(|f| f.colors().to_vec()).collect();
        prop_assert_eq!(ours, oracle::brute_colorings(&g, k));
    }

    #[test]
    fn cycle_finder_matches_brute_force(g in graph(9), len in 3..10usize) {
        let found = find_cycle_of_length(&g, len).unwrap();
        prop_assert_eq!(found.is_some(), oracle::brute_has_cycle(&g, len));
        if let Some(w) = found {
            prop_assert_eq!(w.order(), len);
            prop_assert!(w.is_closed_cycle_in(&g));
        }
    }

    #[test]
    fn circular_number_is_minimal(g in graph(6)) {
        prop_assume!(g.is_connected() && g.edge_count() > 0);
        let (q, c) = circular_chromatic_number(&g, &Budget::unlimited()).unwrap();
        prop_assert!(oracle::is_circular(&g, c.values(), q.n, q.d));
        // every reduced fraction below q with n <= |V| must be infeasible
        for n in 2..=g.vertex_count() {
            for d in 1..=n / 2 {
                if oracle::gcd(n, d) == 1 && n * q.d < q.n * d {
                    prop_assert!(circular_colorable(&g, n, d, &Budget::unlimited()).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn verifier_matches_naive((g, f) in colored(8)) {
        let report = verify_rainbow(&g, &f).unwrap();
        let (begins, lies_on) = oracle::naive_rainbow(&g, f.colors(), f.k());
        prop_assert_eq!(&report.begins, &begins);
        prop_assert_eq!(&report.lies_on, &lies_on);
        for (&v, path) in &report.witnesses {
            prop_assert_eq!(path.len(), f.k());
            prop_assert!(path.contains(&v));
            prop_assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn reachable_sets_are_closures((g, f) in colored(8), bits in any::<u16>(), more in any::<u16>()) {
        let dg = SuccessorDigraph::of_coloring(&g, &f);
        let x: VertexSet = g.vertices().filter(|&v| bits >> v & 1 == 1).collect();
        let y: VertexSet = x.iter().copied().chain(g.vertices().filter(|&v| more >> v & 1 == 1)).collect();
        for reach in [forward_set, backward_set] {
            let rx = reach(&dg, &x);
            prop_assert!(x.is_subset(&rx));
            prop_assert_eq!(reach(&dg, &rx), rx.clone());
            prop_assert!(rx.is_subset(&reach(&dg, &y)));
        }
        let fx = forward_set(&dg, &x);
        for (u, v) in dg.arcs() {
            prop_assert!(!fx.contains(&u) || fx.contains(&v));
        }
    }

    #[test]
    fn shifts_stay_proper((g, f) in colored(9), bits in any::<u16>()) {
        let x: VertexSet = g.vertices().filter(|&v| bits >> v & 1 == 1).collect();
        for shifted in [shift_up(&g, &f, &x).unwrap(), shift_down(&g, &f, &x).unwrap()] {
            prop_assert!(oracle::is_proper(&g, shifted.colors()));
            prop_assert_eq!(shifted.k(), f.k());
        }
    }

    #[test]
    fn invariant_under_relabelling((g, f) in colored(7), seed in any::<u64>()) {
        let perm = permutation(g.vertex_count(), seed);
        let h = relabel(&g, &perm);
        prop_assert_eq!(chromatic_number(&g).0, chromatic_number(&h).0);
        if g.edge_count() > 0 {
            let (a, _) = circular_chromatic_number(&g, &Budget::unlimited()).unwrap();
            let (b, _) = circular_chromatic_number(&h, &Budget::unlimited()).unwrap();
            prop_assert_eq!(a, b);
        }
        let mut moved = vec![0; g.vertex_count()];
        for v in g.vertices() {
            moved[perm[v]] = f.color(v);
        }
        let fh = KColoring::new(f.k(), moved).unwrap();
        let (rg, rh) = (verify_rainbow(&g, &f).unwrap(), verify_rainbow(&h, &fh).unwrap());
        for v in g.vertices() {
            prop_assert_eq!(rg.begins[v], rh.begins[perm[v]]);
            prop_assert_eq!(rg.lies_on[v], rh.lies_on[perm[v]]);
        }
    }

    #[test]
    fn invariant_under_color_permutation((g, f) in colored(8), seed in any::<u64>()) {
        let perm: Vec<usize> = permutation(f.k(), seed).into_iter().map(|c| c + 1).collect();
        let pf = f.permuted(&perm);
        let (a, b) = (verify_rainbow(&g, &f).unwrap(), verify_rainbow(&g, &pf).unwrap());
        prop_assert_eq!(a.begins, b.begins);
        prop_assert_eq!(a.lies_on, b.lies_on);
    }
}
