#![no_main]

use libfuzzer_sys::fuzz_target;
use rainbow_core::graph::edge_list::{parse_edge_list, parse_orientation, write_orientation};

// Input: an edge list, a NUL byte, then the arc list.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((graph, arcs)) = text.split_once('\0') else { return };
    let Ok(g) = parse_edge_list(graph) else { return };
    if let Ok(d) = parse_orientation(&g, arcs) {
        assert_eq!(d.arcs().len(), g.edge_count());
        assert_eq!(parse_orientation(&g, &write_orientation(&d)).unwrap(), d);
    }
});
