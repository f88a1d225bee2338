#![no_main]

use libfuzzer_sys::fuzz_target;
use rainbow_core::graph::dimacs::{parse_dimacs, write_dimacs};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_dimacs(text) {
        // the canonical form must parse back to the same graph
        let canonical = write_dimacs(&g);
        assert_eq!(parse_dimacs(&canonical).unwrap(), g);
    }
});
