#![no_main]

use libfuzzer_sys::fuzz_target;
use rainbow_core::coloring::io::{parse_coloring, write_coloring};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for k in [None, Some(3)] {
        if let Ok(f) = parse_coloring(text, k) {
            assert_eq!(parse_coloring(&write_coloring(&f), Some(f.k())).unwrap(), f);
        }
    }
});
