#![no_main]

use acesforge_core::evalharness::{parse_scores, render_scores};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(table) = parse_scores(text, "m") {
        let again = render_scores(&table, None);
        assert_eq!(parse_scores(&again, "m").expect("rendered scores parse"), table);
    }
});
