#![no_main]

use acesforge_core::corpus::{parse_challenge_set, render_challenge_set, Format, Taxonomy};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let tax = Taxonomy::aces();
    if let Ok(examples) = parse_challenge_set(text, Format::Tsv, &tax) {
        if let Ok(again) = render_challenge_set(&examples, Format::Tsv) {
            assert_eq!(
                parse_challenge_set(&again, Format::Tsv, &tax).expect("rendered output parses"),
                examples
            );
        }
    }
});
