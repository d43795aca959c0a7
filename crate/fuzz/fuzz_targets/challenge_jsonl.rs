#![no_main]

use acesforge_core::corpus::{parse_challenge_set, render_challenge_set, Format, Taxonomy};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let tax = Taxonomy::aces();
    if let Ok(examples) = parse_challenge_set(text, Format::Jsonl, &tax) {
        let again = render_challenge_set(&examples, Format::Jsonl).expect("parsed examples render");
        assert_eq!(
            parse_challenge_set(&again, Format::Jsonl, &tax).expect("rendered output parses"),
            examples
        );
    }
});
