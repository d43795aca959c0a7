#![no_main]

use acesforge_core::genrules::Lexicon;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = Lexicon::parse_tsv(text);
    }
});
