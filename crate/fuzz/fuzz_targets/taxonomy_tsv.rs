#![no_main]

use acesforge_core::corpus::Taxonomy;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(tax) = Taxonomy::parse_tsv(text) {
        assert_eq!(
            Taxonomy::parse_tsv(&tax.to_tsv()).expect("rendered taxonomy parses"),
            tax
        );
    }
});
