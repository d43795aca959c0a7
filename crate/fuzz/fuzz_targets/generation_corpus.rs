#![no_main]

use acesforge_core::genrules::driver::{parse_generation_corpus, run_record, Context};
use acesforge_core::genrules::{GeneratorConfig, Lexicon};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(records) = parse_generation_corpus(text) {
        let cfg = GeneratorConfig::default();
        let lexicon = Lexicon::bundled();
        let ctx = Context {
            cfg: &cfg,
            lexicon: &lexicon,
        };
        for rec in &records {
            if let Ok(out) = run_record(rec, &ctx, "fuzz") {
                assert!(out.is_conserved());
            }
        }
    }
});
