#![no_main]

use acesforge_core::genrules::GeneratorConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(cfg) = GeneratorConfig::from_toml(text) {
            let _ = cfg.compiled_clause_patterns();
        }
    }
});
