#![no_main]

use acesforge_core::evalharness::parse_category_taus;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_category_taus(text);
    }
});
