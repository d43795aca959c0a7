#![no_main]

use acesforge_core::corpus::parse_annotated_jsonl;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(segments) = parse_annotated_jsonl(text) {
            for s in &segments {
                let _ = s.subword_tokens();
            }
        }
    }
});
