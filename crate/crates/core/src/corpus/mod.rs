//! Challenge-set data model, file formats, validation and stratified subsampling.

mod annotated;
mod io;
mod subsample;
pub mod taxonomy;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use annotated::{AnnotatedSegment, EntitySpan, LabeledSpan, PartialVariant, Subword};
pub use io::{
    load_annotated, load_challenge_set, parse_annotated_jsonl, parse_challenge_set, render_challenge_set,
    save_challenge_set, write_atomic, Format,
};
pub use subsample::{largest_remainder, subsample_phenomenon};
pub use taxonomy::{Category, Subcategory, Taxonomy};

/// Flag set on generated examples whose good translation scores below the BLEU review threshold.
pub const NEEDS_MANUAL_REVIEW: &str = "needs_manual_review";

/// One contrastive item: a source, a reference, and a good/incorrect translation pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChallengeExample {
    pub id: String,
    pub source: String,
    pub reference: String,
    pub good_translation: String,
    pub incorrect_translation: String,
    pub phenomenon: String,
    pub langpair: String,
    #[serde(default)]
    pub flags: BTreeSet<String>,
    #[serde(default)]
    pub provenance: String,
}

impl ChallengeExample {
    pub fn source_lang(&self) -> Option<&str> {
        split_langpair(&self.langpair).map(|(s, _)| s)
    }

    pub fn target_lang(&self) -> Option<&str> {
        split_langpair(&self.langpair).map(|(_, t)| t)
    }
}

/// Splits `src-tgt` into its two ISO-639-1 codes, or `None` when malformed.
pub fn split_langpair(langpair: &str) -> Option<(&str, &str)> {
    let (src, tgt) = langpair.split_once('-')?;
    let is_code = |s: &str| s.len() == 2 && s.bytes().all(|b| b.is_ascii_lowercase());
    (is_code(src) && is_code(tgt)).then_some((src, tgt))
}

/// Phenomena whose examples may legitimately pair a language with itself.
fn allows_same_language(phenomenon: &str) -> bool {
    phenomenon == "copy-source"
}

/// Lists every broken invariant of `example`; empty means valid. Never mutates.
pub fn validate(example: &ChallengeExample, taxonomy: &Taxonomy) -> Vec<String> {
    let mut violations = Vec::new();
    let text_fields = [
        ("source", &example.source),
        ("reference", &example.reference),
        ("good_translation", &example.good_translation),
        ("incorrect_translation", &example.incorrect_translation),
    ];
    for (name, value) in text_fields {
        if value.trim().is_empty() {
            violations.push(format!("empty field: {name}"));
        }
    }
    if example.id.trim().is_empty() {
        violations.push("empty field: id".to_string());
    }
    if example.good_translation == example.incorrect_translation {
        violations.push("good_translation equals incorrect_translation".to_string());
    }
    if !taxonomy.contains(&example.phenomenon) {
        violations.push("unknown phenomenon".to_string());
    }
    match split_langpair(&example.langpair) {
        None => violations.push(format!("malformed langpair `{}`", example.langpair)),
        Some((src, tgt)) if src == tgt && !allows_same_language(&example.phenomenon) => {
            violations.push(format!("langpair `{}` has identical languages", example.langpair))
        }
        Some(_) => {}
    }
    violations
}

#[cfg(test)]
pub(crate) fn sample_example(id: &str) -> ChallengeExample {
    ChallengeExample {
        id: id.to_string(),
        source: "Es regnet.".to_string(),
        reference: "It is raining.".to_string(),
        good_translation: "It's raining.".to_string(),
        incorrect_translation: "It is snowing.".to_string(),
        phenomenon: "hallucination-date-time".to_string(),
        langpair: "de-en".to_string(),
        flags: BTreeSet::new(),
        provenance: "test".to_string(),
    }
}
