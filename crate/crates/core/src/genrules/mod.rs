//! Seeded generators, one per automatically constructed phenomenon family.
//!
//! Every generator is pure text algebra over its inputs, a [`GeneratorConfig`] and the
//! seed; ML-dependent inputs (translations, parses, entities, subwords) arrive as data.

mod addomit;
mod ambiguity;
mod config;
mod dates;
pub mod driver;
mod lexicon;
mod nonsense;
mod numbers;
mod paraphrase;
mod surface;
pub mod units;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::corpus::{validate, ChallengeExample, Taxonomy};
use crate::rng::{rng_for, Rng};

pub use addomit::{deleted_chunks, gen_addition_omission};
pub use ambiguity::{
    gen_ambiguity_assembly, gen_commonsense_variants, strip_clause, AmbiguityInput, CommonsenseVariant, Gender,
    SenseFrequency, Stereotype,
};
pub use config::{GeneratorConfig, LanguageTriple, Resource, UnitConversion, UnitDef, DEFAULT_CONFIG_TOML};
pub use dates::gen_date_time;
pub use lexicon::{gen_taxonomic_substitution, Lexicon, Relation, TaxonomicMode, DEFAULT_LEXICON_TSV};
pub use nonsense::gen_nonsense;
pub use numbers::{
    gen_number_ne, perturb_name_chars, perturb_number_chars, perturb_number_word, CharEdit, Edit, Target,
};
pub use paraphrase::{gen_copy_source, gen_lexical_overlap, gen_wrong_language, gen_xnli_meaning, XnliLabel};
pub use surface::{
    apply_punctuation, gen_connective, gen_pronoun_error, gen_punctuation, Connective, ConnectiveSense,
    PronounStrategy, PunctuationStrategy,
};

/// Per-input context shared by all generators.
#[derive(Debug, Clone, Default)]
pub struct Meta {
    /// Stable input id; emitted example ids extend it and RNG streams are keyed by it.
    pub id: String,
    pub langpair: String,
    pub source: String,
    /// Run-level provenance (seed, config hash) appended to each example's provenance.
    pub provenance: String,
}

impl Meta {
    pub fn new(id: impl Into<String>, langpair: impl Into<String>, source: impl Into<String>) -> Self {
        Meta {
            id: id.into(),
            langpair: langpair.into(),
            source: source.into(),
            provenance: String::new(),
        }
    }

    pub(crate) fn rng(&self, cfg: &GeneratorConfig, stream: &str) -> Rng {
        rng_for(cfg.seed, &format!("{}\u{1f}{stream}", self.id))
    }

    pub(crate) fn target_lang(&self) -> &str {
        self.langpair.split_once('-').map_or("", |(_, t)| t)
    }
}

/// Draft of one example before the generic post-checks.
pub(crate) struct Draft {
    pub id: String,
    pub langpair: String,
    pub source: String,
    pub reference: String,
    pub good: String,
    pub incorrect: String,
    pub phenomenon: String,
    pub recipe: String,
}

/// Emitted examples plus a histogram of candidate examples that were not produced.
///
/// Counts are in candidate slots: a recipe that can yield two examples per input and
/// skips the input entirely records two skips. Thus `attempted == emitted + skipped`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct GenOutcome {
    pub examples: Vec<ChallengeExample>,
    pub skipped: BTreeMap<String, usize>,
    pub attempted: usize,
}

pub(crate) mod reason {
    pub const NO_TRANSLATION: &str = "no translation";
    pub const NOT_A_DELETION: &str = "partial translation is not a deletion of the full translation";
    pub const NO_DELETED_SPAN: &str = "partial translation equals full translation";
    pub const SPAN_NOT_IN_REFERENCE: &str = "deleted span not in reference";
    pub const NO_MONTH_TABLE: &str = "no month table";
    pub const NO_MONTH: &str = "no month";
    pub const MONTH_NOT_IN_REFERENCE: &str = "month not in reference";
    pub const NOT_ENGLISH: &str = "target language is not English";
    pub const NO_UNIT: &str = "no unit mention";
    pub const UNITS_DIFFER: &str = "unit mentions differ from reference";
    pub const NO_CONVERSION: &str = "no convertible unit";
    pub const NO_ALTERNATIVES: &str = "too few alternatives";
    pub const NO_TARGET: &str = "no number or person entity";
    pub const NO_NAME_POOL: &str = "empty name pool";
    pub const NO_MULTI_PIECE: &str = "no multi-piece token";
    pub const BAD_SUBWORDS: &str = "subwords do not match text";
    pub const NO_VOCAB_PIECE: &str = "no replacement piece";
    pub const NOT_ADVERSARIAL: &str = "paraphrase pair not adversarial";
    pub const MISSING_SOURCE_LANG: &str = "missing source language";
    pub const ENTAILMENT: &str = "entailment label";
    pub const CHRF_BELOW: &str = "chrF below threshold";
    pub const NO_ELIGIBLE_NOUN: &str = "no eligible noun";
    pub const NO_GOOD_ALT: &str = "no good alternative";
    pub const NOT_APPLICABLE: &str = "strategy not applicable";
    pub const SPAN_MISMATCH: &str = "pronoun span does not cover correct form";
    pub const EMPTY_CONFUSION_SET: &str = "empty confusion set";
    pub const NO_CONNECTIVE: &str = "connective absent";
    pub const SENSE_NOT_CONFIGURED: &str = "sense not configured";
    pub const VARIANTS_EQUAL: &str = "variants equal";
    pub const CLAUSE_UNMATCHED: &str = "clause pattern unmatched";
    pub const GOOD_EQUALS_INCORRECT: &str = "incorrect equals good";
    pub const INCORRECT_EQUALS_REFERENCE: &str = "incorrect equals reference";
    pub const INVALID: &str = "fails validation";
}

fn taxonomy() -> &'static Taxonomy {
    static T: OnceLock<Taxonomy> = OnceLock::new();
    T.get_or_init(Taxonomy::aces)
}

impl GenOutcome {
    pub fn skipped_total(&self) -> usize {
        self.skipped.values().sum()
    }

    pub fn is_conserved(&self) -> bool {
        self.attempted == self.examples.len() + self.skipped_total()
    }

    pub fn merge(&mut self, other: GenOutcome) {
        self.examples.extend(other.examples);
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_insert(0) += v;
        }
        self.attempted += other.attempted;
    }

    pub(crate) fn skip(&mut self, reason: &str, slots: usize) {
        self.attempted += slots;
        *self.skipped.entry(reason.to_string()).or_insert(0) += slots;
    }

    /// Applies the shared post-checks, then records one example (or one skip).
    pub(crate) fn push(&mut self, meta: &Meta, d: Draft, flags: &[&str]) {
        if d.incorrect == d.good {
            return self.skip(reason::GOOD_EQUALS_INCORRECT, 1);
        }
        if d.incorrect == d.reference {
            return self.skip(reason::INCORRECT_EQUALS_REFERENCE, 1);
        }
        let ex = build(meta, d, flags);
        if !validate(&ex, taxonomy()).is_empty() {
            return self.skip(reason::INVALID, 1);
        }
        self.attempted += 1;
        self.examples.push(ex);
    }

    /// Records an example without post-checks (copy-source keeps incorrect == source).
    pub(crate) fn push_unchecked(&mut self, meta: &Meta, d: Draft) {
        self.attempted += 1;
        self.examples.push(build(meta, d, &[]));
    }
}

fn build(meta: &Meta, d: Draft, flags: &[&str]) -> ChallengeExample {
    let provenance = if meta.provenance.is_empty() {
        d.recipe
    } else {
        format!("{}; {}", d.recipe, meta.provenance)
    };
    ChallengeExample {
        id: d.id,
        source: d.source,
        reference: d.reference,
        good_translation: d.good,
        incorrect_translation: d.incorrect,
        phenomenon: d.phenomenon,
        langpair: d.langpair,
        flags: flags.iter().map(|f| f.to_string()).collect(),
        provenance,
    }
}

/// Every phenomenon name any generator can emit.
pub fn generated_phenomena() -> Vec<String> {
    let mut out: Vec<String> = [
        "addition",
        "omission",
        "hallucination-date-time",
        "hallucination-unit-conversion-amount-matches-ref",
        "hallucination-unit-conversion-unit-matches-ref",
        "nonsense",
        "lexical-overlap",
        "copy-source",
        "similar-language-high",
        "similar-language-low",
        "overtranslation",
        "undertranslation",
        "real-world-knowledge-hypernym-vs-hyponym",
        "real-world-knowledge-hypernym-vs-distractor",
        "antonym-replacement",
        "punctuation:deletion_all",
        "punctuation:deletion_quotes",
        "punctuation:deletion_commas",
        "punctuation:statement-to-question",
        "commonsense-src-and-ref-ambiguous",
        "commonsense-only-ref-ambiguous",
        "ambiguous-translation-wrong-sense-frequent",
        "ambiguous-translation-wrong-sense-infrequent",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for t in ["number", "named-entity"] {
        for l in 1..=3 {
            out.push(format!("hallucination-{t}-level-{l}"));
        }
    }
    for a in ["addition", "omission"] {
        for l in ["contradiction", "neutral"] {
            out.push(format!("xnli-{a}-{l}"));
        }
    }
    for c in ["since-causal", "since-temporal", "while-contrast", "while-temporal"] {
        out.push(format!("ambiguous-translation-wrong-discourse-connective-{c}"));
    }
    for g in ["female", "male"] {
        for s in ["anti", "pro"] {
            out.push(format!("ambiguous-translation-wrong-gender-{g}-{s}"));
        }
    }
    for p in [
        "anaphoric_group_it-they",
        "anaphoric_intra_non-subject_it",
        "anaphoric_intra_subject_it",
        "anaphoric_intra_they",
        "anaphoric_singular_they",
    ] {
        out.push(format!("{p}:deletion"));
        out.push(format!("{p}:substitution"));
    }
    out.push("pleonastic_it:deletion".into());
    out.push("pleonastic_it:substitution_pro_trans_different_to_ref".into());
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_phenomena_are_taxonomy_leaves() {
        let tax = Taxonomy::aces();
        for p in generated_phenomena() {
            assert!(tax.contains(&p), "{p}");
        }
    }

    #[test]
    fn post_checks_count_as_skips() {
        let meta = Meta::new("x", "de-en", "Hallo");
        let mut out = GenOutcome::default();
        let draft = |good: &str, bad: &str| Draft {
            id: "x:1".into(),
            langpair: "de-en".into(),
            source: "Hallo".into(),
            reference: "Hello".into(),
            good: good.into(),
            incorrect: bad.into(),
            phenomenon: "nonsense".into(),
            recipe: "test".into(),
        };
        out.push(&meta, draft("Hi", "Hi"), &[]);
        out.push(&meta, draft("Hi", "Hello"), &[]);
        out.push(&meta, draft("Hi", "Hullo"), &[]);
        assert_eq!(out.examples.len(), 1);
        assert_eq!(out.skipped_total(), 2);
        assert!(out.is_conserved());
    }
}
