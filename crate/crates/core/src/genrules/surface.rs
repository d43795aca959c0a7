use std::sync::OnceLock;

use rand::seq::IndexedRandom;
use regex::Regex;
use serde::{Deserialize, Serialize};

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta};
use crate::text::{char_slice, collapse_spaces, find_word_ci, match_initial_case, splice_bytes, splice_chars};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PunctuationStrategy {
    DeleteAll,
    DeleteQuotes,
    DeleteCommas,
    ExclaimToQuestion,
}

const QUOTES: &[char] = &['"', '\'', '«', '»', '„', '“', '”', '‚', '‘', '’'];

impl PunctuationStrategy {
    fn phenomenon(self) -> &'static str {
        match self {
            PunctuationStrategy::DeleteAll => "punctuation:deletion_all",
            PunctuationStrategy::DeleteQuotes => "punctuation:deletion_quotes",
            PunctuationStrategy::DeleteCommas => "punctuation:deletion_commas",
            PunctuationStrategy::ExclaimToQuestion => "punctuation:statement-to-question",
        }
    }
}

fn punct_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"\p{P}").expect("static regex"))
}

fn applicable(text: &str, s: PunctuationStrategy) -> bool {
    match s {
        PunctuationStrategy::DeleteAll => punct_re().is_match(text),
        PunctuationStrategy::DeleteQuotes => text.contains(QUOTES),
        PunctuationStrategy::DeleteCommas => text.contains(','),
        PunctuationStrategy::ExclaimToQuestion => text.contains('!'),
    }
}

/// The raw transform, applied unconditionally, with whitespace runs collapsed.
pub fn apply_punctuation(text: &str, s: PunctuationStrategy) -> String {
    let out = match s {
        PunctuationStrategy::DeleteAll => punct_re().replace_all(text, "").into_owned(),
        PunctuationStrategy::DeleteQuotes => text.replace(QUOTES, ""),
        PunctuationStrategy::DeleteCommas => text.replace(',', ""),
        PunctuationStrategy::ExclaimToQuestion => text.replace('!', "?"),
    };
    collapse_spaces(&out)
}

pub fn gen_punctuation(meta: &Meta, good: &str, reference: &str, strategy: PunctuationStrategy) -> GenOutcome {
    let mut out = GenOutcome::default();
    if !applicable(good, strategy) {
        out.skip(reason::NOT_APPLICABLE, 1);
        return out;
    }
    out.push(
        meta,
        Draft {
            id: format!("{}:{}", meta.id, strategy.phenomenon()),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.to_string(),
            good: good.to_string(),
            incorrect: apply_punctuation(good, strategy),
            phenomenon: strategy.phenomenon().into(),
            recipe: format!("punctuation {strategy:?}").to_lowercase(),
        },
        &[],
    );
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PronounStrategy {
    Omission,
    Substitution,
}

/// Deletes or swaps the pronoun at `span` (character offsets into `translation`).
/// `category` is the pronoun class, e.g. `pleonastic_it` or `anaphoric_intra_they`.
#[allow(clippy::too_many_arguments)]
pub fn gen_pronoun_error(
    meta: &Meta,
    translation: &str,
    reference: &str,
    span: (usize, usize),
    correct_form: &str,
    category: &str,
    strategy: PronounStrategy,
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let found = char_slice(translation, span.0, span.1);
    let Some(found) = found.filter(|f| f.to_lowercase() == correct_form.to_lowercase()) else {
        out.skip(reason::SPAN_MISMATCH, 1);
        return out;
    };
    let (incorrect, phenomenon) = match strategy {
        PronounStrategy::Omission => {
            let s = splice_chars(translation, span.0, span.1, "").expect("span checked");
            (collapse_spaces(&s), format!("{category}:deletion"))
        }
        PronounStrategy::Substitution => {
            let set = cfg
                .pronoun_confusion_sets
                .get(&correct_form.to_lowercase())
                .map(Vec::as_slice)
                .unwrap_or_default();
            let Some(pick) = set.choose(&mut meta.rng(cfg, "pronoun")) else {
                out.skip(reason::EMPTY_CONFUSION_SET, 1);
                return out;
            };
            let s = splice_chars(translation, span.0, span.1, &match_initial_case(pick, found)).expect("span checked");
            let name = if category == "pleonastic_it" {
                "pleonastic_it:substitution_pro_trans_different_to_ref".to_string()
            } else {
                format!("{category}:substitution")
            };
            (s, name)
        }
    };
    out.push(
        meta,
        Draft {
            id: format!("{}:{phenomenon}", meta.id),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.to_string(),
            good: translation.to_string(),
            incorrect,
            recipe: format!("pronoun {strategy:?} `{found}`").to_lowercase(),
            phenomenon,
        },
        &[],
    );
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connective {
    Since,
    While,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnectiveSense {
    Causal,
    Temporal,
    Contrast,
}

impl Connective {
    fn as_str(self) -> &'static str {
        match self {
            Connective::Since => "since",
            Connective::While => "while",
        }
    }
}

impl ConnectiveSense {
    fn as_str(self) -> &'static str {
        match self {
            ConnectiveSense::Causal => "causal",
            ConnectiveSense::Temporal => "temporal",
            ConnectiveSense::Contrast => "contrast",
        }
    }
}

/// Replaces the ambiguous connective in `text` with the sense-matching substitute (good)
/// and with the other sense's substitute (incorrect).
pub fn gen_connective(
    meta: &Meta,
    text: &str,
    reference: &str,
    sense: ConnectiveSense,
    connective: Connective,
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let rules = cfg.connective_rules.get(connective.as_str());
    let good_sub = rules.and_then(|r| r.get(sense.as_str()));
    let other_sub = rules.and_then(|r| r.iter().find(|(k, _)| *k != sense.as_str()).map(|(_, v)| v));
    let (Some(good_sub), Some(other_sub)) = (good_sub, other_sub) else {
        out.skip(reason::SENSE_NOT_CONFIGURED, 1);
        return out;
    };
    let Some(&(s, e)) = find_word_ci(text, connective.as_str()).first() else {
        out.skip(reason::NO_CONNECTIVE, 1);
        return out;
    };
    let found = &text[s..e];
    let phenomenon = format!(
        "ambiguous-translation-wrong-discourse-connective-{}-{}",
        connective.as_str(),
        sense.as_str()
    );
    out.push(
        meta,
        Draft {
            id: format!("{}:connective-{}-{}", meta.id, connective.as_str(), sense.as_str()),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.to_string(),
            good: splice_bytes(text, s, e, &match_initial_case(good_sub, found)),
            incorrect: splice_bytes(text, s, e, &match_initial_case(other_sub, found)),
            phenomenon,
            recipe: "connective".into(),
        },
        &[],
    );
    out
}
