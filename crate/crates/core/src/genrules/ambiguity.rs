use regex::Regex;
use serde::{Deserialize, Serialize};

use super::{reason, Draft, GenOutcome, Meta};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Female,
    Male,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stereotype {
    Pro,
    Anti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SenseFrequency {
    Frequent,
    Infrequent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AmbiguityInput {
    /// A gender-marked source, an ambiguous reference and its two cue-disambiguated variants.
    OccupationGender {
        gendered_src: String,
        ambiguous_ref: String,
        female_variant: String,
        male_variant: String,
        true_gender: Gender,
        stereotype: Stereotype,
    },
    /// An unambiguous source word and two sense cues for its ambiguous English translation.
    WsdTemplate {
        unambiguous_src: String,
        ambiguous_word: String,
        correct_cue: String,
        wrong_cue: String,
        sense_frequency: SenseFrequency,
    },
}

fn what_does(x: &str) -> String {
    format!("What does \"{x}\" mean?")
}

pub fn gen_ambiguity_assembly(meta: &Meta, input: &AmbiguityInput) -> GenOutcome {
    let mut out = GenOutcome::default();
    let draft = match input {
        AmbiguityInput::OccupationGender {
            gendered_src,
            ambiguous_ref,
            female_variant,
            male_variant,
            true_gender,
            stereotype,
        } => {
            if female_variant == male_variant {
                out.skip(reason::VARIANTS_EQUAL, 1);
                return out;
            }
            let (good, incorrect, g) = match true_gender {
                Gender::Female => (female_variant, male_variant, "female"),
                Gender::Male => (male_variant, female_variant, "male"),
            };
            let s = match stereotype {
                Stereotype::Pro => "pro",
                Stereotype::Anti => "anti",
            };
            Draft {
                id: format!("{}:gender", meta.id),
                langpair: meta.langpair.clone(),
                source: gendered_src.clone(),
                reference: ambiguous_ref.clone(),
                good: good.clone(),
                incorrect: incorrect.clone(),
                phenomenon: format!("ambiguous-translation-wrong-gender-{g}-{s}"),
                recipe: "occupation-gender".into(),
            }
        }
        AmbiguityInput::WsdTemplate {
            unambiguous_src,
            ambiguous_word,
            correct_cue,
            wrong_cue,
            sense_frequency,
        } => {
            if correct_cue == wrong_cue {
                out.skip(reason::VARIANTS_EQUAL, 1);
                return out;
            }
            let f = match sense_frequency {
                SenseFrequency::Frequent => "frequent",
                SenseFrequency::Infrequent => "infrequent",
            };
            Draft {
                id: format!("{}:wsd", meta.id),
                langpair: meta.langpair.clone(),
                source: unambiguous_src.clone(),
                reference: what_does(ambiguous_word),
                good: what_does(&format!("{correct_cue} {ambiguous_word}")),
                incorrect: what_does(&format!("{wrong_cue} {ambiguous_word}")),
                phenomenon: format!("ambiguous-translation-wrong-sense-{f}"),
                recipe: "wsd-template".into(),
            }
        }
    };
    out.push(meta, draft, &[]);
    out
}

const FINAL_PUNCT: &[char] = &['.', '!', '?', '。', '！', '？', '…'];

/// Removes a trailing explanatory clause: the first pattern whose match reaches the end
/// of the sentence body (final punctuation excluded) cuts the body at the match start.
/// The final punctuation is then re-attached. `None` when no pattern applies.
pub fn strip_clause(text: &str, patterns: &[Regex]) -> Option<String> {
    let body = text.trim_end().trim_end_matches(FINAL_PUNCT);
    let punct = &text.trim_end()[body.len()..];
    for p in patterns {
        if let Some(m) = p.find_iter(body).find(|m| m.end() == body.len() && m.start() > 0) {
            let kept = body[..m.start()].trim_end();
            if kept.is_empty() {
                continue;
            }
            return Some(format!("{kept}{punct}"));
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommonsenseVariant {
    BothAmbiguous,
    OnlyRefAmbiguous,
}

#[allow(clippy::too_many_arguments)]
pub fn gen_commonsense_variants(
    meta: &Meta,
    source: &str,
    reference: &str,
    good_full: &str,
    incorrect_full: &str,
    patterns: &[Regex],
    variant: CommonsenseVariant,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let Some(short_ref) = strip_clause(reference, patterns) else {
        out.skip(reason::CLAUSE_UNMATCHED, 1);
        return out;
    };
    let (src, phenomenon) = match variant {
        CommonsenseVariant::OnlyRefAmbiguous => (source.to_string(), "commonsense-only-ref-ambiguous"),
        CommonsenseVariant::BothAmbiguous => match strip_clause(source, patterns) {
            Some(s) => (s, "commonsense-src-and-ref-ambiguous"),
            None => {
                out.skip(reason::CLAUSE_UNMATCHED, 1);
                return out;
            }
        },
    };
    out.push(
        meta,
        Draft {
            id: format!("{}:{phenomenon}", meta.id),
            langpair: meta.langpair.clone(),
            source: src,
            reference: short_ref,
            good: good_full.to_string(),
            incorrect: incorrect_full.to_string(),
            phenomenon: phenomenon.into(),
            recipe: "commonsense clause strip".into(),
        },
        &[],
    );
    out
}
