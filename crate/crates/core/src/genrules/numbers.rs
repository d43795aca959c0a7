use std::ops::Range;
use std::sync::OnceLock;

use rand::seq::IndexedRandom;
use rand::Rng as _;
use regex::Regex;

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta};
use crate::corpus::AnnotatedSegment;
use crate::rng::Rng;
use crate::text::{byte_offset, match_initial_case};
use crate::textsim::edit_distance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Number,
    NamedEntity,
}

impl Target {
    fn slug(self) -> &'static str {
        match self {
            Target::Number => "number",
            Target::NamedEntity => "named-entity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Edit {
    Char,
    Word,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharEdit {
    Insert,
    Delete,
    Substitute,
}

const CHAR_EDITS: [CharEdit; 3] = [CharEdit::Insert, CharEdit::Delete, CharEdit::Substitute];

fn number_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"\d+(?:[.,]\d+)*").expect("static regex"))
}

/// Byte ranges of the perturbable targets in `seg`.
fn targets(seg: &AnnotatedSegment, target: Target) -> Vec<Range<usize>> {
    let text = &seg.text;
    match target {
        Target::Number => number_re()
            .find_iter(text)
            .filter(|m| {
                let before = text[..m.start()].chars().next_back();
                let after = text[m.end()..].chars().next();
                !before.is_some_and(char::is_alphanumeric) && !after.is_some_and(char::is_alphanumeric)
            })
            .map(|m| m.range())
            .collect(),
        Target::NamedEntity => seg
            .person_entities()
            .filter_map(|e| Some(byte_offset(text, e.span.0)?..byte_offset(text, e.span.1)?))
            .collect(),
    }
}

fn random_digit(rng: &mut Rng, nonzero: bool, not: Option<char>) -> char {
    loop {
        let d = char::from(b'0' + rng.random_range(if nonzero { 1 } else { 0 }..10u8));
        if Some(d) != not {
            return d;
        }
    }
}

/// One digit-level edit; separators are never touched and no leading zero is introduced.
pub fn perturb_number_chars(token: &str, op: CharEdit, rng: &mut Rng) -> String {
    let chars: Vec<char> = token.chars().collect();
    let digits: Vec<usize> = (0..chars.len()).filter(|&i| chars[i].is_ascii_digit()).collect();
    let op = if op == CharEdit::Delete && digits.len() < 2 {
        CharEdit::Substitute
    } else {
        op
    };
    let mut out = chars.clone();
    match op {
        CharEdit::Substitute => {
            let p = *digits.choose(rng).expect("numbers have digits");
            out[p] = random_digit(rng, p == digits[0] && chars[p] != '0', Some(chars[p]));
        }
        CharEdit::Insert => {
            let k = rng.random_range(0..=digits.len());
            let at = if k == digits.len() {
                digits[k - 1] + 1
            } else {
                digits[k]
            };
            out.insert(at, random_digit(rng, k == 0, None));
        }
        CharEdit::Delete => {
            let ok: Vec<usize> = digits
                .iter()
                .copied()
                .filter(|&p| !(p == digits[0] && chars[digits[1]] == '0'))
                .collect();
            let p = *ok.choose(rng).unwrap_or(&digits[digits.len() - 1]);
            out.remove(p);
        }
    }
    out.into_iter().collect()
}

/// A different number with the same digit count and separators.
pub fn perturb_number_word(token: &str, rng: &mut Rng) -> String {
    let lead_zero = token.starts_with('0');
    loop {
        let mut first = true;
        let s: String = token
            .chars()
            .map(|c| {
                if c.is_ascii_digit() {
                    let d = random_digit(rng, first && !lead_zero, None);
                    first = false;
                    d
                } else {
                    c
                }
            })
            .collect();
        if s != token {
            return s;
        }
    }
}

/// One letter-level edit that leaves the first character (and its case) alone.
pub fn perturb_name_chars(name: &str, op: CharEdit, rng: &mut Rng) -> String {
    let chars: Vec<char> = name.chars().collect();
    let letters: Vec<usize> = (0..chars.len()).filter(|&i| chars[i].is_alphabetic()).collect();
    let editable: Vec<usize> = letters.iter().copied().filter(|&i| i > 0).collect();
    let editable = if editable.is_empty() { letters.clone() } else { editable };
    let alphabet: Vec<char> = {
        let mut own: Vec<char> = chars.iter().filter(|c| c.is_lowercase()).copied().collect();
        own.sort_unstable();
        own.dedup();
        if chars.iter().all(char::is_ascii) || own.len() < 2 {
            ('a'..='z').collect()
        } else {
            own
        }
    };
    let op = if op == CharEdit::Delete && letters.len() < 2 {
        CharEdit::Substitute
    } else {
        op
    };
    let mut out = chars.clone();
    match op {
        CharEdit::Substitute => {
            let p = *editable.choose(rng).expect("names have letters");
            let pool: Vec<char> = alphabet.iter().copied().filter(|&c| c != chars[p]).collect();
            out[p] = *pool.choose(rng).expect("alphabet has two letters");
        }
        CharEdit::Insert => {
            let at = rng.random_range(1..=chars.len());
            out.insert(at, *alphabet.choose(rng).expect("non-empty alphabet"));
        }
        CharEdit::Delete => {
            out.remove(*editable.choose(rng).expect("editable letter"));
        }
    }
    out.into_iter().collect()
}

fn perturb(
    seg: &AnnotatedSegment,
    target: Target,
    edit: Edit,
    name_pool: &[String],
    rng: &mut Rng,
) -> Option<(String, String)> {
    let spans = targets(seg, target);
    let span = spans.choose(rng)?.clone();
    let original = &seg.text[span.clone()];
    let replacement = match (target, edit) {
        (Target::Number, Edit::Word) => perturb_number_word(original, rng),
        (Target::NamedEntity, Edit::Word) => {
            let pool: Vec<&String> = name_pool
                .iter()
                .filter(|n| n.to_lowercase() != original.to_lowercase())
                .collect();
            match_initial_case(pool.choose(rng)?, original)
        }
        (t, Edit::Char) => {
            let op = *CHAR_EDITS.choose(rng).expect("non-empty");
            if t == Target::Number {
                perturb_number_chars(original, op, rng)
            } else {
                perturb_name_chars(original, op, rng)
            }
        }
    };
    let mut text = seg.text.clone();
    text.replace_range(span, &replacement);
    Some((text, format!("{original} -> {replacement}")))
}

#[allow(clippy::too_many_arguments)]
pub fn gen_number_ne(
    meta: &Meta,
    reference: &AnnotatedSegment,
    alternatives: &[AnnotatedSegment],
    target: Target,
    level: u8,
    edit: Edit,
    name_pool: &[String],
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    if target == Target::NamedEntity && edit == Edit::Word && name_pool.is_empty() {
        out.skip(reason::NO_NAME_POOL, 1);
        return out;
    }
    let needed = if level == 1 { 1 } else { 2 };
    if alternatives.len() < needed || !(1..=3).contains(&level) {
        out.skip(reason::NO_ALTERNATIVES, 1);
        return out;
    }
    let (good, perturbed) = if level == 1 {
        match alternatives.iter().find(|a| !targets(a, target).is_empty()) {
            Some(a) => (a, a),
            None => {
                out.skip(reason::NO_TARGET, 1);
                return out;
            }
        }
    } else {
        let dist: Vec<usize> = alternatives
            .iter()
            .map(|a| edit_distance(&a.text, &reference.text))
            .collect();
        let pick = if level == 2 {
            (0..dist.len()).min_by_key(|&i| (dist[i], i))
        } else {
            (0..dist.len()).max_by_key(|&i| (dist[i], std::cmp::Reverse(i)))
        };
        (&alternatives[pick.expect("at least two alternatives")], reference)
    };
    let phenomenon = format!("hallucination-{}-level-{level}", target.slug());
    let mut rng = meta.rng(cfg, &phenomenon);
    let Some((incorrect, change)) = perturb(perturbed, target, edit, name_pool, &mut rng) else {
        out.skip(reason::NO_TARGET, 1);
        return out;
    };
    out.push(
        meta,
        Draft {
            id: format!("{}:{}-level-{level}", meta.id, target.slug()),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.text.clone(),
            good: good.text.clone(),
            incorrect,
            phenomenon,
            recipe: format!("number-ne {edit:?} edit {change}").to_lowercase(),
        },
        &[],
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::EntitySpan;
    use crate::rng::rng_for;
    use proptest::prelude::*;

    fn person(text: &str, name: &str) -> AnnotatedSegment {
        let start = text.find(name).unwrap();
        let s = text[..start].chars().count();
        AnnotatedSegment {
            text: text.into(),
            entities: vec![EntitySpan {
                span: (s, s + name.chars().count()),
                kind: "person".into(),
            }],
            ..Default::default()
        }
    }

    #[test]
    fn madonna_word_edit_all_levels() {
        let cfg = GeneratorConfig::default();
        let reference = person("Madonna released her first album in 1983.", "Madonna");
        let alts = vec![
            person("In 1983 Madonna released her debut album.", "Madonna"),
            person("Madonna released her first record in 1983.", "Madonna"),
            person("Her very first studio album came out in 1983, by Madonna.", "Madonna"),
        ];
        let meta = Meta::new("m1", "de-en", "Madonna veröffentlichte 1983 ihr erstes Album.");
        for level in 1..=3 {
            let out = gen_number_ne(
                &meta,
                &reference,
                &alts,
                Target::NamedEntity,
                level,
                Edit::Word,
                &cfg.name_pool,
                &cfg,
            );
            let ex = &out.examples[0];
            assert!(
                cfg.name_pool
                    .iter()
                    .any(|n| ex.incorrect_translation.contains(n.as_str())),
                "{level}"
            );
            assert!(!ex.incorrect_translation.contains("Madonna"));
            if level > 1 {
                assert!(ex.incorrect_translation.ends_with("released her first album in 1983."));
            }
        }
    }

    #[test]
    fn level_two_and_three_rank_by_levenshtein() {
        let cfg = GeneratorConfig::default();
        let reference = AnnotatedSegment::plain("The bridge opened in 1932.");
        let alts: Vec<AnnotatedSegment> = [
            "In 1932 the bridge was opened to traffic.",
            "The bridge was opened in 1932.",
            "It was in the year 1932 that the bridge first opened.",
        ]
        .iter()
        .map(|t| AnnotatedSegment::plain(*t))
        .collect();
        let meta = Meta::new("b1", "de-en", "Die Brücke wurde 1932 eröffnet.");
        let d: Vec<usize> = alts.iter().map(|a| edit_distance(&a.text, &reference.text)).collect();
        let (mut lo, mut hi) = (0, 0);
        for i in 0..d.len() {
            if d[i] < d[lo] {
                lo = i;
            }
            if d[i] > d[hi] {
                hi = i;
            }
        }
        let l2 = gen_number_ne(&meta, &reference, &alts, Target::Number, 2, Edit::Char, &[], &cfg);
        let l3 = gen_number_ne(&meta, &reference, &alts, Target::Number, 3, Edit::Char, &[], &cfg);
        assert_eq!(l2.examples[0].good_translation, alts[lo].text);
        assert_eq!(l3.examples[0].good_translation, alts[hi].text);
    }

    #[test]
    fn substitute_keeps_four_digits() {
        for seed in 0..50 {
            let s = perturb_number_chars("1932", CharEdit::Substitute, &mut rng_for(seed, "t"));
            assert_eq!(s.len(), 4);
            assert!(s.chars().all(|c| c.is_ascii_digit()) && s != "1932" && !s.starts_with('0'));
        }
    }

    #[test]
    fn skips() {
        let cfg = GeneratorConfig::default();
        let meta = Meta::new("n", "de-en", "x");
        let plain = AnnotatedSegment::plain("No digits here.");
        let out = gen_number_ne(
            &meta,
            &plain,
            std::slice::from_ref(&plain),
            Target::Number,
            1,
            Edit::Char,
            &[],
            &cfg,
        );
        assert_eq!(out.skipped[reason::NO_TARGET], 1);
        let out = gen_number_ne(
            &meta,
            &plain,
            std::slice::from_ref(&plain),
            Target::Number,
            2,
            Edit::Char,
            &[],
            &cfg,
        );
        assert_eq!(out.skipped[reason::NO_ALTERNATIVES], 1);
    }

    proptest! {
        #[test]
        fn number_edits_always_change_token(n in "[1-9][0-9]{0,2}(,[0-9]{3}){0,2}", seed in any::<u64>(), op in 0usize..3) {
            let mut rng = rng_for(seed, "p");
            let c = perturb_number_chars(&n, CHAR_EDITS[op], &mut rng);
            prop_assert_ne!(&c, &n);
            prop_assert!(!c.starts_with('0') || c.len() == 1);
            let w = perturb_number_word(&n, &mut rng);
            prop_assert_ne!(&w, &n);
            prop_assert_eq!(w.len(), n.len());
            prop_assert_eq!(w.replace(|c: char| c.is_ascii_digit(), "d"), n.replace(|c: char| c.is_ascii_digit(), "d"));
        }

        #[test]
        fn name_edits_change_and_keep_initial(name in "[A-Z][a-z]{1,8}", seed in any::<u64>(), op in 0usize..3) {
            let c = perturb_name_chars(&name, CHAR_EDITS[op], &mut rng_for(seed, "p"));
            prop_assert_ne!(&c, &name);
            prop_assert_eq!(c.chars().next(), name.chars().next());
        }
    }
}
