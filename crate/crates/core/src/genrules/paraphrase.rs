use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta, Resource};
use crate::error::{Error, Result};
use crate::textsim::chrf_with;

/// One example per listed source language, all sharing reference/good/incorrect.
#[allow(clippy::too_many_arguments)]
fn fan_out(
    out: &mut GenOutcome,
    meta: &Meta,
    sources: &BTreeMap<String, String>,
    langs: &[String],
    tgt_lang: &str,
    reference: &str,
    good: &str,
    incorrect: &str,
    phenomenon: &str,
    recipe: &str,
) {
    for lang in langs {
        let Some(source) = sources.get(lang) else {
            out.skip(reason::MISSING_SOURCE_LANG, 1);
            continue;
        };
        out.push(
            meta,
            Draft {
                id: format!("{}:{recipe}:{lang}", meta.id),
                langpair: format!("{lang}-{tgt_lang}"),
                source: source.clone(),
                reference: reference.to_string(),
                good: good.to_string(),
                incorrect: incorrect.to_string(),
                phenomenon: phenomenon.to_string(),
                recipe: recipe.to_string(),
            },
            &[],
        );
    }
}

/// Adversarial paraphrase pair: `p1` is the reference, `p2` (high overlap, different
/// meaning) the incorrect translation.
#[allow(clippy::too_many_arguments)]
pub fn gen_lexical_overlap(
    meta: &Meta,
    p1: &str,
    p2: &str,
    adversarial: bool,
    good_mt_of_p1: &str,
    sources: &BTreeMap<String, String>,
    langs: &[String],
    tgt_lang: &str,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    if !adversarial {
        out.skip(reason::NOT_ADVERSARIAL, langs.len().max(1));
        return out;
    }
    fan_out(
        &mut out,
        meta,
        sources,
        langs,
        tgt_lang,
        p1,
        good_mt_of_p1,
        p2,
        "lexical-overlap",
        "lexical-overlap",
    );
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum XnliLabel {
    Entailment,
    Contradiction,
    Neutral,
}

/// Premise/hypothesis pair with enough surface overlap but non-entailing meaning.
#[allow(clippy::too_many_arguments)]
pub fn gen_xnli_meaning(
    meta: &Meta,
    premise: &str,
    hypothesis: &str,
    label: XnliLabel,
    mt_of_ref: &str,
    sources: &BTreeMap<String, String>,
    langs: &[String],
    use_premise_as_ref: bool,
    tgt_lang: &str,
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let slots = langs.len().max(1);
    let label_slug = match label {
        XnliLabel::Entailment => {
            out.skip(reason::ENTAILMENT, slots);
            return out;
        }
        XnliLabel::Contradiction => "contradiction",
        XnliLabel::Neutral => "neutral",
    };
    if chrf_with(hypothesis, premise, &cfg.chrf).value < cfg.chrf_xnli_threshold {
        out.skip(reason::CHRF_BELOW, slots);
        return out;
    }
    let (reference, incorrect) = if use_premise_as_ref {
        (premise, hypothesis)
    } else {
        (hypothesis, premise)
    };
    let kind = if incorrect.split_whitespace().count() > reference.split_whitespace().count() {
        "addition"
    } else {
        "omission"
    };
    let phenomenon = format!("xnli-{kind}-{label_slug}");
    fan_out(
        &mut out,
        meta,
        sources,
        langs,
        tgt_lang,
        reference,
        mt_of_ref,
        incorrect,
        &phenomenon,
        "xnli",
    );
    out
}

/// The incorrect translation is the source sentence itself.
pub fn gen_copy_source(meta: &Meta, source: &str, good_mt: &str, reference: &str) -> GenOutcome {
    let mut out = GenOutcome::default();
    out.push_unchecked(
        meta,
        Draft {
            id: format!("{}:copy-source", meta.id),
            langpair: meta.langpair.clone(),
            source: source.to_string(),
            reference: reference.to_string(),
            good: good_mt.to_string(),
            incorrect: source.to_string(),
            phenomenon: "copy-source".into(),
            recipe: "copy-source".into(),
        },
    );
    out
}

/// The incorrect translation is a human reference in a language similar to the target.
pub fn gen_wrong_language(
    meta: &Meta,
    good_mt: &str,
    ref_tgt: &str,
    ref_similar: &str,
    triple: (&str, &str, &str),
    cfg: &GeneratorConfig,
) -> Result<GenOutcome> {
    let (src, tgt, sim) = triple;
    let t = cfg
        .triple(src, tgt, sim)
        .ok_or_else(|| Error::Config(format!("language triple {src}-{tgt}-{sim} is not configured")))?;
    let phenomenon = match t.target_resource {
        Resource::High => "similar-language-high",
        Resource::Low => "similar-language-low",
    };
    let mut out = GenOutcome::default();
    out.push(
        meta,
        Draft {
            id: format!("{}:wrong-language", meta.id),
            langpair: format!("{src}-{tgt}"),
            source: meta.source.clone(),
            reference: ref_tgt.to_string(),
            good: good_mt.to_string(),
            incorrect: ref_similar.to_string(),
            phenomenon: phenomenon.into(),
            recipe: format!("wrong-language {src}-{tgt}-{sim}"),
        },
        &[],
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textsim::chrf;

    fn sources(langs: &[&str]) -> BTreeMap<String, String> {
        langs
            .iter()
            .map(|l| (l.to_string(), format!("source in {l}")))
            .collect()
    }

    fn langs(l: &[&str]) -> Vec<String> {
        l.iter().map(|s| s.to_string()).collect()
    }

    const P1: &str = "The flight from Oslo to Zurich was delayed.";
    const P2: &str = "The flight from Zurich to Oslo was delayed.";

    #[test]
    fn oslo_zurich_fan_out() {
        let all = ["de", "es", "fr", "ja", "ko", "zh"];
        let out = gen_lexical_overlap(
            &Meta::new("lo1", "", ""),
            P1,
            P2,
            true,
            "The Oslo-Zurich flight was delayed.",
            &sources(&all),
            &langs(&all),
            "en",
        );
        assert_eq!(out.examples.len(), 6);
        for ex in &out.examples {
            assert_eq!(ex.incorrect_translation, P2);
            assert_eq!(ex.reference, P1);
            assert!(ex.langpair.ends_with("-en"));
        }
    }

    #[test]
    fn non_adversarial_and_missing_language() {
        let meta = Meta::new("lo2", "", "");
        let out = gen_lexical_overlap(&meta, P1, P2, false, "x", &sources(&["de"]), &langs(&["de"]), "en");
        assert_eq!(out.skipped[reason::NOT_ADVERSARIAL], 1);
        let out = gen_lexical_overlap(&meta, P1, P2, true, "x", &sources(&["de"]), &langs(&["de", "fr"]), "en");
        assert_eq!((out.examples.len(), out.skipped[reason::MISSING_SOURCE_LANG]), (1, 1));
    }

    #[test]
    fn xnli_threshold_is_inclusive() {
        let premise = "Ο θόρυβος ήταν τόσο δυνατός που δεν μπορούσαμε να κοιμηθούμε.";
        let hypothesis = "Ο θόρυβος ήταν δυνατός.";
        let score = chrf(hypothesis, premise).value;
        let meta = Meta::new("x1", "", "");
        let run = |threshold: f64, label: XnliLabel| {
            let cfg = GeneratorConfig {
                chrf_xnli_threshold: threshold,
                ..GeneratorConfig::default()
            };
            gen_xnli_meaning(
                &meta,
                premise,
                hypothesis,
                label,
                "The noise was so loud we could not sleep.",
                &sources(&["en"]),
                &langs(&["en"]),
                true,
                "el",
                &cfg,
            )
        };
        let ok = run(score, XnliLabel::Neutral);
        assert_eq!(ok.examples.len(), 1);
        assert_eq!(ok.examples[0].incorrect_translation, hypothesis);
        assert_eq!(ok.examples[0].phenomenon, "xnli-omission-neutral");
        assert_eq!(run(score + 1e-9, XnliLabel::Neutral).skipped[reason::CHRF_BELOW], 1);
        assert_eq!(run(0.0, XnliLabel::Entailment).skipped[reason::ENTAILMENT], 1);
    }

    #[test]
    fn copy_source_is_verbatim() {
        let meta = Meta::new("c1", "de-en", "Es regnet.");
        let out = gen_copy_source(&meta, "Es regnet.", "It is raining.", "It's raining.");
        assert_eq!(out.examples[0].incorrect_translation, "Es regnet.");
        let same = gen_copy_source(&meta, "OK", "OK", "OK.");
        assert_eq!(same.examples.len(), 1);
        assert!(!crate::corpus::validate(&same.examples[0], &crate::corpus::Taxonomy::aces()).is_empty());
    }

    #[test]
    fn wrong_language_triples() {
        let cfg = GeneratorConfig::default();
        let meta = Meta::new("w1", "en-es", "The cell divides.");
        let out = gen_wrong_language(
            &meta,
            "La célula se divide.",
            "La célula se divide en dos.",
            "La cèl·lula es divideix.",
            ("en", "es", "ca"),
            &cfg,
        )
        .unwrap();
        assert_eq!(out.examples[0].incorrect_translation, "La cèl·lula es divideix.");
        assert_eq!(out.examples[0].phenomenon, "similar-language-high");
        assert!(gen_wrong_language(&meta, "a", "b", "c", ("en", "de", "zh"), &cfg).is_err());
        let low = gen_wrong_language(&meta, "a", "b", "c", ("en", "ca", "es"), &cfg).unwrap();
        assert_eq!(low.examples[0].phenomenon, "similar-language-low");
    }
}
