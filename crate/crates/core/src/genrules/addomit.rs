use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta};
use crate::corpus::{AnnotatedSegment, NEEDS_MANUAL_REVIEW};
use crate::text::{collapse_spaces, find_word};
use crate::textsim::bleu_with;

/// Token runs of `full` that are absent from `partial`, if `partial` is `full` with
/// some whitespace-token spans deleted. Partial tokens are matched greedily leftmost.
pub fn deleted_chunks(full: &str, partial: &str) -> Option<Vec<String>> {
    let full: Vec<&str> = full.split_whitespace().collect();
    let mut want = partial.split_whitespace().peekable();
    let mut chunks = Vec::new();
    let mut run: Vec<&str> = Vec::new();
    for tok in full {
        if want.peek() == Some(&tok) {
            want.next();
            if !run.is_empty() {
                chunks.push(run.join(" "));
                run.clear();
            }
        } else {
            run.push(tok);
        }
    }
    if !run.is_empty() {
        chunks.push(run.join(" "));
    }
    want.peek().is_none().then_some(chunks)
}

/// Deletes each chunk, in order, from `reference`; `None` if one is not found as whole words.
fn delete_from_reference(reference: &str, chunks: &[String]) -> Option<String> {
    let mut cursor = 0;
    let mut ranges = Vec::with_capacity(chunks.len());
    for c in chunks {
        let (s, e) = *find_word(&reference[cursor..], c).first()?;
        ranges.push((cursor + s, cursor + e));
        cursor += e;
    }
    let mut out = reference.to_string();
    for (s, e) in ranges.into_iter().rev() {
        out.replace_range(s..e, " ");
    }
    Some(collapse_spaces(&out))
}

pub fn gen_addition_omission(
    meta: &Meta,
    seg: &AnnotatedSegment,
    reference: &str,
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let slots = 2 * seg.partial_variants.len().max(1);
    let Some(full) = seg.translation.as_deref() else {
        out.skip(reason::NO_TRANSLATION, slots);
        return out;
    };
    if seg.partial_variants.is_empty() {
        out.skip(reason::NO_DELETED_SPAN, slots);
        return out;
    }
    let review = |good: &str, reference: &str| -> Vec<&'static str> {
        if bleu_with(good, reference, &cfg.bleu).value < cfg.bleu_review_threshold {
            vec![NEEDS_MANUAL_REVIEW]
        } else {
            Vec::new()
        }
    };
    for (i, pv) in seg.partial_variants.iter().enumerate() {
        let partial = pv.partial_translation.as_str();
        let chunks = match deleted_chunks(full, partial) {
            None => {
                out.skip(reason::NOT_A_DELETION, 2);
                continue;
            }
            Some(c) if c.is_empty() => {
                out.skip(reason::NO_DELETED_SPAN, 2);
                continue;
            }
            Some(c) => c,
        };
        out.push(
            meta,
            Draft {
                id: format!("{}:omission:{i}", meta.id),
                langpair: meta.langpair.clone(),
                source: seg.text.clone(),
                reference: reference.to_string(),
                good: full.to_string(),
                incorrect: partial.to_string(),
                phenomenon: "omission".into(),
                recipe: "addition-omission".into(),
            },
            &review(full, reference),
        );
        match delete_from_reference(reference, &chunks) {
            None => out.skip(reason::SPAN_NOT_IN_REFERENCE, 1),
            Some(partial_ref) => {
                let flags = review(partial, &partial_ref);
                out.push(
                    meta,
                    Draft {
                        id: format!("{}:addition:{i}", meta.id),
                        langpair: meta.langpair.clone(),
                        source: pv.partial_text.clone(),
                        reference: partial_ref,
                        good: partial.to_string(),
                        incorrect: full.to_string(),
                        phenomenon: "addition".into(),
                        recipe: "addition-omission".into(),
                    },
                    &flags,
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::PartialVariant;

    const FULL: &str = "For example, castle visits in the Loire Valley, the Rhine Valley, or a cruise to interesting cities on the Danube or a boat ride along the Erie Canal.";
    const PARTIAL: &str = "For example, castle visits in the Loire Valley, the Rhine Valley, or a cruise or boat ride along the Erie Canal.";

    fn seg(reference_src: &str, partial_src: &str, full: &str, partial: &str) -> AnnotatedSegment {
        AnnotatedSegment {
            text: reference_src.into(),
            translation: Some(full.into()),
            partial_variants: vec![PartialVariant {
                deleted_span: (0, 1),
                partial_text: partial_src.into(),
                partial_translation: partial.into(),
            }],
            ..Default::default()
        }
    }

    #[test]
    fn loire_chunks() {
        assert_eq!(
            deleted_chunks(FULL, PARTIAL).unwrap(),
            vec!["to interesting cities on the Danube", "a"]
        );
        assert_eq!(deleted_chunks("a b", "b a"), None);
    }

    #[test]
    fn loire_omission_emitted_addition_skipped() {
        let meta = Meta::new("loire", "de-en", "Zum Beispiel ...");
        let reference = "Examples include castle visits in the Loire Valley or the Rhine Valley, or a boat trip along the Erie Canal.";
        let s = seg("Zum Beispiel ...", "Zum Beispiel (kurz) ...", FULL, PARTIAL);
        let out = gen_addition_omission(&meta, &s, reference, &GeneratorConfig::default());
        assert_eq!(out.examples.len(), 1);
        let ex = &out.examples[0];
        assert_eq!(ex.phenomenon, "omission");
        assert_eq!(ex.good_translation, FULL);
        assert!(!ex.incorrect_translation.contains("to interesting cities on the Danube"));
        assert_eq!(out.skipped[reason::SPAN_NOT_IN_REFERENCE], 1);
        assert!(out.is_conserved());
    }

    #[test]
    fn addition_reference_reinserts_to_original() {
        let meta = Meta::new("s1", "de-en", "Er kaufte gestern ein rotes Auto.");
        let reference = "Yesterday he bought a red car.";
        let full = "He bought a red car yesterday.";
        let partial = "He bought a car yesterday.";
        let s = seg(&meta.source, "Er kaufte gestern ein Auto.", full, partial);
        let out = gen_addition_omission(&meta, &s, reference, &GeneratorConfig::default());
        let add = out.examples.iter().find(|e| e.phenomenon == "addition").unwrap();
        assert_eq!(add.reference, "Yesterday he bought a car.");
        assert_eq!(add.good_translation, partial);
        assert_eq!(add.incorrect_translation, full);
        assert_eq!(add.source, "Er kaufte gestern ein Auto.");
        // Splice oracle: put the span back where the reference had it.
        let at = reference.find("red").unwrap();
        let rebuilt = format!("{}red {}", &add.reference[..at], &add.reference[at..]);
        assert_eq!(rebuilt, reference);
        assert_eq!(out.examples.len(), 2);
    }

    #[test]
    fn low_bleu_flagged_for_review() {
        let meta = Meta::new("s2", "de-en", "Quelle");
        let s = seg(
            "Quelle",
            "Quelle kurz",
            "Completely different words here today",
            "Completely different here today",
        );
        let out = gen_addition_omission(&meta, &s, "Nothing in common", &GeneratorConfig::default());
        assert!(out.examples[0].flags.contains(NEEDS_MANUAL_REVIEW));
    }

    #[test]
    fn non_deletion_skipped() {
        let meta = Meta::new("s3", "de-en", "Quelle");
        let s = seg("Quelle", "Q", "the red car", "the blue car");
        let out = gen_addition_omission(&meta, &s, "the red car", &GeneratorConfig::default());
        assert!(out.examples.is_empty());
        assert_eq!(out.skipped[reason::NOT_A_DELETION], 2);
    }
}
