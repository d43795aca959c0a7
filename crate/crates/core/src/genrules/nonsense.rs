use rand::seq::IndexedRandom;
use rand::Rng as _;

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta};
use crate::corpus::AnnotatedSegment;
use crate::text::splice_chars;

/// Swaps one piece of one multi-piece reference token for a vocabulary piece of the
/// same kind (word-initial or `##` continuation), creating a non-word.
pub fn gen_nonsense(
    meta: &Meta,
    reference: &AnnotatedSegment,
    good_alt: &str,
    vocab: &[String],
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let tokens = match reference.subword_tokens() {
        Ok(t) => t,
        Err(_) => {
            out.skip(reason::BAD_SUBWORDS, 1);
            return out;
        }
    };
    let multi: Vec<_> = tokens.iter().filter(|t| t.is_multi_piece()).collect();
    let mut rng = meta.rng(cfg, "nonsense");
    let Some(tok) = multi.choose(&mut rng) else {
        out.skip(reason::NO_MULTI_PIECE, 1);
        return out;
    };
    let which = rng.random_range(tok.pieces.clone());
    let pieces = &reference.subwords[tok.pieces.clone()];
    let old = &reference.subwords[which];
    let pool: Vec<&String> = vocab
        .iter()
        .filter(|v| v.starts_with("##") == old.is_continuation)
        .filter(|v| v.strip_prefix("##").unwrap_or(v) != old.surface())
        .collect();
    let Some(new_piece) = pool.choose(&mut rng) else {
        out.skip(reason::NO_VOCAB_PIECE, 1);
        return out;
    };
    let new_surface = new_piece.strip_prefix("##").unwrap_or(new_piece);
    let word: String = pieces
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if tok.pieces.start + i == which {
                new_surface
            } else {
                p.surface()
            }
        })
        .collect();
    let original: String = pieces.iter().map(|p| p.surface()).collect();
    let incorrect =
        splice_chars(&reference.text, tok.chars.start, tok.chars.end, &word).expect("token located inside text");
    out.push(
        meta,
        Draft {
            id: format!("{}:nonsense", meta.id),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.text.clone(),
            good: good_alt.to_string(),
            incorrect,
            phenomenon: "nonsense".into(),
            recipe: format!("nonsense {original} -> {word}"),
        },
        &[],
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Subword;

    fn sw(p: &str) -> Subword {
        Subword {
            piece: p.into(),
            is_continuation: p.starts_with("##"),
        }
    }

    fn reference() -> AnnotatedSegment {
        AnnotatedSegment {
            text: "The mass production of films".into(),
            subwords: ["The", "mas", "##s", "production", "of", "films"]
                .iter()
                .map(|p| sw(p))
                .collect(),
            ..Default::default()
        }
    }

    #[test]
    fn mass_becomes_ins() {
        let meta = Meta::new("n1", "de-en", "Die Massenproduktion von Filmen");
        let vocab = vec!["in".to_string()];
        let cfg = GeneratorConfig::default();
        // With a one-word vocabulary only a word-initial swap is possible, so any seed
        // that picks "mas" yields "ins".
        let hit = (0..64)
            .map(|s| GeneratorConfig { seed: s, ..cfg.clone() })
            .find_map(|c| {
                let out = gen_nonsense(&meta, &reference(), "Mass-producing films", &vocab, &c);
                out.examples.first().map(|e| e.incorrect_translation.clone())
            });
        assert_eq!(hit.as_deref(), Some("The ins production of films"));
    }

    #[test]
    fn single_piece_tokens_skipped() {
        let seg = AnnotatedSegment {
            text: "a b".into(),
            subwords: vec![sw("a"), sw("b")],
            ..Default::default()
        };
        let out = gen_nonsense(
            &Meta::new("n", "de-en", "x"),
            &seg,
            "c",
            &["in".into()],
            &GeneratorConfig::default(),
        );
        assert_eq!(out.skipped[reason::NO_MULTI_PIECE], 1);
    }

    #[test]
    fn deterministic_and_nonword() {
        let cfg = GeneratorConfig::default();
        let meta = Meta::new("n2", "de-en", "x");
        let a = gen_nonsense(&meta, &reference(), "Mass-producing films", &cfg.nonsense_vocab, &cfg);
        let b = gen_nonsense(&meta, &reference(), "Mass-producing films", &cfg.nonsense_vocab, &cfg);
        assert_eq!(a, b);
        let bad = &a.examples[0].incorrect_translation;
        assert_ne!(bad, "The mass production of films");
        assert!(bad.starts_with("The ") && bad.ends_with(" production of films"));
    }
}
