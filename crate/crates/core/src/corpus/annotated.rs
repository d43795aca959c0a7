use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::text;

/// A labelled `[start, end)` character span, e.g. a constituent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledSpan {
    pub span: (usize, usize),
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntitySpan {
    pub span: (usize, usize),
    #[serde(rename = "type")]
    pub kind: String,
}

impl EntitySpan {
    pub fn is_person(&self) -> bool {
        self.kind.eq_ignore_ascii_case("person") || self.kind == "PER"
    }
}

/// One tokenizer piece. Continuation pieces may carry a `##` marker, which is
/// stripped when reassembling tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subword {
    pub piece: String,
    pub is_continuation: bool,
}

impl Subword {
    pub fn surface(&self) -> &str {
        if self.is_continuation {
            self.piece.strip_prefix("##").unwrap_or(&self.piece)
        } else {
            &self.piece
        }
    }
}

/// A source with one constituent dropped, together with its machine translation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialVariant {
    pub deleted_span: (usize, usize),
    pub partial_text: String,
    pub partial_translation: String,
}

/// Corpus text with optional externally supplied annotation layers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnotatedSegment {
    pub text: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constituents: Vec<LabeledSpan>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub entities: Vec<EntitySpan>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub subwords: Vec<Subword>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub translation: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub partial_variants: Vec<PartialVariant>,
}

/// A reassembled subword token located in the segment text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordToken {
    /// Character range of the token in the text.
    pub chars: Range<usize>,
    /// Indices into `AnnotatedSegment::subwords`.
    pub pieces: Range<usize>,
}

impl SubwordToken {
    pub fn is_multi_piece(&self) -> bool {
        self.pieces.len() >= 2
    }
}

impl AnnotatedSegment {
    pub fn plain(text: impl Into<String>) -> Self {
        AnnotatedSegment {
            text: text.into(),
            ..Default::default()
        }
    }

    pub fn person_entities(&self) -> impl Iterator<Item = &EntitySpan> {
        self.entities.iter().filter(|e| e.is_person())
    }

    /// Groups subword pieces into tokens and locates each token in the text, left to right.
    pub fn subword_tokens(&self) -> Result<Vec<SubwordToken>, String> {
        let mut tokens = Vec::new();
        let mut groups: Vec<Range<usize>> = Vec::new();
        for (i, sw) in self.subwords.iter().enumerate() {
            match groups.last_mut() {
                Some(g) if sw.is_continuation => g.end = i + 1,
                None if sw.is_continuation => return Err("first subword piece is a continuation".to_string()),
                _ => groups.push(i..i + 1),
            }
        }
        let mut cursor_byte = 0;
        for g in groups {
            let word: String = self.subwords[g.clone()].iter().map(Subword::surface).collect();
            if word.is_empty() {
                return Err("empty subword token".to_string());
            }
            let Some(rel) = self.text[cursor_byte..].find(&word) else {
                return Err(format!("subword token `{word}` not found in text"));
            };
            let start_b = cursor_byte + rel;
            let end_b = start_b + word.len();
            let start = text::char_index_of_byte(&self.text, start_b);
            let end = start + word.chars().count();
            tokens.push(SubwordToken {
                chars: start..end,
                pieces: g,
            });
            cursor_byte = end_b;
        }
        Ok(tokens)
    }

    /// Lists broken invariants: out-of-range or overlapping spans, unlocatable subword tokens.
    pub fn violations(&self) -> Vec<String> {
        let len = text::char_len(&self.text);
        let mut out = Vec::new();
        let layers: [(&str, Vec<(usize, usize)>); 2] = [
            ("constituents", self.constituents.iter().map(|s| s.span).collect()),
            ("entities", self.entities.iter().map(|s| s.span).collect()),
        ];
        for (name, mut spans) in layers {
            for &(s, e) in &spans {
                if s >= e || e > len {
                    out.push(format!("{name}: span [{s}, {e}) outside text of length {len}"));
                }
            }
            spans.sort_unstable();
            if spans.windows(2).any(|w| w[1].0 < w[0].1) {
                out.push(format!("{name}: overlapping spans"));
            }
        }
        for pv in &self.partial_variants {
            let (s, e) = pv.deleted_span;
            if s >= e || e > len {
                out.push(format!(
                    "partial_variants: span [{s}, {e}) outside text of length {len}"
                ));
            }
        }
        if !self.subwords.is_empty() {
            if let Err(e) = self.subword_tokens() {
                out.push(format!("subwords: {e}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(piece: &str, cont: bool) -> Subword {
        Subword {
            piece: piece.into(),
            is_continuation: cont,
        }
    }

    #[test]
    fn subword_tokens_located() {
        let seg = AnnotatedSegment {
            text: "The mass production".into(),
            subwords: vec![
                sw("The", false),
                sw("mas", false),
                sw("##s", true),
                sw("production", false),
            ],
            ..Default::default()
        };
        let toks = seg.subword_tokens().unwrap();
        assert_eq!(toks.len(), 3);
        assert_eq!(toks[1].chars, 4..8);
        assert!(toks[1].is_multi_piece());
        assert!(seg.violations().is_empty());
    }

    #[test]
    fn unlocatable_subwords_reported() {
        let seg = AnnotatedSegment {
            text: "The mass".into(),
            subwords: vec![sw("mis", false), sw("##s", true)],
            ..Default::default()
        };
        assert_eq!(seg.violations().len(), 1);
    }

    #[test]
    fn span_checks() {
        let seg = AnnotatedSegment {
            text: "Madonna sang".into(),
            entities: vec![
                EntitySpan {
                    span: (0, 7),
                    kind: "person".into(),
                },
                EntitySpan {
                    span: (5, 9),
                    kind: "person".into(),
                },
                EntitySpan {
                    span: (10, 13),
                    kind: "person".into(),
                },
            ],
            ..Default::default()
        };
        let v = seg.violations();
        assert_eq!(v.len(), 2, "{v:?}");
    }
}
