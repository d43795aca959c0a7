//! Surface similarity: sentence BLEU, chrF and character Levenshtein distance.

mod bleu;
mod chrf;
mod levenshtein;

use serde::{Deserialize, Serialize};

pub use bleu::{bleu, bleu_with, tokenize, BleuConfig};
pub use chrf::{chrf, chrf_with, ChrfConfig};
pub use levenshtein::{edit_distance, levenshtein};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    /// BLEU and chrF, in `[0, 100]`.
    Percent0To100,
    /// Levenshtein, a non-negative integer count.
    NonnegativeInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityScore {
    pub value: f64,
    pub scale: Scale,
}

impl SimilarityScore {
    pub(crate) fn percent(value: f64) -> Self {
        SimilarityScore {
            value: value.clamp(0.0, 100.0),
            scale: Scale::Percent0To100,
        }
    }
}
