use std::collections::HashMap;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::SimilarityScore;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct BleuConfig {
    pub max_order: usize,
    /// Add-one smoothing of matches and totals for orders ≥ 2.
    pub smooth: bool,
}

impl Default for BleuConfig {
    fn default() -> Self {
        BleuConfig {
            max_order: 4,
            smooth: true,
        }
    }
}

fn punct() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"\p{P}").expect("static regex"))
}

/// Puts every Unicode punctuation character (general category P) in its own token, then
/// splits on whitespace.
pub fn tokenize(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    for chunk in text.split_whitespace() {
        let mut last = 0;
        for m in punct().find_iter(chunk) {
            if m.start() > last {
                out.push(&chunk[last..m.start()]);
            }
            out.push(m.as_str());
            last = m.end();
        }
        if last < chunk.len() {
            out.push(&chunk[last..]);
        }
    }
    out
}

fn ngram_counts<'t, 'a>(toks: &'t [&'a str], n: usize) -> HashMap<&'t [&'a str], usize> {
    let mut counts = HashMap::new();
    if toks.len() >= n {
        for w in toks.windows(n) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

pub fn bleu(hypothesis: &str, reference: &str) -> SimilarityScore {
    bleu_with(hypothesis, reference, &BleuConfig::default())
}

pub fn bleu_with(hypothesis: &str, reference: &str, cfg: &BleuConfig) -> SimilarityScore {
    let hyp = tokenize(hypothesis);
    let refs = tokenize(reference);
    if hyp.is_empty() || cfg.max_order == 0 {
        return SimilarityScore::percent(0.0);
    }
    let mut log_sum = 0.0;
    for n in 1..=cfg.max_order {
        let h = ngram_counts(&hyp, n);
        let r = ngram_counts(&refs, n);
        let matches: usize = h.iter().map(|(g, &c)| c.min(r.get(g).copied().unwrap_or(0))).sum();
        let total = hyp.len().saturating_sub(n - 1);
        let p = if n >= 2 && cfg.smooth {
            (matches as f64 + 1.0) / (total as f64 + 1.0)
        } else if total == 0 {
            0.0
        } else {
            matches as f64 / total as f64
        };
        if p == 0.0 {
            return SimilarityScore::percent(0.0);
        }
        log_sum += p.ln();
    }
    let bp = if hyp.len() < refs.len() {
        (1.0 - refs.len() as f64 / hyp.len() as f64).exp()
    } else {
        1.0
    };
    SimilarityScore::percent(100.0 * bp * (log_sum / cfg.max_order as f64).exp())
}
