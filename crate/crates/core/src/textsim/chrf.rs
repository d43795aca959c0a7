use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::SimilarityScore;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ChrfConfig {
    pub char_order: usize,
    pub beta: f64,
}

impl Default for ChrfConfig {
    fn default() -> Self {
        ChrfConfig {
            char_order: 6,
            beta: 2.0,
        }
    }
}

fn char_ngrams(chars: &[char], n: usize) -> HashMap<&[char], usize> {
    let mut counts = HashMap::new();
    if chars.len() >= n {
        for w in chars.windows(n) {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
}

pub fn chrf(hypothesis: &str, reference: &str) -> SimilarityScore {
    chrf_with(hypothesis, reference, &ChrfConfig::default())
}

/// Character n-gram F-score. Precision and recall are averaged over the orders that
/// both strings are long enough to have, then combined into one F-beta.
pub fn chrf_with(hypothesis: &str, reference: &str, cfg: &ChrfConfig) -> SimilarityScore {
    let hyp: Vec<char> = hypothesis.chars().filter(|c| !c.is_whitespace()).collect();
    let refs: Vec<char> = reference.chars().filter(|c| !c.is_whitespace()).collect();
    let (mut p_sum, mut r_sum, mut orders) = (0.0, 0.0, 0usize);
    for n in 1..=cfg.char_order {
        if hyp.len() < n || refs.len() < n {
            break;
        }
        let h = char_ngrams(&hyp, n);
        let r = char_ngrams(&refs, n);
        let matches: usize = h.iter().map(|(g, &c)| c.min(r.get(g).copied().unwrap_or(0))).sum();
        p_sum += matches as f64 / (hyp.len() - n + 1) as f64;
        r_sum += matches as f64 / (refs.len() - n + 1) as f64;
        orders += 1;
    }
    if orders == 0 {
        return SimilarityScore::percent(0.0);
    }
    let p = p_sum / orders as f64;
    let r = r_sum / orders as f64;
    let b2 = cfg.beta * cfg.beta;
    if p + r == 0.0 {
        return SimilarityScore::percent(0.0);
    }
    SimilarityScore::percent(100.0 * (1.0 + b2) * p * r / (b2 * p + r))
}
