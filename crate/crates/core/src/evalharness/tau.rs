use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::MetricScoreTable;
use crate::corpus::ChallengeExample;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationResult {
    pub concordant: usize,
    /// Includes ties.
    pub discordant: usize,
    pub tau: f64,
}

impl CorrelationResult {
    pub fn from_counts(concordant: usize, discordant: usize) -> Result<Self> {
        let n = concordant + discordant;
        if n == 0 {
            return Err(Error::Empty("no score pairs to correlate".into()));
        }
        Ok(CorrelationResult {
            concordant,
            discordant,
            tau: (concordant as f64 - discordant as f64) / n as f64,
        })
    }

    pub fn pairs(&self) -> usize {
        self.concordant + self.discordant
    }
}

/// Tau-like correlation over (score_good, score_incorrect) pairs, ties discordant.
pub fn kendall_tau_like(pairs: &[(f64, f64)]) -> Result<CorrelationResult> {
    kendall_tau_like_eps(pairs, 0.0)
}

/// As [`kendall_tau_like`], but `|good - incorrect| <= epsilon` also counts as a tie.
pub fn kendall_tau_like_eps(pairs: &[(f64, f64)], epsilon: f64) -> Result<CorrelationResult> {
    let concordant = pairs.iter().filter(|&&(g, b)| g > b && g - b > epsilon).count();
    CorrelationResult::from_counts(concordant, pairs.len() - concordant)
}

/// Per-phenomenon correlation. Every example must have a score row.
pub fn phenomenon_correlations(
    examples: &[ChallengeExample],
    table: &MetricScoreTable,
    epsilon: f64,
) -> Result<BTreeMap<String, CorrelationResult>> {
    let missing: Vec<String> = examples
        .iter()
        .filter(|e| !table.rows.contains_key(&e.id))
        .map(|e| e.id.clone())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingScores(missing));
    }
    let mut by_phen: BTreeMap<&str, Vec<(f64, f64)>> = BTreeMap::new();
    for e in examples {
        by_phen.entry(&e.phenomenon).or_default().push(table.rows[&e.id]);
    }
    by_phen
        .into_iter()
        .map(|(p, pairs)| Ok((p.to_string(), kendall_tau_like_eps(&pairs, epsilon)?)))
        .collect()
}
