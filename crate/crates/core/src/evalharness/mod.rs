//! Metric meta-evaluation: score tables, the tau-like correlation, rollups and reports.

mod groups;
mod report;
mod rollup;
mod scores;
mod tau;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use groups::{langpair_grouping, LangGroup, TRAINED_PAIRS};
pub use report::{build_report, parse_category_taus, EvalReport, MetricReport};
pub use rollup::{aces_score, aces_score_with, category_rollup, subcategory_rollup, AcesWeights};
pub use scores::{load_scores, parse_scores, render_scores, save_scores, MetricScoreTable, SCORE_HEADER};
pub use tau::{kendall_tau_like, kendall_tau_like_eps, phenomenon_correlations, CorrelationResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalConfig {
    /// `|good - incorrect| <= epsilon` is a tie, and ties are discordant.
    pub epsilon: f64,
    pub trained_pairs: BTreeSet<String>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            epsilon: 0.0,
            trained_pairs: TRAINED_PAIRS.iter().map(|s| s.to_string()).collect(),
        }
    }
}
