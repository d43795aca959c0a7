//! Diagnostics over evaluation outputs: deltas between paired challenge-set variants.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::corpus::ChallengeExample;
use crate::error::{Error, Result};
use crate::evalharness::{kendall_tau_like_eps, CorrelationResult, MetricScoreTable};

pub const ONLY_REF_AMBIGUOUS: &str = "commonsense-only-ref-ambiguous";
pub const BOTH_AMBIGUOUS: &str = "commonsense-src-and-ref-ambiguous";

/// (reference-copied good translation, synonymous good translation) phenomenon pairs.
pub const COPY_SYNONYM_PAIRS: [(&str, &str); 3] = [
    (
        "hallucination-real-data-vs-ref-word",
        "hallucination-real-data-vs-synonym",
    ),
    ("overly-literal-vs-ref-word", "overly-literal-vs-synonym"),
    ("untranslated-vs-ref-word", "untranslated-vs-synonym"),
];

/// Reporting guard for zero-shot splits: fewer examples per side only warns.
pub const ZEROSHOT_MIN_PER_SIDE: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeltaResult {
    pub metric_name: String,
    /// `components.0 - components.1`.
    pub delta: f64,
    pub components: (f64, f64),
    pub n_examples: (usize, usize),
}

impl DeltaResult {
    pub fn from_taus(metric: &str, tau_a: f64, tau_b: f64) -> Self {
        DeltaResult {
            metric_name: metric.to_string(),
            delta: tau_a - tau_b,
            components: (tau_a, tau_b),
            n_examples: (0, 0),
        }
    }

    pub fn from_results(metric: &str, a: &CorrelationResult, b: &CorrelationResult) -> Self {
        DeltaResult {
            n_examples: (a.pairs(), b.pairs()),
            ..DeltaResult::from_taus(metric, a.tau, b.tau)
        }
    }
}

fn pairs_for<'a>(
    examples: impl IntoIterator<Item = &'a ChallengeExample>,
    table: &MetricScoreTable,
) -> Result<Vec<(f64, f64)>> {
    let mut missing = Vec::new();
    let mut out = Vec::new();
    for e in examples {
        match table.rows.get(&e.id) {
            Some(&p) => out.push(p),
            None => missing.push(e.id.clone()),
        }
    }
    if missing.is_empty() {
        Ok(out)
    } else {
        Err(Error::MissingScores(missing))
    }
}

fn tau_of(
    phenomenon: &str,
    examples: &[ChallengeExample],
    table: &MetricScoreTable,
    eps: f64,
) -> Result<CorrelationResult> {
    let subset: Vec<&ChallengeExample> = examples.iter().filter(|e| e.phenomenon == phenomenon).collect();
    if subset.is_empty() {
        return Err(Error::Mismatch(format!("missing phenomenon `{phenomenon}`")));
    }
    kendall_tau_like_eps(&pairs_for(subset, table)?, eps)
}

/// `tau(only_ref_ambiguous) - tau(both_ambiguous)`.
pub fn source_sensitivity_gain(
    tau_src_disambiguated: &CorrelationResult,
    tau_fully_ambiguous: &CorrelationResult,
    metric: &str,
) -> DeltaResult {
    DeltaResult::from_results(metric, tau_src_disambiguated, tau_fully_ambiguous)
}

fn base_id(e: &ChallengeExample) -> &str {
    e.id.strip_suffix(&format!(":{}", e.phenomenon)).unwrap_or(&e.id)
}

/// Source sensitivity from scored commonsense variants. Both variant sets must
/// cover the same underlying items.
pub fn source_sensitivity_from_scores(
    examples: &[ChallengeExample],
    table: &MetricScoreTable,
    epsilon: f64,
) -> Result<DeltaResult> {
    let bases = |p: &str| -> BTreeSet<&str> { examples.iter().filter(|e| e.phenomenon == p).map(base_id).collect() };
    let (a, b) = (bases(ONLY_REF_AMBIGUOUS), bases(BOTH_AMBIGUOUS));
    for (p, set) in [(ONLY_REF_AMBIGUOUS, &a), (BOTH_AMBIGUOUS, &b)] {
        if set.is_empty() {
            return Err(Error::Mismatch(format!("missing phenomenon `{p}`")));
        }
    }
    if a != b {
        let unpaired: Vec<&str> = a.symmetric_difference(&b).copied().collect();
        return Err(Error::Mismatch(format!(
            "unpaired commonsense items: {}",
            unpaired.join(", ")
        )));
    }
    Ok(source_sensitivity_gain(
        &tau_of(ONLY_REF_AMBIGUOUS, examples, table, epsilon)?,
        &tau_of(BOTH_AMBIGUOUS, examples, table, epsilon)?,
        &table.metric_name,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Decay {
    pub d12: f64,
    pub d13: f64,
}

/// `(tau1 - tau2, tau1 - tau3)`; a missing level is an error naming it.
pub fn overlap_decay(level_taus: [Option<f64>; 3]) -> Result<Decay> {
    let mut t = [0.0; 3];
    for (i, v) in level_taus.into_iter().enumerate() {
        t[i] = v.ok_or_else(|| Error::Mismatch(format!("missing overlap level {}", i + 1)))?;
    }
    Ok(Decay {
        d12: t[0] - t[1],
        d13: t[0] - t[2],
    })
}

/// Level taus and decay for `hallucination-{target}-level-{1,2,3}`.
pub fn overlap_decay_from_scores(
    examples: &[ChallengeExample],
    table: &MetricScoreTable,
    target: &str,
    epsilon: f64,
) -> Result<([f64; 3], Decay)> {
    let mut taus = [0.0; 3];
    for (i, tau) in taus.iter_mut().enumerate() {
        *tau = tau_of(
            &format!("hallucination-{target}-level-{}", i + 1),
            examples,
            table,
            epsilon,
        )?
        .tau;
    }
    Ok((taus, overlap_decay(taus.map(Some))?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StdKind {
    #[default]
    Sample,
    Population,
}

/// Mean and standard deviation of `tau(synonym) - tau(copy)` over a metric group.
/// Input pairs are `(tau_copy, tau_synonym)`, one per metric.
pub fn copy_vs_synonym_delta(pairs: &[(f64, f64)], std: StdKind) -> Result<(f64, f64)> {
    if pairs.is_empty() {
        return Err(Error::Empty("metric group".into()));
    }
    let deltas: Vec<f64> = pairs.iter().map(|&(copy, syn)| syn - copy).collect();
    let n = deltas.len() as f64;
    let mean = deltas.iter().sum::<f64>() / n;
    let ss: f64 = deltas.iter().map(|d| (d - mean).powi(2)).sum();
    let denom = match std {
        StdKind::Sample => n - 1.0,
        StdKind::Population => n,
    };
    let sd = if denom > 0.0 { (ss / denom).sqrt() } else { 0.0 };
    Ok((mean, sd))
}

/// `tau_wmt - tau_non_wmt`.
pub fn zeroshot_delta(tau_wmt: f64, tau_non_wmt: f64, metric: &str) -> DeltaResult {
    DeltaResult::from_taus(metric, tau_wmt, tau_non_wmt)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroShot {
    pub result: DeltaResult,
    /// Set when a side has fewer examples than the reporting guard.
    pub warning: Option<String>,
}

/// Splits `examples` by WMT language pair and returns `tau_wmt - tau_non_wmt`.
pub fn zeroshot_split(
    examples: &[ChallengeExample],
    wmt_langpairs: &BTreeSet<String>,
    table: &MetricScoreTable,
    epsilon: f64,
    min_per_side: usize,
) -> Result<ZeroShot> {
    let (wmt, other): (Vec<&ChallengeExample>, Vec<&ChallengeExample>) =
        examples.iter().partition(|e| wmt_langpairs.contains(&e.langpair));
    if wmt.is_empty() {
        return Err(Error::Empty("no examples in WMT language pairs".into()));
    }
    if other.is_empty() {
        return Err(Error::Empty("no examples outside WMT language pairs".into()));
    }
    let a = kendall_tau_like_eps(&pairs_for(wmt, table)?, epsilon)?;
    let b = kendall_tau_like_eps(&pairs_for(other, table)?, epsilon)?;
    let result = DeltaResult::from_results(&table.metric_name, &a, &b);
    let warning = (result.n_examples.0 < min_per_side || result.n_examples.1 < min_per_side).then(|| {
        format!(
            "zero-shot split has {} WMT and {} non-WMT examples; fewer than {min_per_side} on a side",
            result.n_examples.0, result.n_examples.1
        )
    });
    Ok(ZeroShot { result, warning })
}
