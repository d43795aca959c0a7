use std::collections::{BTreeMap, BTreeSet};

use acesforge_core::analysis::{
    copy_vs_synonym_delta, overlap_decay_from_scores, source_sensitivity_from_scores, zeroshot_split, StdKind,
    COPY_SYNONYM_PAIRS,
};
use acesforge_core::corpus::ChallengeExample;
use acesforge_core::evalharness::{self, EvalConfig};
use anyhow::{Context as _, Result};
use clap::ValueEnum;

use crate::ui::Ui;
use crate::{
    ensure_dir, load_challenge, load_score_tables, load_taxonomy, short_digest, usage, write_output, AnalyzeArgs,
};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Analysis {
    All,
    SourceSensitivity,
    OverlapDecay,
    CopyVsSynonym,
    Zeroshot,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum StdArg {
    Sample,
    Population,
}

impl From<StdArg> for StdKind {
    fn from(s: StdArg) -> StdKind {
        match s {
            StdArg::Sample => StdKind::Sample,
            StdArg::Population => StdKind::Population,
        }
    }
}

struct Row {
    metric: String,
    analysis: &'static str,
    subject: String,
    delta: f64,
    taus: (f64, f64),
    n: Option<(usize, usize)>,
}

const TARGETS: [&str; 2] = ["number", "named-entity"];

pub fn cmd_analyze(a: AnalyzeArgs, ui: &Ui) -> Result<()> {
    let tax = load_taxonomy(a.input.taxonomy.as_deref())?;
    let (examples, digest) = load_challenge(&a.input.challenge, a.input.format, &tax)?;
    let tables = load_score_tables(&a.scores)?;
    let eps = a.scores.epsilon;
    let all = a.analysis.contains(&Analysis::All);
    let wants = |x: Analysis| all || a.analysis.contains(&x);
    let strict = |x: Analysis| a.analysis.contains(&x);

    let mut rows: Vec<Row> = Vec::new();
    let mut extra: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
    let mut decay_tsv = String::from("metric\ttarget\tlevel\ttau\n");
    let mut copy_tsv = String::from("copy_phenomenon\tsynonym_phenomenon\tn_metrics\tmean_delta\tstd_delta\n");
    let (mut any_decay, mut any_copy) = (false, false);
    let phenomena: BTreeSet<&str> = examples.iter().map(|e| e.phenomenon.as_str()).collect();

    if wants(Analysis::SourceSensitivity) {
        for t in &tables {
            match source_sensitivity_from_scores(&examples, t, eps) {
                Ok(d) => {
                    extra
                        .entry(t.metric_name.clone())
                        .or_default()
                        .insert("analysis:source_sensitivity".into(), d.delta);
                    rows.push(Row {
                        metric: t.metric_name.clone(),
                        analysis: "source-sensitivity",
                        subject: "commonsense".into(),
                        delta: d.delta,
                        taus: d.components,
                        n: Some(d.n_examples),
                    });
                }
                Err(e @ acesforge_core::Error::Mismatch(_)) if !strict(Analysis::SourceSensitivity) => {
                    ui.warn(&format!("source-sensitivity skipped: {e}"));
                    break;
                }
                Err(e) => return Err(e).context("source-sensitivity"),
            }
        }
    }

    if wants(Analysis::OverlapDecay) {
        let mut first_err = None;
        for target in TARGETS {
            for t in &tables {
                match overlap_decay_from_scores(&examples, t, target, eps) {
                    Ok((taus, d)) => {
                        any_decay = true;
                        for (i, tau) in taus.iter().enumerate() {
                            decay_tsv.push_str(&format!("{}\t{target}\t{}\t{tau}\n", t.metric_name, i + 1));
                        }
                        let m = extra.entry(t.metric_name.clone()).or_default();
                        m.insert(format!("analysis:overlap_decay:{target}:d12"), d.d12);
                        m.insert(format!("analysis:overlap_decay:{target}:d13"), d.d13);
                        for (label, delta, other) in
                            [("level1-level2", d.d12, taus[1]), ("level1-level3", d.d13, taus[2])]
                        {
                            rows.push(Row {
                                metric: t.metric_name.clone(),
                                analysis: "overlap-decay",
                                subject: format!("{target} {label}"),
                                delta,
                                taus: (taus[0], other),
                                n: None,
                            });
                        }
                    }
                    Err(e @ acesforge_core::Error::Mismatch(_)) => {
                        first_err.get_or_insert(e);
                        break;
                    }
                    Err(e) => return Err(e).context("overlap-decay"),
                }
            }
        }
        if !any_decay {
            let e = first_err.expect("no decay implies an error");
            if strict(Analysis::OverlapDecay) {
                return Err(e).context("overlap-decay");
            }
            ui.warn(&format!("overlap-decay skipped: {e}"));
        }
    }

    if wants(Analysis::CopyVsSynonym) {
        let per_metric: Vec<_> = tables
            .iter()
            .map(|t| evalharness::phenomenon_correlations(&examples, t, eps))
            .collect::<acesforge_core::Result<_>>()?;
        let mut missing = None;
        for (copy, syn) in COPY_SYNONYM_PAIRS {
            match (phenomena.contains(copy), phenomena.contains(syn)) {
                (true, true) => {}
                (false, false) => {
                    missing.get_or_insert(copy);
                    continue;
                }
                (true, false) => {
                    missing = Some(syn);
                    if strict(Analysis::CopyVsSynonym) {
                        return Err(usage(format!(
                            "copy-vs-synonym: missing counterpart phenomenon `{syn}`"
                        )));
                    }
                    continue;
                }
                (false, true) => {
                    missing = Some(copy);
                    if strict(Analysis::CopyVsSynonym) {
                        return Err(usage(format!(
                            "copy-vs-synonym: missing counterpart phenomenon `{copy}`"
                        )));
                    }
                    continue;
                }
            }
            any_copy = true;
            let mut pairs = Vec::new();
            for (t, corr) in tables.iter().zip(&per_metric) {
                let (tc, ts) = (corr[copy].tau, corr[syn].tau);
                pairs.push((tc, ts));
                extra
                    .entry(t.metric_name.clone())
                    .or_default()
                    .insert(format!("analysis:copy_vs_synonym:{copy}"), ts - tc);
                rows.push(Row {
                    metric: t.metric_name.clone(),
                    analysis: "copy-vs-synonym",
                    subject: syn.to_string(),
                    delta: ts - tc,
                    taus: (ts, tc),
                    n: Some((corr[syn].pairs(), corr[copy].pairs())),
                });
            }
            let (mean, sd) = copy_vs_synonym_delta(&pairs, a.std.into())?;
            copy_tsv.push_str(&format!("{copy}\t{syn}\t{}\t{mean}\t{sd}\n", pairs.len()));
            ui.line(&format!(
                "copy-vs-synonym {syn}: mean delta {mean:.3} ± {sd:.3} over {} metrics",
                pairs.len()
            ));
        }
        if !any_copy {
            let p = missing.unwrap_or(COPY_SYNONYM_PAIRS[0].0);
            if strict(Analysis::CopyVsSynonym) {
                return Err(usage(format!("copy-vs-synonym: missing phenomenon `{p}`")));
            }
            ui.warn(&format!("copy-vs-synonym skipped: missing phenomenon `{p}`"));
        }
    }

    if wants(Analysis::Zeroshot) {
        let wmt: BTreeSet<String> = a.wmt_langpairs.iter().cloned().collect();
        let mut any = false;
        for p in &phenomena {
            let subset: Vec<ChallengeExample> = examples.iter().filter(|e| e.phenomenon == *p).cloned().collect();
            let n_wmt = subset.iter().filter(|e| wmt.contains(&e.langpair)).count();
            if n_wmt == 0 || n_wmt == subset.len() {
                continue;
            }
            any = true;
            ui.line(&format!(
                "zeroshot {p}: {n_wmt} WMT / {} non-WMT examples",
                subset.len() - n_wmt
            ));
            for (i, t) in tables.iter().enumerate() {
                let z = zeroshot_split(&subset, &wmt, t, eps, a.min_per_side)?;
                if i == 0 {
                    if let Some(w) = &z.warning {
                        ui.warn(&format!("{p}: {w}"));
                    }
                }
                extra
                    .entry(t.metric_name.clone())
                    .or_default()
                    .insert(format!("analysis:zeroshot:{p}"), z.result.delta);
                rows.push(Row {
                    metric: t.metric_name.clone(),
                    analysis: "zeroshot",
                    subject: p.to_string(),
                    delta: z.result.delta,
                    taus: z.result.components,
                    n: Some(z.result.n_examples),
                });
            }
        }
        if !any {
            let msg = "zeroshot: no phenomenon has examples both inside and outside the WMT language pairs";
            if strict(Analysis::Zeroshot) {
                return Err(usage(msg));
            }
            ui.warn(&format!("{msg}; skipped"));
        }
    }

    if rows.is_empty() {
        return Err(usage("no analysis could run on this challenge set"));
    }

    let prov = format!(
        "# acesforge analyze challenge={digest} scores={} epsilon={eps}\n",
        short_digest(
            tables
                .iter()
                .map(|t| evalharness::render_scores(t, Some(&t.metric_name)))
                .collect::<String>()
                .as_bytes()
        )
    );
    rows.sort_by(|x, y| (x.analysis, &x.subject, &x.metric).cmp(&(y.analysis, &y.subject, &y.metric)));
    let mut analysis_tsv = format!("{prov}metric\tanalysis\tsubject\tdelta\ttau_a\ttau_b\tn_a\tn_b\n");
    for r in &rows {
        let (na, nb) = r.n.map_or(("NA".to_string(), "NA".to_string()), |(a, b)| {
            (a.to_string(), b.to_string())
        });
        analysis_tsv.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{na}\t{nb}\n",
            r.metric, r.analysis, r.subject, r.delta, r.taus.0, r.taus.1
        ));
        ui.line(&format!(
            "{:<16} {:<18} {:<48} {:>7.3}",
            r.metric, r.analysis, r.subject, r.delta
        ));
    }
    ensure_dir(&a.out)?;
    write_output(&a.out.join("analysis.tsv"), &analysis_tsv)?;
    if any_decay {
        write_output(&a.out.join("decay.tsv"), &format!("{prov}{decay_tsv}"))?;
    }
    if any_copy {
        write_output(&a.out.join("copy_synonym.tsv"), &format!("{prov}{copy_tsv}"))?;
    }

    let cfg = EvalConfig {
        epsilon: eps,
        ..EvalConfig::default()
    };
    let mut report = evalharness::build_report(&examples, &tables, &tax, &cfg)?;
    for m in &mut report.metrics {
        if let Some(x) = extra.remove(&m.metric) {
            m.extra = x;
        }
    }
    write_output(
        &a.out.join("report.tsv"),
        &report.to_tsv(Some(prov.trim_start_matches("# ").trim_end())),
    )?;
    write_output(&a.out.join("report.txt"), &report.to_text())?;
    Ok(())
}
