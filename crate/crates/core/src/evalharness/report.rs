use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{
    aces_score, category_rollup, kendall_tau_like_eps, phenomenon_correlations, subcategory_rollup, CorrelationResult,
    EvalConfig, LangGroup, MetricScoreTable,
};
use crate::corpus::{Category, ChallengeExample, Subcategory, Taxonomy};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct MetricReport {
    pub metric: String,
    pub n_examples: usize,
    pub phenomena: BTreeMap<String, CorrelationResult>,
    /// Categories without any phenomenon are absent.
    pub categories: BTreeMap<Category, f64>,
    pub subcategories: BTreeMap<Subcategory, f64>,
    /// `None` unless all ten categories are present.
    pub aces: Option<f64>,
    /// Pooled tau per language-pair group; empty groups are absent.
    pub groups: BTreeMap<LangGroup, CorrelationResult>,
    /// Extra namespaced columns, e.g. analysis deltas.
    pub extra: BTreeMap<String, f64>,
}

impl MetricReport {
    /// A row built from category taus alone.
    pub fn from_category_taus(metric: impl Into<String>, categories: BTreeMap<Category, f64>) -> Self {
        let aces = aces_score(&categories).ok();
        MetricReport {
            metric: metric.into(),
            categories,
            aces,
            ..Default::default()
        }
    }
}

/// One row per metric, sorted by metric name.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct EvalReport {
    pub metrics: Vec<MetricReport>,
}

pub fn build_report(
    examples: &[ChallengeExample],
    tables: &[MetricScoreTable],
    taxonomy: &Taxonomy,
    cfg: &EvalConfig,
) -> Result<EvalReport> {
    if examples.is_empty() {
        return Err(Error::Empty("no challenge examples".into()));
    }
    if tables.is_empty() {
        return Err(Error::Empty("no metric score tables".into()));
    }
    if let Some(e) = examples.iter().find(|e| !taxonomy.contains(&e.phenomenon)) {
        return Err(Error::UnknownPhenomenon(e.phenomenon.clone()));
    }
    let mut names = BTreeSet::new();
    for t in tables {
        if !names.insert(t.metric_name.as_str()) {
            return Err(Error::Mismatch(format!("metric `{}` given twice", t.metric_name)));
        }
    }
    let mut metrics = Vec::with_capacity(tables.len());
    for table in tables {
        let phenomena = phenomenon_correlations(examples, table, cfg.epsilon)?;
        let taus: BTreeMap<String, f64> = phenomena.iter().map(|(p, r)| (p.clone(), r.tau)).collect();
        let categories = category_rollup(&taus, taxonomy)?;
        let mut by_group: BTreeMap<LangGroup, Vec<(f64, f64)>> = BTreeMap::new();
        for e in examples {
            by_group
                .entry(LangGroup::of(&e.langpair, &cfg.trained_pairs))
                .or_default()
                .push(table.rows[&e.id]);
        }
        let groups = by_group
            .into_iter()
            .map(|(g, pairs)| Ok((g, kendall_tau_like_eps(&pairs, cfg.epsilon)?)))
            .collect::<Result<_>>()?;
        metrics.push(MetricReport {
            metric: table.metric_name.clone(),
            n_examples: examples.len(),
            subcategories: subcategory_rollup(&taus, taxonomy)?,
            aces: aces_score(&categories).ok(),
            categories,
            phenomena,
            groups,
            extra: BTreeMap::new(),
        });
    }
    metrics.sort_by(|a, b| a.metric.cmp(&b.metric));
    Ok(EvalReport { metrics })
}

const NA: &str = "NA";

/// Parses report rows given directly as category taus: a `metric` column, then the
/// ten category columns in report order. `#` lines are comments.
pub fn parse_category_taus(text: &str) -> Result<Vec<MetricReport>> {
    let expected: Vec<&str> = std::iter::once("metric")
        .chain(Category::ALL.iter().map(|c| c.as_str()))
        .collect();
    let mut rows: Vec<MetricReport> = Vec::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut header = false;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.trim_end_matches('\r').split('\t').collect();
        if !header {
            if cols != expected {
                return Err(Error::parse(
                    line_no,
                    format!("expected header `{}`", expected.join("\t")),
                ));
            }
            header = true;
            continue;
        }
        if cols.len() != expected.len() {
            return Err(Error::parse(
                line_no,
                format!("expected {} columns, found {}", expected.len(), cols.len()),
            ));
        }
        let mut taus = BTreeMap::new();
        for (c, raw) in Category::ALL.iter().zip(&cols[1..]) {
            let v: f64 = raw
                .trim()
                .parse()
                .map_err(|_| Error::parse(line_no, format!("non-numeric {c} `{raw}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(line_no, format!("non-finite {c} `{raw}`")));
            }
            taus.insert(*c, v);
        }
        let name = cols[0].to_string();
        if let Some(&first) = seen.get(&name) {
            return Err(Error::DuplicateId {
                id: name,
                first,
                second: line_no,
            });
        }
        seen.insert(name.clone(), line_no);
        rows.push(MetricReport::from_category_taus(name, taus));
    }
    if !header {
        return Err(Error::parse(1, "missing header"));
    }
    rows.sort_by(|a, b| a.metric.cmp(&b.metric));
    Ok(rows)
}

impl EvalReport {
    fn phenomenon_names(&self) -> BTreeSet<&str> {
        self.metrics
            .iter()
            .flat_map(|m| m.phenomena.keys().map(String::as_str))
            .collect()
    }

    fn extra_names(&self) -> BTreeSet<&str> {
        self.metrics
            .iter()
            .flat_map(|m| m.extra.keys().map(String::as_str))
            .collect()
    }

    /// Numeric column names after `metric` and `n_examples`.
    pub fn columns(&self) -> Vec<String> {
        let mut cols: Vec<String> = Category::ALL.iter().map(|c| c.to_string()).collect();
        cols.push("aces_score".into());
        cols.extend(
            Subcategory::MISTRANSLATION
                .iter()
                .map(|s| format!("mistranslation:{s}")),
        );
        cols.extend(LangGroup::ALL.iter().map(|g| format!("lang:{g}")));
        cols.extend(self.phenomenon_names().into_iter().map(|p| format!("phenomenon:{p}")));
        cols.extend(self.extra_names().into_iter().map(str::to_string));
        cols
    }

    fn values(&self, m: &MetricReport) -> Vec<Option<f64>> {
        let mut v: Vec<Option<f64>> = Category::ALL.iter().map(|c| m.categories.get(c).copied()).collect();
        v.push(m.aces);
        v.extend(
            Subcategory::MISTRANSLATION
                .iter()
                .map(|s| m.subcategories.get(s).copied()),
        );
        v.extend(LangGroup::ALL.iter().map(|g| m.groups.get(g).map(|r| r.tau)));
        v.extend(
            self.phenomenon_names()
                .into_iter()
                .map(|p| m.phenomena.get(p).map(|r| r.tau)),
        );
        v.extend(self.extra_names().into_iter().map(|k| m.extra.get(k).copied()));
        v
    }

    /// Column-wise mean over metrics (an average of averages); `None` where any metric lacks the value.
    pub fn average(&self) -> Vec<Option<f64>> {
        let rows: Vec<Vec<Option<f64>>> = self.metrics.iter().map(|m| self.values(m)).collect();
        (0..self.columns().len())
            .map(|i| {
                let col: Option<Vec<f64>> = rows.iter().map(|r| r[i]).collect();
                col.filter(|c| !c.is_empty())
                    .map(|c| c.iter().sum::<f64>() / c.len() as f64)
            })
            .collect()
    }

    /// Machine-readable report: full precision, `NA` for absent values, `Average` as the last row.
    pub fn to_tsv(&self, provenance: Option<&str>) -> String {
        let cell = |v: &Option<f64>| v.map_or(NA.to_string(), |x| x.to_string());
        let mut out = String::new();
        if let Some(p) = provenance {
            out.push_str(&format!("# {}\n", p.replace('\n', " ")));
        }
        let mut header = vec!["metric".to_string(), "n_examples".to_string()];
        header.extend(self.columns());
        out.push_str(&header.join("\t"));
        out.push('\n');
        for m in &self.metrics {
            let mut row = vec![m.metric.clone(), m.n_examples.to_string()];
            row.extend(self.values(m).iter().map(cell));
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        if !self.metrics.is_empty() {
            let mut row = vec!["Average".to_string(), NA.to_string()];
            row.extend(self.average().iter().map(cell));
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Aligned plain-text tables with three decimals.
    pub fn to_text(&self) -> String {
        let fmt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3}"));
        let summary_len = Category::ALL.len() + 1 + Subcategory::MISTRANSLATION.len() + LangGroup::ALL.len();
        let cols = self.columns();
        let avg = self.average();

        let mut header = vec!["metric".to_string()];
        header.extend(cols[..summary_len].iter().cloned());
        let mut rows = vec![header];
        for m in &self.metrics {
            let mut r = vec![m.metric.clone()];
            r.extend(self.values(m)[..summary_len].iter().map(|&v| fmt(v)));
            rows.push(r);
        }
        let mut r = vec!["Average".to_string()];
        r.extend(avg[..summary_len].iter().map(|&v| fmt(v)));
        rows.push(r);
        let mut out = render_aligned(&rows);

        let detail: Vec<usize> = (summary_len..cols.len()).collect();
        if !detail.is_empty() {
            let mut header = vec!["column".to_string()];
            header.extend(self.metrics.iter().map(|m| m.metric.clone()));
            let mut rows = vec![header];
            let values: Vec<Vec<Option<f64>>> = self.metrics.iter().map(|m| self.values(m)).collect();
            for i in detail {
                let mut r = vec![cols[i].clone()];
                r.extend(values.iter().map(|v| fmt(v[i])));
                rows.push(r);
            }
            out.push('\n');
            out.push_str(&render_aligned(&rows));
        }
        out
    }
}

fn render_aligned(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.get(i))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == 0 {
                    format!("{c:<w$}", w = widths[i])
                } else {
                    format!("{c:>w$}", w = widths[i])
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}
