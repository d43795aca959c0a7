use std::collections::BTreeMap;
use std::path::Path;

use crate::corpus::write_atomic;
use crate::error::{Error, Result};

pub const SCORE_HEADER: &str = "id\tscore_good\tscore_incorrect";

/// Per-example scores of one metric: id -> (score_good, score_incorrect).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MetricScoreTable {
    pub metric_name: String,
    pub rows: BTreeMap<String, (f64, f64)>,
}

impl MetricScoreTable {
    pub fn new(metric_name: impl Into<String>) -> Self {
        MetricScoreTable {
            metric_name: metric_name.into(),
            rows: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn parse_score(value: &str, column: &str, line: usize) -> Result<f64> {
    let v: f64 = value
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("non-numeric {column} `{value}`")))?;
    if !v.is_finite() {
        return Err(Error::parse(line, format!("non-finite {column} `{value}`")));
    }
    Ok(v)
}

/// Parses a score TSV. Lines starting with `#` are comments.
pub fn parse_scores(text: &str, metric_name: &str) -> Result<MetricScoreTable> {
    let mut table = MetricScoreTable::new(metric_name);
    let mut first_seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut header_seen = false;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        if !header_seen {
            if line.trim_end_matches('\r') != SCORE_HEADER {
                return Err(Error::parse(line_no, format!("expected header `{SCORE_HEADER}`")));
            }
            header_seen = true;
            continue;
        }
        let cols: Vec<&str> = line.trim_end_matches('\r').split('\t').collect();
        match cols.len() {
            1 => return Err(Error::parse(line_no, "missing column `score_good`")),
            2 => return Err(Error::parse(line_no, "missing column `score_incorrect`")),
            3 => {}
            n => return Err(Error::parse(line_no, format!("expected 3 columns, found {n}"))),
        }
        let id = cols[0].to_string();
        if id.is_empty() {
            return Err(Error::parse(line_no, "empty id"));
        }
        let good = parse_score(cols[1], "score_good", line_no)?;
        let bad = parse_score(cols[2], "score_incorrect", line_no)?;
        if let Some(&first) = first_seen.get(&id) {
            return Err(Error::DuplicateId {
                id,
                first,
                second: line_no,
            });
        }
        first_seen.insert(id.clone(), line_no);
        table.rows.insert(id, (good, bad));
    }
    if !header_seen {
        return Err(Error::parse(1, format!("missing header `{SCORE_HEADER}`")));
    }
    Ok(table)
}

/// Loads a score file; the metric name defaults to the file stem.
pub fn load_scores(path: &Path, metric_name: Option<&str>) -> Result<MetricScoreTable> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let name = match metric_name {
        Some(n) => n.to_string(),
        None => path
            .file_stem()
            .and_then(|s| s.to_str())
            .ok_or_else(|| Error::Config(format!("cannot derive metric name from {}", path.display())))?
            .to_string(),
    };
    parse_scores(&text, &name)
}

/// Renders full-precision scores; `provenance` becomes a leading `# ` line.
pub fn render_scores(table: &MetricScoreTable, provenance: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(p) = provenance {
        out.push_str(&format!("# {}\n", p.replace('\n', " ")));
    }
    out.push_str(SCORE_HEADER);
    out.push('\n');
    for (id, (g, b)) in &table.rows {
        out.push_str(&format!("{id}\t{g}\t{b}\n"));
    }
    out
}

pub fn save_scores(table: &MetricScoreTable, path: &Path, provenance: Option<&str>) -> Result<()> {
    if let Some(id) = table.rows.keys().find(|id| id.contains(['\t', '\n', '\r'])) {
        return Err(Error::TsvUnsafe {
            id: id.clone(),
            field: "id",
        });
    }
    write_atomic(path, render_scores(table, provenance).as_bytes())
}
