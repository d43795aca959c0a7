use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde_json::Value;

use super::{validate, AnnotatedSegment, ChallengeExample, Taxonomy};
use crate::error::{Error, Result};

/// On-disk layout of a challenge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Tsv,
}

impl Format {
    /// Guesses the format from a file extension, defaulting to JSONL.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("tsv") => Format::Tsv,
            _ => Format::Jsonl,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "tsv" => Ok(Format::Tsv),
            other => Err(Error::Config(format!(
                "unknown format `{other}` (expected jsonl or tsv)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Jsonl => "jsonl",
            Format::Tsv => "tsv",
        })
    }
}

const FIELDS: [&str; 9] = [
    "id",
    "source",
    "reference",
    "good_translation",
    "incorrect_translation",
    "phenomenon",
    "langpair",
    "flags",
    "provenance",
];

/// Parses and validates a challenge set held in memory. Records keep file order.
pub fn parse_challenge_set(text: &str, format: Format, taxonomy: &Taxonomy) -> Result<Vec<ChallengeExample>> {
    let records = match format {
        Format::Jsonl => parse_jsonl_records(text)?,
        Format::Tsv => parse_tsv_records(text)?,
    };
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut out = Vec::with_capacity(records.len());
    for (line, ex) in records {
        if let Some(&first) = seen.get(&ex.id) {
            return Err(Error::DuplicateId {
                id: ex.id,
                first,
                second: line,
            });
        }
        let violations = validate(&ex, taxonomy);
        if !violations.is_empty() {
            return Err(Error::Invalid {
                line,
                id: ex.id,
                violations,
            });
        }
        seen.insert(ex.id.clone(), line);
        out.push(ex);
    }
    Ok(out)
}

pub fn load_challenge_set(path: &Path, format: Format, taxonomy: &Taxonomy) -> Result<Vec<ChallengeExample>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_challenge_set(&text, format, taxonomy)
}

fn parse_jsonl_records(text: &str) -> Result<Vec<(usize, ChallengeExample)>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = serde_json::from_str(line).map_err(|e| Error::parse(line_no, e.to_string()))?;
        let Value::Object(map) = value else {
            return Err(Error::parse(line_no, "expected a JSON object"));
        };
        let get = |field: &str| -> Result<String> {
            match map.get(field) {
                Some(Value::String(s)) => Ok(s.clone()),
                Some(_) => Err(Error::parse(line_no, format!("field `{field}` must be a string"))),
                None => Err(Error::MissingField {
                    line: line_no,
                    field: field.to_string(),
                }),
            }
        };
        let flags = match map.get("flags") {
            None | Some(Value::Null) => BTreeSet::new(),
            Some(Value::Array(items)) => items
                .iter()
                .map(|v| {
                    v.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::parse(line_no, "flags must be strings"))
                })
                .collect::<Result<_>>()?,
            Some(_) => return Err(Error::parse(line_no, "field `flags` must be an array")),
        };
        let provenance = match map.get("provenance") {
            None | Some(Value::Null) => String::new(),
            Some(_) => get("provenance")?,
        };
        out.push((
            line_no,
            ChallengeExample {
                id: get("id")?,
                source: get("source")?,
                reference: get("reference")?,
                good_translation: get("good_translation")?,
                incorrect_translation: get("incorrect_translation")?,
                phenomenon: get("phenomenon")?,
                langpair: get("langpair")?,
                flags,
                provenance,
            },
        ));
    }
    Ok(out)
}

fn parse_tsv_records(text: &str) -> Result<Vec<(usize, ChallengeExample)>> {
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| l.starts_with('#'));
    let header = FIELDS.join("\t");
    match lines.next() {
        Some((_, h)) if h == header => {}
        Some((i, _)) => return Err(Error::parse(i + 1, format!("expected header `{header}`"))),
        None => return Ok(Vec::new()),
    }
    let mut out = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() < FIELDS.len() {
            return Err(Error::MissingField {
                line: line_no,
                field: FIELDS[cols.len()].to_string(),
            });
        }
        if cols.len() > FIELDS.len() {
            return Err(Error::parse(
                line_no,
                format!("expected {} columns, found {}", FIELDS.len(), cols.len()),
            ));
        }
        let flags = cols[7]
            .split(',')
            .filter(|f| !f.is_empty())
            .map(str::to_string)
            .collect();
        out.push((
            line_no,
            ChallengeExample {
                id: cols[0].to_string(),
                source: cols[1].to_string(),
                reference: cols[2].to_string(),
                good_translation: cols[3].to_string(),
                incorrect_translation: cols[4].to_string(),
                phenomenon: cols[5].to_string(),
                langpair: cols[6].to_string(),
                flags,
                provenance: cols[8].to_string(),
            },
        ));
    }
    Ok(out)
}

/// Serializes examples with keys in a fixed order; the output reloads field-for-field.
pub fn render_challenge_set(examples: &[ChallengeExample], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Jsonl => {
            for ex in examples {
                let line =
                    serde_json::to_string(ex).map_err(|e| Error::Config(format!("serializing `{}`: {e}", ex.id)))?;
                out.push_str(&line);
                out.push('\n');
            }
        }
        Format::Tsv => {
            out.push_str(&FIELDS.join("\t"));
            out.push('\n');
            for ex in examples {
                let flags = ex.flags.iter().cloned().collect::<Vec<_>>().join(",");
                let cols: [(&'static str, &str); 9] = [
                    ("id", &ex.id),
                    ("source", &ex.source),
                    ("reference", &ex.reference),
                    ("good_translation", &ex.good_translation),
                    ("incorrect_translation", &ex.incorrect_translation),
                    ("phenomenon", &ex.phenomenon),
                    ("langpair", &ex.langpair),
                    ("flags", &flags),
                    ("provenance", &ex.provenance),
                ];
                for (name, value) in cols {
                    if value.contains(['\t', '\n', '\r']) {
                        return Err(Error::TsvUnsafe {
                            id: ex.id.clone(),
                            field: name,
                        });
                    }
                }
                if ex.flags.iter().any(|f| f.contains(',')) {
                    return Err(Error::TsvUnsafe {
                        id: ex.id.clone(),
                        field: "flags",
                    });
                }
                out.push_str(&cols.map(|(_, v)| v).join("\t"));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

pub fn save_challenge_set(examples: &[ChallengeExample], path: &Path, format: Format) -> Result<()> {
    let text = render_challenge_set(examples, format)?;
    write_atomic(path, text.as_bytes())
}

/// Writes to a temporary file in the destination directory, then renames over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// Parses a JSONL annotated corpus, rejecting segments with broken span invariants.
pub fn parse_annotated_jsonl(text: &str) -> Result<Vec<AnnotatedSegment>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let seg: AnnotatedSegment = serde_json::from_str(line).map_err(|e| Error::parse(line_no, e.to_string()))?;
        let v = seg.violations();
        if !v.is_empty() {
            return Err(Error::parse(line_no, v.join("; ")));
        }
        out.push(seg);
    }
    Ok(out)
}

pub fn load_annotated(path: &Path) -> Result<Vec<AnnotatedSegment>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_annotated_jsonl(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::sample_example;

    #[test]
    fn single_record_round_trips_byte_identically() {
        let tax = Taxonomy::aces();
        let mut ex = sample_example("ex1");
        ex.flags.insert("needs_manual_review".into());
        for format in [Format::Jsonl, Format::Tsv] {
            let text = render_challenge_set(std::slice::from_ref(&ex), format).unwrap();
            let back = parse_challenge_set(&text, format, &tax).unwrap();
            assert_eq!(back, vec![ex.clone()]);
            assert_eq!(render_challenge_set(&back, format).unwrap(), text);
        }
    }

    #[test]
    fn empty_sets() {
        assert_eq!(render_challenge_set(&[], Format::Jsonl).unwrap(), "");
        assert_eq!(
            render_challenge_set(&[], Format::Tsv).unwrap(),
            format!("{}\n", FIELDS.join("\t"))
        );
        let tax = Taxonomy::aces();
        assert!(parse_challenge_set("", Format::Jsonl, &tax).unwrap().is_empty());
        assert!(parse_challenge_set("", Format::Tsv, &tax).unwrap().is_empty());
    }

    #[test]
    fn good_equals_incorrect_rejected() {
        let mut ex = sample_example("ex1");
        ex.incorrect_translation = ex.good_translation.clone();
        let text = serde_json::to_string(&ex).unwrap();
        let err = parse_challenge_set(&text, Format::Jsonl, &Taxonomy::aces()).unwrap_err();
        assert!(matches!(err, Error::Invalid { line: 1, .. }), "{err}");
    }

    #[test]
    fn missing_field_names_line_and_field() {
        let good = serde_json::to_string(&sample_example("a")).unwrap();
        let bad = r#"{"id":"b","source":"x","reference":"y","good_translation":"z","phenomenon":"nonsense","langpair":"de-en"}"#;
        let text = format!("{good}\n{bad}\n");
        match parse_challenge_set(&text, Format::Jsonl, &Taxonomy::aces()) {
            Err(Error::MissingField { line, field }) => {
                assert_eq!(line, 2);
                assert_eq!(field, "incorrect_translation");
            }
            other => panic!("unexpected {other:?}"),
        }
        let tsv = format!("{}\na\tb\tc\n", FIELDS.join("\t"));
        match parse_challenge_set(&tsv, Format::Tsv, &Taxonomy::aces()) {
            Err(Error::MissingField { line, field }) => {
                assert_eq!(line, 2);
                assert_eq!(field, "good_translation");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_ids_name_both_lines() {
        let a = serde_json::to_string(&sample_example("dup")).unwrap();
        let other = serde_json::to_string(&sample_example("x")).unwrap();
        let text = format!("{a}\n{other}\n{a}\n");
        match parse_challenge_set(&text, Format::Jsonl, &Taxonomy::aces()) {
            Err(Error::DuplicateId { id, first, second }) => {
                assert_eq!((id.as_str(), first, second), ("dup", 1, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tsv_rejects_embedded_tabs() {
        let mut ex = sample_example("a");
        ex.source = "a\tb".into();
        assert!(matches!(
            render_challenge_set(&[ex], Format::Tsv),
            Err(Error::TsvUnsafe { field: "source", .. })
        ));
    }

    #[test]
    fn save_and_load_via_filesystem() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("set.jsonl");
        let exs = vec![sample_example("a"), sample_example("b")];
        save_challenge_set(&exs, &path, Format::Jsonl).unwrap();
        assert_eq!(
            load_challenge_set(&path, Format::Jsonl, &Taxonomy::aces()).unwrap(),
            exs
        );
        let missing = dir.path().join("nope/set.jsonl");
        assert!(matches!(
            save_challenge_set(&exs, &missing, Format::Jsonl),
            Err(Error::Io { .. })
        ));
    }
}
