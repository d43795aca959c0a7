//! Replays the checked-in fuzz seeds (and mutations of them) through the parsers,
//! checking the same properties as the fuzz targets.

use std::path::{Path, PathBuf};

use acesforge_core::corpus::{parse_annotated_jsonl, parse_challenge_set, render_challenge_set, Format, Taxonomy};
use acesforge_core::evalharness::{parse_category_taus, parse_scores, render_scores};
use acesforge_core::genrules::driver::{parse_generation_corpus, run_record, Context};
use acesforge_core::genrules::{GeneratorConfig, Lexicon};
use proptest::prelude::*;

const TARGETS: [&str; 9] = [
    "annotated_jsonl",
    "category_taus",
    "challenge_jsonl",
    "challenge_tsv",
    "config_toml",
    "generation_corpus",
    "lexicon_tsv",
    "scores",
    "taxonomy_tsv",
];

fn corpus_dir(target: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target)
}

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let mut out: Vec<(String, Vec<u8>)> = std::fs::read_dir(corpus_dir(target))
        .unwrap_or_else(|e| panic!("{target}: {e}"))
        .map(|e| {
            let path = e.unwrap().path();
            (
                path.file_name().unwrap().to_string_lossy().into_owned(),
                std::fs::read(&path).unwrap(),
            )
        })
        .collect();
    out.sort();
    out
}

/// Returns whether the input parsed; panics on any property violation.
fn exercise(target: &str, data: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(data) else {
        return false;
    };
    let tax = Taxonomy::aces();
    match target {
        "challenge_jsonl" | "challenge_tsv" => {
            let format = if target == "challenge_tsv" {
                Format::Tsv
            } else {
                Format::Jsonl
            };
            let Ok(examples) = parse_challenge_set(text, format, &tax) else {
                return false;
            };
            if let Ok(again) = render_challenge_set(&examples, format) {
                assert_eq!(parse_challenge_set(&again, format, &tax).unwrap(), examples);
            }
            true
        }
        "scores" => {
            let Ok(table) = parse_scores(text, "m") else {
                return false;
            };
            assert_eq!(parse_scores(&render_scores(&table, None), "m").unwrap(), table);
            true
        }
        "category_taus" => parse_category_taus(text).is_ok(),
        "generation_corpus" => {
            let Ok(records) = parse_generation_corpus(text) else {
                return false;
            };
            let cfg = GeneratorConfig::default();
            let lexicon = Lexicon::bundled();
            let ctx = Context {
                cfg: &cfg,
                lexicon: &lexicon,
            };
            for rec in &records {
                if let Ok(out) = run_record(rec, &ctx, "seed") {
                    assert!(out.is_conserved());
                }
            }
            true
        }
        "annotated_jsonl" => {
            let Ok(segments) = parse_annotated_jsonl(text) else {
                return false;
            };
            for s in &segments {
                let _ = s.subword_tokens();
            }
            true
        }
        "taxonomy_tsv" => {
            let Ok(t) = Taxonomy::parse_tsv(text) else { return false };
            assert_eq!(Taxonomy::parse_tsv(&t.to_tsv()).unwrap(), t);
            true
        }
        "lexicon_tsv" => Lexicon::parse_tsv(text).is_ok(),
        "config_toml" => {
            let Ok(cfg) = GeneratorConfig::from_toml(text) else {
                return false;
            };
            let _ = cfg.compiled_clause_patterns();
            true
        }
        other => panic!("unknown target {other}"),
    }
}

#[test]
fn every_target_has_seeds_and_valid_ones_parse() {
    for target in TARGETS {
        let seeds = seeds(target);
        assert!(!seeds.is_empty(), "{target} has no seeds");
        let parsed = seeds.iter().filter(|(_, data)| exercise(target, data)).count();
        assert!(parsed > 0, "no seed of {target} parses");
    }
}

#[test]
fn malformed_seeds_are_rejected() {
    let rejected = [
        ("challenge_jsonl", "unknown_phenomenon"),
        ("scores", "nonfinite"),
        ("generation_corpus", "duplicate"),
        ("taxonomy_tsv", "bad_subcategory"),
    ];
    for (target, name) in rejected {
        let data = std::fs::read(corpus_dir(target).join(name)).unwrap();
        assert!(!exercise(target, &data), "{target}/{name} should be rejected");
    }
}

#[derive(Debug, Clone)]
enum Mutation {
    Flip(usize, u8),
    Truncate(usize),
    Insert(usize, u8),
    DuplicateLine(usize),
}

fn mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        (any::<usize>(), any::<u8>()).prop_map(|(i, b)| Mutation::Flip(i, b)),
        any::<usize>().prop_map(Mutation::Truncate),
        (any::<usize>(), prop::sample::select(b"\t\n\"#{}[]:,-0.e \\".to_vec()))
            .prop_map(|(i, b)| Mutation::Insert(i, b)),
        any::<usize>().prop_map(Mutation::DuplicateLine),
    ]
}

fn apply(data: &[u8], muts: &[Mutation]) -> Vec<u8> {
    let mut d = data.to_vec();
    for m in muts {
        if d.is_empty() {
            break;
        }
        match *m {
            Mutation::Flip(i, b) => {
                let i = i % d.len();
                d[i] ^= b;
            }
            Mutation::Truncate(i) => d.truncate(i % d.len()),
            Mutation::Insert(i, b) => d.insert(i % (d.len() + 1), b),
            Mutation::DuplicateLine(i) => {
                let text = String::from_utf8_lossy(&d).into_owned();
                let lines: Vec<&str> = text.lines().collect();
                if !lines.is_empty() {
                    let line = lines[i % lines.len()];
                    d.extend_from_slice(format!("\n{line}\n").as_bytes());
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mutated_seeds_never_panic(t in 0..TARGETS.len(), pick in any::<usize>(), muts in prop::collection::vec(mutation(), 1..6)) {
        let target = TARGETS[t];
        let seeds = seeds(target);
        let (_, data) = &seeds[pick % seeds.len()];
        exercise(target, &apply(data, &muts));
    }
}
