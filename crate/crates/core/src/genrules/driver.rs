//! Runs a JSONL generation corpus (one recipe input per line) through the generators.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::*;
use crate::corpus::AnnotatedSegment;
use crate::error::{Error, Result};

fn all_levels() -> Vec<u8> {
    vec![1, 2, 3]
}

fn both_variants() -> Vec<CommonsenseVariant> {
    vec![CommonsenseVariant::OnlyRefAmbiguous, CommonsenseVariant::BothAmbiguous]
}

/// Recipe-specific inputs, tagged by `recipe` in the JSON line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "recipe", rename_all = "snake_case")]
pub enum Recipe {
    AdditionOmission {
        segment: AnnotatedSegment,
        reference: String,
    },
    DateTime {
        source: String,
        translation: String,
        reference: String,
    },
    UnitConversion {
        source: String,
        translation: String,
        reference: String,
    },
    NumberNe {
        source: String,
        reference: AnnotatedSegment,
        alternatives: Vec<AnnotatedSegment>,
        target: Target,
        edit: Edit,
        #[serde(default = "all_levels")]
        levels: Vec<u8>,
        #[serde(default)]
        name_pool: Option<Vec<String>>,
    },
    Nonsense {
        source: String,
        reference: AnnotatedSegment,
        good: String,
        #[serde(default)]
        vocab: Option<Vec<String>>,
    },
    LexicalOverlap {
        p1: String,
        p2: String,
        adversarial: bool,
        good: String,
        sources: BTreeMap<String, String>,
        #[serde(default)]
        langs: Option<Vec<String>>,
        tgt_lang: String,
    },
    Xnli {
        premise: String,
        hypothesis: String,
        label: XnliLabel,
        good: String,
        sources: BTreeMap<String, String>,
        #[serde(default)]
        langs: Option<Vec<String>>,
        premise_as_reference: bool,
        tgt_lang: String,
    },
    CopySource {
        source: String,
        good: String,
        reference: String,
    },
    WrongLanguage {
        triple: (String, String, String),
        source: String,
        good: String,
        reference: String,
        similar_reference: String,
    },
    Taxonomic {
        source: String,
        reference: String,
        #[serde(default)]
        good: Option<String>,
        mode: TaxonomicMode,
    },
    Punctuation {
        source: String,
        good: String,
        reference: String,
        strategy: PunctuationStrategy,
    },
    Pronoun {
        source: String,
        translation: String,
        reference: String,
        span: (usize, usize),
        correct_form: String,
        category: String,
        strategy: PronounStrategy,
    },
    Connective {
        source: String,
        text: String,
        reference: String,
        sense: ConnectiveSense,
        connective: Connective,
    },
    Ambiguity {
        input: AmbiguityInput,
    },
    Commonsense {
        source: String,
        reference: String,
        good: String,
        incorrect: String,
        #[serde(default = "both_variants")]
        variants: Vec<CommonsenseVariant>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationRecord {
    pub id: String,
    #[serde(default)]
    pub langpair: String,
    #[serde(flatten)]
    pub recipe: Recipe,
}

pub fn parse_generation_corpus(text: &str) -> Result<Vec<GenerationRecord>> {
    let mut out = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let rec: GenerationRecord = serde_json::from_str(line).map_err(|e| Error::parse(line_no, e.to_string()))?;
        if let Some(&first) = seen.get(&rec.id) {
            return Err(Error::DuplicateId {
                id: rec.id,
                first,
                second: line_no,
            });
        }
        seen.insert(rec.id.clone(), line_no);
        out.push(rec);
    }
    Ok(out)
}

/// Synthetic generation corpus bundled with the crate (about 190 records, 6 language pairs).
pub const MINI_CORPUS_JSONL: &str = include_str!("../../data/mini_corpus.jsonl");

pub fn mini_corpus() -> Vec<GenerationRecord> {
    parse_generation_corpus(MINI_CORPUS_JSONL).expect("bundled corpus parses")
}

pub fn load_generation_corpus(path: &Path) -> Result<Vec<GenerationRecord>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_generation_corpus(&text)
}

pub struct Context<'a> {
    pub cfg: &'a GeneratorConfig,
    pub lexicon: &'a Lexicon,
}

impl Context<'_> {
    /// The run-level provenance note: seed and a config fingerprint.
    pub fn provenance(&self) -> String {
        format!("seed={} config=sha256:{}", self.cfg.seed, &self.cfg.fingerprint()[..16])
    }
}

fn meta(rec: &GenerationRecord, source: &str, provenance: &str) -> Meta {
    Meta {
        id: rec.id.clone(),
        langpair: rec.langpair.clone(),
        source: source.to_string(),
        provenance: provenance.to_string(),
    }
}

/// Runs one record. Only an unconfigured wrong-language triple is a hard error.
pub fn run_record(rec: &GenerationRecord, ctx: &Context, provenance: &str) -> Result<GenOutcome> {
    let cfg = ctx.cfg;
    let m = |source: &str| meta(rec, source, provenance);
    Ok(match &rec.recipe {
        Recipe::AdditionOmission { segment, reference } => {
            gen_addition_omission(&m(&segment.text), segment, reference, cfg)
        }
        Recipe::DateTime {
            source,
            translation,
            reference,
        } => {
            let mm = m(source);
            let tgt = mm.target_lang().to_string();
            gen_date_time(&mm, translation, reference, &tgt, cfg)
        }
        Recipe::UnitConversion {
            source,
            translation,
            reference,
        } => units::gen_unit_conversion(&m(source), translation, reference, cfg),
        Recipe::NumberNe {
            source,
            reference,
            alternatives,
            target,
            edit,
            levels,
            name_pool,
        } => {
            let pool = name_pool.as_deref().unwrap_or(&cfg.name_pool);
            let mut out = GenOutcome::default();
            for &level in levels {
                out.merge(gen_number_ne(
                    &m(source),
                    reference,
                    alternatives,
                    *target,
                    level,
                    *edit,
                    pool,
                    cfg,
                ));
            }
            out
        }
        Recipe::Nonsense {
            source,
            reference,
            good,
            vocab,
        } => {
            let vocab = vocab.as_deref().unwrap_or(&cfg.nonsense_vocab);
            gen_nonsense(&m(source), reference, good, vocab, cfg)
        }
        Recipe::LexicalOverlap {
            p1,
            p2,
            adversarial,
            good,
            sources,
            langs,
            tgt_lang,
        } => {
            let langs = langs.clone().unwrap_or_else(|| sources.keys().cloned().collect());
            gen_lexical_overlap(&m(""), p1, p2, *adversarial, good, sources, &langs, tgt_lang)
        }
        Recipe::Xnli {
            premise,
            hypothesis,
            label,
            good,
            sources,
            langs,
            premise_as_reference,
            tgt_lang,
        } => {
            let langs = langs.clone().unwrap_or_else(|| sources.keys().cloned().collect());
            gen_xnli_meaning(
                &m(""),
                premise,
                hypothesis,
                *label,
                good,
                sources,
                &langs,
                *premise_as_reference,
                tgt_lang,
                cfg,
            )
        }
        Recipe::CopySource {
            source,
            good,
            reference,
        } => gen_copy_source(&m(source), source, good, reference),
        Recipe::WrongLanguage {
            triple,
            source,
            good,
            reference,
            similar_reference,
        } => gen_wrong_language(
            &m(source),
            good,
            reference,
            similar_reference,
            (&triple.0, &triple.1, &triple.2),
            cfg,
        )?,
        Recipe::Taxonomic {
            source,
            reference,
            good,
            mode,
        } => gen_taxonomic_substitution(&m(source), reference, good.as_deref(), ctx.lexicon, *mode, cfg),
        Recipe::Punctuation {
            source,
            good,
            reference,
            strategy,
        } => gen_punctuation(&m(source), good, reference, *strategy),
        Recipe::Pronoun {
            source,
            translation,
            reference,
            span,
            correct_form,
            category,
            strategy,
        } => gen_pronoun_error(
            &m(source),
            translation,
            reference,
            *span,
            correct_form,
            category,
            *strategy,
            cfg,
        ),
        Recipe::Connective {
            source,
            text,
            reference,
            sense,
            connective,
        } => gen_connective(&m(source), text, reference, *sense, *connective, cfg),
        Recipe::Ambiguity { input } => gen_ambiguity_assembly(&m(""), input),
        Recipe::Commonsense {
            source,
            reference,
            good,
            incorrect,
            variants,
        } => {
            let patterns = cfg.compiled_clause_patterns();
            let mut out = GenOutcome::default();
            for &v in variants {
                out.merge(gen_commonsense_variants(
                    &m(source),
                    source,
                    reference,
                    good,
                    incorrect,
                    &patterns,
                    v,
                ));
            }
            out
        }
    })
}

/// Result of a whole-corpus run.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct GenerationRun {
    pub outcome: GenOutcome,
    /// Emitted examples dropped by the phenomenon filter (not skips).
    pub filtered_out: usize,
}

impl GenerationRun {
    /// `attempted == emitted + filtered + skipped`.
    pub fn is_conserved(&self) -> bool {
        self.outcome.attempted == self.outcome.examples.len() + self.filtered_out + self.outcome.skipped_total()
    }
}

/// Generates from every record in input order; `filter` keeps only the named phenomena.
pub fn generate(
    records: &[GenerationRecord],
    ctx: &Context,
    filter: Option<&BTreeSet<String>>,
) -> Result<GenerationRun> {
    let provenance = ctx.provenance();
    let mut run = GenerationRun::default();
    for rec in records {
        let mut out = run_record(rec, ctx, &provenance)?;
        if let Some(keep) = filter {
            let before = out.examples.len();
            out.examples.retain(|e| keep.contains(&e.phenomenon));
            run.filtered_out += before - out.examples.len();
        }
        run.outcome.merge(out);
    }
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip_and_run() {
        let line = r#"{"id":"dt1","langpair":"de-en","recipe":"date_time","source":"Im November.","translation":"In November.","reference":"In November."}"#;
        let recs = parse_generation_corpus(line).unwrap();
        assert_eq!(recs.len(), 1);
        let back = serde_json::to_string(&recs[0]).unwrap();
        assert_eq!(parse_generation_corpus(&back).unwrap(), recs);
        let cfg = GeneratorConfig::default();
        let lex = Lexicon::bundled();
        let ctx = Context {
            cfg: &cfg,
            lexicon: &lex,
        };
        let run = generate(&recs, &ctx, None).unwrap();
        assert_eq!(run.outcome.examples.len(), 1);
        assert!(run.outcome.examples[0].provenance.contains("seed=0"));
        let only = BTreeSet::from(["nonsense".to_string()]);
        let filtered = generate(&recs, &ctx, Some(&only)).unwrap();
        assert_eq!((filtered.outcome.examples.len(), filtered.filtered_out), (0, 1));
        assert!(filtered.is_conserved());
    }

    #[test]
    fn corpus_errors() {
        assert!(matches!(
            parse_generation_corpus("{\"id\":\"a\"}"),
            Err(Error::Parse { line: 1, .. })
        ));
        let l = r#"{"id":"a","recipe":"copy_source","source":"s","good":"g","reference":"r"}"#;
        assert!(matches!(
            parse_generation_corpus(&format!("{l}\n{l}")),
            Err(Error::DuplicateId {
                first: 1,
                second: 2,
                ..
            })
        ));
    }

    #[test]
    fn mini_corpus_yields_valid_examples() {
        let cfg = GeneratorConfig::default();
        let lex = Lexicon::bundled();
        let run = generate(
            &mini_corpus(),
            &Context {
                cfg: &cfg,
                lexicon: &lex,
            },
            None,
        )
        .unwrap();
        assert!(run.is_conserved());
        let tax = crate::corpus::Taxonomy::aces();
        for e in &run.outcome.examples {
            assert!(crate::corpus::validate(e, &tax).is_empty(), "{e:?}");
        }
        let ids: BTreeSet<&str> = run.outcome.examples.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids.len(), run.outcome.examples.len());
        let langpairs: BTreeSet<String> = mini_corpus()
            .into_iter()
            .map(|r| r.langpair)
            .filter(|l| !l.is_empty())
            .collect();
        assert_eq!(langpairs.len(), 6, "{langpairs:?}");
    }

    #[test]
    fn unconfigured_triple_is_an_error() {
        let l = r#"{"id":"w","recipe":"wrong_language","triple":["en","de","zh"],"source":"s","good":"g","reference":"r","similar_reference":"x"}"#;
        let recs = parse_generation_corpus(l).unwrap();
        let cfg = GeneratorConfig::default();
        let lex = Lexicon::bundled();
        assert!(generate(
            &recs,
            &Context {
                cfg: &cfg,
                lexicon: &lex
            },
            None
        )
        .is_err());
    }
}
