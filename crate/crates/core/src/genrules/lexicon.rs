use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::seq::IndexedRandom;
use regex::Regex;
use serde::{Deserialize, Serialize};

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta};
use crate::error::{Error, Result};
use crate::text::match_initial_case;

pub const DEFAULT_LEXICON_TSV: &str = include_str!("../../data/lexicon.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Hypernym,
    Hyponym,
    Cohyponym,
    Antonym,
    Synonym,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Hypernym => "hypernym",
            Relation::Hyponym => "hyponym",
            Relation::Cohyponym => "cohyponym",
            Relation::Antonym => "antonym",
            Relation::Synonym => "synonym",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "hypernym" => Relation::Hypernym,
            "hyponym" => Relation::Hyponym,
            "cohyponym" => Relation::Cohyponym,
            "antonym" => Relation::Antonym,
            "synonym" => Relation::Synonym,
            other => return Err(format!("unknown relation `{other}`")),
        })
    }
}

/// `word → relation → targets`, targets in file order (the first is the first sense).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<(String, Relation), Vec<String>>,
}

impl Lexicon {
    pub fn parse_tsv(text: &str) -> Result<Self> {
        let mut entries: BTreeMap<(String, Relation), Vec<String>> = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') || line == "word\trelation\ttarget" {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            let [word, rel, target] = cols[..] else {
                return Err(Error::parse(
                    line_no,
                    format!("expected 3 columns, found {}", cols.len()),
                ));
            };
            if word.trim().is_empty() || target.trim().is_empty() {
                return Err(Error::parse(line_no, "empty word or target"));
            }
            let rel: Relation = rel.parse().map_err(|e: String| Error::parse(line_no, e))?;
            entries
                .entry((word.to_lowercase(), rel))
                .or_default()
                .push(target.to_string());
        }
        Ok(Lexicon { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse_tsv(&text)
    }

    pub fn bundled() -> Self {
        Self::parse_tsv(DEFAULT_LEXICON_TSV).expect("bundled lexicon parses")
    }

    pub fn first(&self, word: &str, rel: Relation) -> Option<&str> {
        self.entries
            .get(&(word.to_lowercase(), rel))
            .and_then(|v| v.first())
            .map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaxonomicMode {
    Overtranslation,
    Undertranslation,
    HypernymVsHyponym,
    HypernymVsDistractor,
    AntonymNoun,
}

impl TaxonomicMode {
    fn relations(self) -> &'static [Relation] {
        use Relation::*;
        match self {
            TaxonomicMode::Overtranslation => &[Hyponym],
            TaxonomicMode::Undertranslation => &[Hypernym],
            TaxonomicMode::HypernymVsHyponym => &[Hypernym, Hyponym],
            TaxonomicMode::HypernymVsDistractor => &[Hypernym, Cohyponym],
            TaxonomicMode::AntonymNoun => &[Antonym],
        }
    }

    fn phenomenon(self) -> &'static str {
        match self {
            TaxonomicMode::Overtranslation => "overtranslation",
            TaxonomicMode::Undertranslation => "undertranslation",
            TaxonomicMode::HypernymVsHyponym => "real-world-knowledge-hypernym-vs-hyponym",
            TaxonomicMode::HypernymVsDistractor => "real-world-knowledge-hypernym-vs-distractor",
            TaxonomicMode::AntonymNoun => "antonym-replacement",
        }
    }

    fn needs_good_alt(self) -> bool {
        matches!(
            self,
            TaxonomicMode::Overtranslation | TaxonomicMode::Undertranslation | TaxonomicMode::AntonymNoun
        )
    }
}

fn word_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"\p{L}+(?:['’-]\p{L}+)*").expect("static regex"))
}

pub fn gen_taxonomic_substitution(
    meta: &Meta,
    reference: &str,
    good_alt: Option<&str>,
    lexicon: &Lexicon,
    mode: TaxonomicMode,
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    if mode.needs_good_alt() && good_alt.is_none() {
        out.skip(reason::NO_GOOD_ALT, 1);
        return out;
    }
    let eligible: Vec<regex::Match> = word_re()
        .find_iter(reference)
        .filter(|m| mode.relations().iter().all(|&r| lexicon.first(m.as_str(), r).is_some()))
        .collect();
    let mut rng = meta.rng(cfg, mode.phenomenon());
    let Some(m) = eligible.choose(&mut rng) else {
        out.skip(reason::NO_ELIGIBLE_NOUN, 1);
        return out;
    };
    let with = |rel: Relation| -> String {
        let target = lexicon.first(m.as_str(), rel).expect("eligible");
        let mut s = reference.to_string();
        s.replace_range(m.range(), &match_initial_case(target, m.as_str()));
        s
    };
    let (good, incorrect) = match mode {
        TaxonomicMode::Overtranslation => (good_alt.unwrap_or_default().to_string(), with(Relation::Hyponym)),
        TaxonomicMode::Undertranslation => (good_alt.unwrap_or_default().to_string(), with(Relation::Hypernym)),
        TaxonomicMode::HypernymVsHyponym => (with(Relation::Hypernym), with(Relation::Hyponym)),
        TaxonomicMode::HypernymVsDistractor => (with(Relation::Hypernym), with(Relation::Cohyponym)),
        TaxonomicMode::AntonymNoun => (good_alt.unwrap_or_default().to_string(), with(Relation::Antonym)),
    };
    out.push(
        meta,
        Draft {
            id: format!("{}:{}", meta.id, mode.phenomenon()),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.to_string(),
            good,
            incorrect,
            phenomenon: mode.phenomenon().into(),
            recipe: format!("taxonomic {:?} on `{}`", mode, m.as_str()).to_lowercase(),
        },
        &[],
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(reference: &str, alt: Option<&str>, mode: TaxonomicMode) -> GenOutcome {
        gen_taxonomic_substitution(
            &Meta::new("t1", "de-en", "…"),
            reference,
            alt,
            &Lexicon::bundled(),
            mode,
            &GeneratorConfig::default(),
        )
    }

    #[test]
    fn son_undertranslation() {
        let out = run(
            "My son is six.",
            Some("My boy is six."),
            TaxonomicMode::Undertranslation,
        );
        assert_eq!(out.examples[0].incorrect_translation, "My male offspring is six.");
        assert_eq!(out.examples[0].good_translation, "My boy is six.");
    }

    #[test]
    fn dog_real_world_modes() {
        let h = run("The dog barked.", None, TaxonomicMode::HypernymVsHyponym);
        assert_eq!(h.examples[0].good_translation, "The pet barked.");
        assert_eq!(h.examples[0].incorrect_translation, "The labrador barked.");
        let d = run("Dog owners agree.", None, TaxonomicMode::HypernymVsDistractor);
        assert_eq!(d.examples[0].good_translation, "Pet owners agree.");
        assert_eq!(d.examples[0].incorrect_translation, "Cat owners agree.");
    }

    #[test]
    fn skips_with_reason() {
        assert_eq!(
            run("A table.", Some("A desk."), TaxonomicMode::AntonymNoun).skipped[reason::NO_ELIGIBLE_NOUN],
            1
        );
        assert_eq!(
            run("The dog.", None, TaxonomicMode::Overtranslation).skipped[reason::NO_GOOD_ALT],
            1
        );
    }

    #[test]
    fn first_sense_and_parse_errors() {
        let lex = Lexicon::parse_tsv("bank\thypernym\tinstitution\nbank\thypernym\tslope\n").unwrap();
        assert_eq!(lex.first("Bank", Relation::Hypernym), Some("institution"));
        assert!(Lexicon::parse_tsv("bank\thypernym").is_err());
        assert!(Lexicon::parse_tsv("bank\tcousin\tx").is_err());
    }
}
