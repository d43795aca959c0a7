//! Phenomenon taxonomy: leaf phenomenon -> (mistranslation subcategory, top-level category).

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Top-level error category. Nine accuracy categories plus punctuation (fluency).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Category {
    Addition,
    Omission,
    Mistranslation,
    Untranslated,
    DoNotTranslate,
    Overtranslation,
    Undertranslation,
    RealWorldKnowledge,
    WrongLanguage,
    Punctuation,
}

impl Category {
    /// Column order used in every report.
    pub const ALL: [Category; 10] = [
        Category::Addition,
        Category::Omission,
        Category::Mistranslation,
        Category::Untranslated,
        Category::DoNotTranslate,
        Category::Overtranslation,
        Category::Undertranslation,
        Category::RealWorldKnowledge,
        Category::WrongLanguage,
        Category::Punctuation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Addition => "addition",
            Category::Omission => "omission",
            Category::Mistranslation => "mistranslation",
            Category::Untranslated => "untranslated",
            Category::DoNotTranslate => "do-not-translate",
            Category::Overtranslation => "overtranslation",
            Category::Undertranslation => "undertranslation",
            Category::RealWorldKnowledge => "real-world-knowledge",
            Category::WrongLanguage => "wrong-language",
            Category::Punctuation => "punctuation",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Category::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown category `{s}`")))
    }
}

/// Subcategory of mistranslation; `NotApplicable` for every other category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Subcategory {
    Discourse,
    Hallucination,
    Other,
    NotApplicable,
}

impl Subcategory {
    pub const MISTRANSLATION: [Subcategory; 3] =
        [Subcategory::Discourse, Subcategory::Hallucination, Subcategory::Other];

    pub fn as_str(self) -> &'static str {
        match self {
            Subcategory::Discourse => "discourse",
            Subcategory::Hallucination => "hallucination",
            Subcategory::Other => "other",
            Subcategory::NotApplicable => "n/a",
        }
    }
}

impl fmt::Display for Subcategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Subcategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discourse" => Ok(Subcategory::Discourse),
            "hallucination" => Ok(Subcategory::Hallucination),
            "other" => Ok(Subcategory::Other),
            "n/a" => Ok(Subcategory::NotApplicable),
            _ => Err(Error::Config(format!("unknown subcategory `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub subcategory: Subcategory,
    pub category: Category,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Taxonomy {
    leaves: BTreeMap<String, Placement>,
}

use Category as C;
use Subcategory as S;

const ACES_LEAVES: &[(&str, Subcategory, Category)] = &[
    ("addition", S::NotApplicable, C::Addition),
    ("omission", S::NotApplicable, C::Omission),
    // mistranslation / discourse
    (
        "ambiguous-translation-wrong-discourse-connective-while-contrast",
        S::Discourse,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-discourse-connective-while-temporal",
        S::Discourse,
        C::Mistranslation,
    ),
    ("anaphoric_group_it-they:deletion", S::Discourse, C::Mistranslation),
    ("anaphoric_group_it-they:substitution", S::Discourse, C::Mistranslation),
    (
        "anaphoric_intra_non-subject_it:deletion",
        S::Discourse,
        C::Mistranslation,
    ),
    (
        "anaphoric_intra_non-subject_it:substitution",
        S::Discourse,
        C::Mistranslation,
    ),
    ("anaphoric_intra_subject_it:deletion", S::Discourse, C::Mistranslation),
    (
        "anaphoric_intra_subject_it:substitution",
        S::Discourse,
        C::Mistranslation,
    ),
    ("anaphoric_intra_they:deletion", S::Discourse, C::Mistranslation),
    ("anaphoric_intra_they:substitution", S::Discourse, C::Mistranslation),
    ("anaphoric_singular_they:deletion", S::Discourse, C::Mistranslation),
    ("anaphoric_singular_they:substitution", S::Discourse, C::Mistranslation),
    ("pleonastic_it:deletion", S::Discourse, C::Mistranslation),
    (
        "pleonastic_it:substitution_pro_trans_different_to_ref",
        S::Discourse,
        C::Mistranslation,
    ),
    ("coreference-based-on-commonsense", S::Discourse, C::Mistranslation),
    // mistranslation / hallucination
    ("hallucination-date-time", S::Hallucination, C::Mistranslation),
    (
        "hallucination-named-entity-level-1",
        S::Hallucination,
        C::Mistranslation,
    ),
    (
        "hallucination-named-entity-level-2",
        S::Hallucination,
        C::Mistranslation,
    ),
    (
        "hallucination-named-entity-level-3",
        S::Hallucination,
        C::Mistranslation,
    ),
    ("hallucination-number-level-1", S::Hallucination, C::Mistranslation),
    ("hallucination-number-level-2", S::Hallucination, C::Mistranslation),
    ("hallucination-number-level-3", S::Hallucination, C::Mistranslation),
    (
        "hallucination-unit-conversion-amount-matches-ref",
        S::Hallucination,
        C::Mistranslation,
    ),
    (
        "hallucination-unit-conversion-unit-matches-ref",
        S::Hallucination,
        C::Mistranslation,
    ),
    (
        "hallucination-real-data-vs-ref-word",
        S::Hallucination,
        C::Mistranslation,
    ),
    (
        "hallucination-real-data-vs-synonym",
        S::Hallucination,
        C::Mistranslation,
    ),
    ("nonsense", S::Hallucination, C::Mistranslation),
    // mistranslation / other
    (
        "ambiguous-translation-wrong-discourse-connective-since-causal",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-discourse-connective-since-temporal",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-gender-female-anti",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-gender-female-pro",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-gender-male-anti",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-gender-male-pro",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-sense-frequent",
        S::Other,
        C::Mistranslation,
    ),
    (
        "ambiguous-translation-wrong-sense-infrequent",
        S::Other,
        C::Mistranslation,
    ),
    ("lexical-overlap", S::Other, C::Mistranslation),
    ("modal_verb:deletion", S::Other, C::Mistranslation),
    ("modal_verb:substitution", S::Other, C::Mistranslation),
    ("ordering-mismatch", S::Other, C::Mistranslation),
    ("overly-literal-vs-correct-idiom", S::Other, C::Mistranslation),
    ("overly-literal-vs-explanation", S::Other, C::Mistranslation),
    ("overly-literal-vs-ref-word", S::Other, C::Mistranslation),
    ("overly-literal-vs-synonym", S::Other, C::Mistranslation),
    ("xnli-addition-contradiction", S::Other, C::Mistranslation),
    ("xnli-addition-neutral", S::Other, C::Mistranslation),
    ("xnli-omission-contradiction", S::Other, C::Mistranslation),
    ("xnli-omission-neutral", S::Other, C::Mistranslation),
    ("copy-source", S::NotApplicable, C::Untranslated),
    ("untranslated-vs-ref-word", S::NotApplicable, C::Untranslated),
    ("untranslated-vs-synonym", S::NotApplicable, C::Untranslated),
    ("do-not-translate", S::NotApplicable, C::DoNotTranslate),
    ("overtranslation", S::NotApplicable, C::Overtranslation),
    ("undertranslation", S::NotApplicable, C::Undertranslation),
    ("antonym-replacement", S::NotApplicable, C::RealWorldKnowledge),
    (
        "commonsense-only-ref-ambiguous",
        S::NotApplicable,
        C::RealWorldKnowledge,
    ),
    (
        "commonsense-src-and-ref-ambiguous",
        S::NotApplicable,
        C::RealWorldKnowledge,
    ),
    (
        "real-world-knowledge-entailment",
        S::NotApplicable,
        C::RealWorldKnowledge,
    ),
    (
        "real-world-knowledge-hypernym-vs-distractor",
        S::NotApplicable,
        C::RealWorldKnowledge,
    ),
    (
        "real-world-knowledge-hypernym-vs-hyponym",
        S::NotApplicable,
        C::RealWorldKnowledge,
    ),
    (
        "real-world-knowledge-synonym-vs-antonym",
        S::NotApplicable,
        C::RealWorldKnowledge,
    ),
    ("similar-language-high", S::NotApplicable, C::WrongLanguage),
    ("similar-language-low", S::NotApplicable, C::WrongLanguage),
    ("punctuation:deletion_all", S::NotApplicable, C::Punctuation),
    ("punctuation:deletion_commas", S::NotApplicable, C::Punctuation),
    ("punctuation:deletion_quotes", S::NotApplicable, C::Punctuation),
    ("punctuation:statement-to-question", S::NotApplicable, C::Punctuation),
];

impl Taxonomy {
    /// The built-in 68-leaf taxonomy.
    pub fn aces() -> Self {
        let leaves = ACES_LEAVES
            .iter()
            .map(|&(leaf, subcategory, category)| (leaf.to_string(), Placement { subcategory, category }))
            .collect();
        Taxonomy { leaves }
    }

    /// Builds a taxonomy, checking that subcategory is set exactly for mistranslation leaves.
    pub fn from_leaves<I>(leaves: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, Subcategory, Category)>,
    {
        let mut map = BTreeMap::new();
        for (leaf, subcategory, category) in leaves {
            let is_mistranslation = category == Category::Mistranslation;
            if is_mistranslation == (subcategory == Subcategory::NotApplicable) {
                return Err(Error::Config(format!(
                    "leaf `{leaf}`: subcategory `{subcategory}` is inconsistent with category `{category}`"
                )));
            }
            if map.insert(leaf.clone(), Placement { subcategory, category }).is_some() {
                return Err(Error::Config(format!("leaf `{leaf}` listed twice")));
            }
        }
        Ok(Taxonomy { leaves: map })
    }

    /// Parses `leaf<TAB>subcategory<TAB>category` rows after a header row.
    pub fn parse_tsv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut header_seen = false;
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            if !header_seen {
                header_seen = true;
                if line != "leaf\tsubcategory\tcategory" {
                    return Err(Error::parse(line_no, "expected header `leaf\\tsubcategory\\tcategory`"));
                }
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(Error::parse(
                    line_no,
                    format!("expected 3 columns, found {}", cols.len()),
                ));
            }
            let sub = cols[1]
                .parse()
                .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
            let cat = cols[2]
                .parse()
                .map_err(|e: Error| Error::parse(line_no, e.to_string()))?;
            rows.push((cols[0].to_string(), sub, cat));
        }
        Taxonomy::from_leaves(rows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Taxonomy::parse_tsv(&text)
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("leaf\tsubcategory\tcategory\n");
        for (leaf, p) in &self.leaves {
            out.push_str(&format!("{leaf}\t{}\t{}\n", p.subcategory, p.category));
        }
        out
    }

    pub fn placement(&self, leaf: &str) -> Option<Placement> {
        self.leaves.get(leaf).copied()
    }

    pub fn contains(&self, leaf: &str) -> bool {
        self.leaves.contains_key(leaf)
    }

    pub fn category(&self, leaf: &str) -> Option<Category> {
        self.placement(leaf).map(|p| p.category)
    }

    pub fn leaves(&self) -> impl Iterator<Item = (&str, Placement)> {
        self.leaves.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }
}

impl Default for Taxonomy {
    fn default() -> Self {
        Taxonomy::aces()
    }
}
