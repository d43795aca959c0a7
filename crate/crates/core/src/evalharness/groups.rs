use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::ChallengeExample;

pub const TRAINED_PAIRS: [&str; 3] = ["en-de", "en-ru", "zh-en"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum LangGroup {
    Trained,
    EnX,
    XEn,
    XY,
}

impl LangGroup {
    pub const ALL: [LangGroup; 4] = [LangGroup::Trained, LangGroup::EnX, LangGroup::XEn, LangGroup::XY];

    pub fn of(langpair: &str, trained: &BTreeSet<String>) -> LangGroup {
        if trained.contains(langpair) {
            return LangGroup::Trained;
        }
        match langpair.split_once('-') {
            Some(("en", _)) => LangGroup::EnX,
            Some((_, "en")) => LangGroup::XEn,
            _ => LangGroup::XY,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LangGroup::Trained => "trained",
            LangGroup::EnX => "en-x",
            LangGroup::XEn => "x-en",
            LangGroup::XY => "x-y",
        }
    }
}

impl fmt::Display for LangGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Partitions example ids into the four groups; every group key is present.
pub fn langpair_grouping(
    examples: &[ChallengeExample],
    trained: &BTreeSet<String>,
) -> BTreeMap<LangGroup, Vec<String>> {
    let mut out: BTreeMap<LangGroup, Vec<String>> = LangGroup::ALL.into_iter().map(|g| (g, Vec::new())).collect();
    for e in examples {
        out.entry(LangGroup::of(&e.langpair, trained))
            .or_default()
            .push(e.id.clone());
    }
    out
}
