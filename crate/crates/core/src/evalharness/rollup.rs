use std::collections::BTreeMap;

use crate::corpus::{Category, Subcategory, Taxonomy};
use crate::error::{Error, Result};

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unweighted mean of phenomenon taus per top-level category. Categories with
/// no phenomena are absent, never zero.
pub fn category_rollup(
    phenomenon_taus: &BTreeMap<String, f64>,
    taxonomy: &Taxonomy,
) -> Result<BTreeMap<Category, f64>> {
    let mut acc: BTreeMap<Category, Vec<f64>> = BTreeMap::new();
    for (p, &tau) in phenomenon_taus {
        let c = taxonomy
            .category(p)
            .ok_or_else(|| Error::UnknownPhenomenon(p.clone()))?;
        acc.entry(c).or_default().push(tau);
    }
    Ok(acc.into_iter().map(|(c, v)| (c, mean(&v))).collect())
}

/// Same as [`category_rollup`] over the mistranslation subcategories.
pub fn subcategory_rollup(
    phenomenon_taus: &BTreeMap<String, f64>,
    taxonomy: &Taxonomy,
) -> Result<BTreeMap<Subcategory, f64>> {
    let mut acc: BTreeMap<Subcategory, Vec<f64>> = BTreeMap::new();
    for (p, &tau) in phenomenon_taus {
        let placement = taxonomy
            .placement(p)
            .ok_or_else(|| Error::UnknownPhenomenon(p.clone()))?;
        if placement.category == Category::Mistranslation {
            acc.entry(placement.subcategory).or_default().push(tau);
        }
    }
    Ok(acc.into_iter().map(|(c, v)| (c, mean(&v))).collect())
}

/// Category weights: major errors 5, minor 1, punctuation 0.1.
#[derive(Debug, Clone, PartialEq)]
pub struct AcesWeights(pub BTreeMap<Category, f64>);

impl Default for AcesWeights {
    fn default() -> Self {
        AcesWeights(
            Category::ALL
                .into_iter()
                .map(|c| {
                    let w = match c {
                        Category::Addition
                        | Category::Omission
                        | Category::Mistranslation
                        | Category::Overtranslation
                        | Category::Undertranslation => 5.0,
                        Category::Punctuation => 0.1,
                        _ => 1.0,
                    };
                    (c, w)
                })
                .collect(),
        )
    }
}

impl AcesWeights {
    pub fn weight(&self, c: Category) -> f64 {
        self.0.get(&c).copied().unwrap_or(0.0)
    }

    /// Largest attainable |score|.
    pub fn bound(&self) -> f64 {
        Category::ALL.into_iter().map(|c| self.weight(c).abs()).sum()
    }
}

pub fn aces_score(category_taus: &BTreeMap<Category, f64>) -> Result<f64> {
    aces_score_with(category_taus, &AcesWeights::default())
}

/// Weighted sum of category taus, in fixed category order. All ten must be present.
pub fn aces_score_with(category_taus: &BTreeMap<Category, f64>, weights: &AcesWeights) -> Result<f64> {
    let mut total = 0.0;
    for c in Category::ALL {
        let tau = category_taus
            .get(&c)
            .ok_or_else(|| Error::MissingCategory(c.to_string()))?;
        total += weights.weight(c) * tau;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vector(taus: [f64; 10]) -> BTreeMap<Category, f64> {
        Category::ALL.into_iter().zip(taus).collect()
    }

    #[test]
    fn table_rows() {
        let chrf = [0.642, 0.784, 0.162, 0.781, 0.960, -0.696, -0.592, -0.294, 0.691, 0.743];
        let bleu = [0.748, 0.435, -0.229, 0.353, 0.600, -0.838, -0.856, -0.768, 0.661, 0.638];
        assert!((aces_score(&vector(chrf)).unwrap() - 3.71).abs() <= 0.01);
        assert!((aces_score(&vector(bleu)).unwrap() + 2.79).abs() <= 0.01);
    }

    #[test]
    fn bounds() {
        assert_eq!(aces_score(&vector([1.0; 10])).unwrap(), 29.1);
        assert_eq!(aces_score(&vector([-1.0; 10])).unwrap(), -29.1);
        assert_eq!(aces_score(&vector([0.0; 10])).unwrap(), 0.0);
        assert_eq!(AcesWeights::default().bound(), 29.1);
        let mut partial = vector([1.0; 10]);
        partial.remove(&Category::Punctuation);
        assert!(matches!(aces_score(&partial), Err(Error::MissingCategory(c)) if c == "punctuation"));
    }

    #[test]
    fn rollups() {
        let tax = Taxonomy::aces();
        let taus: BTreeMap<String, f64> = [
            ("hallucination-date-time", 0.2),
            ("hallucination-number-level-1", 0.4),
            ("coreference-based-on-commonsense", -1.0),
            ("addition", 0.7),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        let cats = category_rollup(&taus, &tax).unwrap();
        assert_eq!(cats[&Category::Addition], 0.7);
        assert!((cats[&Category::Mistranslation] - (0.2 + 0.4 - 1.0) / 3.0).abs() < 1e-15);
        assert!(!cats.contains_key(&Category::Omission));
        let subs = subcategory_rollup(&taus, &tax).unwrap();
        assert!((subs[&Subcategory::Hallucination] - 0.3).abs() < 1e-15);
        assert_eq!(subs[&Subcategory::Discourse], -1.0);
        let mut bad = taus.clone();
        bad.insert("foo".into(), 0.0);
        assert!(matches!(category_rollup(&bad, &tax), Err(Error::UnknownPhenomenon(_))));
    }

    proptest! {
        #[test]
        fn linear_and_idempotent(taus in prop::array::uniform10(-1.0f64..1.0), a in -3.0f64..3.0, t in -1.0f64..1.0) {
            let base = aces_score(&vector(taus)).unwrap();
            let scaled = aces_score(&vector(taus.map(|x| a * x))).unwrap();
            prop_assert!((scaled - a * base).abs() < 1e-9);
            let tax = Taxonomy::aces();
            let same: BTreeMap<String, f64> = tax.leaves().map(|(l, _)| (l.to_string(), t)).collect();
            for v in category_rollup(&same, &tax).unwrap().values() {
                prop_assert!((v - t).abs() < 1e-12);
            }
        }
    }
}
