use std::collections::BTreeMap;

use rand::seq::index;

use super::ChallengeExample;
use crate::error::{Error, Result};
use crate::rng::rng_for;

/// Apportions `cap` seats across groups proportionally to their sizes.
///
/// Each group first gets the floor of its exact quota; leftover seats go to the largest
/// remainders, ties to the lexicographically smaller key. When the total is at most
/// `cap` every group keeps its full count.
pub fn largest_remainder(counts: &BTreeMap<String, usize>, cap: usize) -> BTreeMap<String, usize> {
    let total: usize = counts.values().sum();
    if total <= cap {
        return counts.clone();
    }
    let (total, cap_w) = (total as u128, cap as u128);
    let mut alloc = BTreeMap::new();
    let mut rems: Vec<(u128, &String)> = Vec::with_capacity(counts.len());
    let mut assigned = 0usize;
    for (key, &count) in counts {
        let scaled = count as u128 * cap_w;
        let floor = (scaled / total) as usize;
        assigned += floor;
        alloc.insert(key.clone(), floor);
        rems.push((scaled % total, key));
    }
    // Stable sort keeps BTreeMap (lexicographic) order among equal remainders.
    rems.sort_by_key(|r| std::cmp::Reverse(r.0));
    for (_, key) in rems.into_iter().take(cap - assigned) {
        *alloc.get_mut(key).expect("key from counts") += 1;
    }
    alloc
}

/// Stratified subsample of one phenomenon's examples, preserving input order.
pub fn subsample_phenomenon(examples: &[ChallengeExample], cap: usize, seed: u64) -> Result<Vec<ChallengeExample>> {
    if cap == 0 {
        return Err(Error::Config("subsample cap must be at least 1".into()));
    }
    if let Some(first) = examples.first() {
        if let Some(other) = examples.iter().find(|e| e.phenomenon != first.phenomenon) {
            return Err(Error::MixedPhenomena(
                first.phenomenon.clone(),
                other.phenomenon.clone(),
            ));
        }
    }
    if examples.len() <= cap {
        return Ok(examples.to_vec());
    }
    let mut by_pair: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, ex) in examples.iter().enumerate() {
        by_pair.entry(ex.langpair.clone()).or_default().push(i);
    }
    let counts = by_pair.iter().map(|(k, v)| (k.clone(), v.len())).collect();
    let alloc = largest_remainder(&counts, cap);
    let mut keep = vec![false; examples.len()];
    for (pair, idxs) in &by_pair {
        let mut rng = rng_for(seed, &format!("subsample:{}:{pair}", examples[0].phenomenon));
        for j in index::sample(&mut rng, idxs.len(), alloc[pair]) {
            keep[idxs[j]] = true;
        }
    }
    Ok(examples
        .iter()
        .zip(keep)
        .filter(|&(_, k)| k)
        .map(|(ex, _)| ex.clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::sample_example;
    use proptest::prelude::*;

    fn counts(pairs: &[(&str, usize)]) -> BTreeMap<String, usize> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    /// Exhaustive search over floor/ceil choices minimising squared deviation from the
    /// exact quotas; among optima, extra seats go to lexicographically earlier keys.
    fn brute_force(c: &BTreeMap<String, usize>, cap: usize) -> BTreeMap<String, usize> {
        let total: usize = c.values().sum();
        if total <= cap {
            return c.clone();
        }
        let keys: Vec<&String> = c.keys().collect();
        let k = keys.len();
        let mut best: Option<(u128, Vec<usize>)> = None;
        for mask in 0u32..(1 << k) {
            let v: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(i, key)| c[*key] * cap / total + ((mask >> (k - 1 - i)) & 1) as usize)
                .collect();
            if v.iter().sum::<usize>() != cap {
                continue;
            }
            let err: u128 = keys
                .iter()
                .zip(&v)
                .map(|(key, &s)| {
                    let d = (s * total) as i128 - (c[*key] * cap) as i128;
                    (d * d) as u128
                })
                .sum();
            // Equal error: prefer the vector giving seats to earlier keys.
            let better = match &best {
                None => true,
                Some((e, bv)) => err < *e || (err == *e && v > *bv),
            };
            if better {
                best = Some((err, v));
            }
        }
        let v = best.expect("some allocation sums to cap").1;
        keys.into_iter().cloned().zip(v).collect()
    }

    #[test]
    fn three_way_tie_fixture() {
        let c = counts(&[("de-en", 999), ("fr-en", 667), ("ja-en", 334)]);
        let a = largest_remainder(&c, 1000);
        assert_eq!(a, counts(&[("de-en", 500), ("fr-en", 333), ("ja-en", 167)]));
        assert_eq!(a, brute_force(&c, 1000));
    }

    #[test]
    fn exact_proportions() {
        let c = counts(&[("de-en", 1500), ("fr-en", 500)]);
        assert_eq!(largest_remainder(&c, 1000), counts(&[("de-en", 750), ("fr-en", 250)]));
    }

    fn make(pairs: &[(&str, usize)]) -> Vec<ChallengeExample> {
        let mut out = Vec::new();
        for (lp, n) in pairs {
            for i in 0..*n {
                let mut ex = sample_example(&format!("{lp}-{i}"));
                ex.langpair = lp.to_string();
                out.push(ex);
            }
        }
        out
    }

    #[test]
    fn under_cap_returned_unchanged() {
        let exs = make(&[("de-en", 500), ("fr-en", 300)]);
        assert_eq!(subsample_phenomenon(&exs, 1000, 1).unwrap(), exs);
    }

    #[test]
    fn over_cap_allocates_and_keeps_order() {
        let exs = make(&[("de-en", 999), ("fr-en", 667), ("ja-en", 334)]);
        let out = subsample_phenomenon(&exs, 1000, 42).unwrap();
        assert_eq!(out.len(), 1000);
        let n = |lp: &str| out.iter().filter(|e| e.langpair == lp).count();
        assert_eq!((n("de-en"), n("fr-en"), n("ja-en")), (500, 333, 167));
        let pos: Vec<usize> = out
            .iter()
            .map(|e| exs.iter().position(|x| x.id == e.id).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(out, subsample_phenomenon(&exs, 1000, 42).unwrap());
        assert_ne!(out, subsample_phenomenon(&exs, 1000, 43).unwrap());
        assert_eq!(subsample_phenomenon(&out, 1000, 7).unwrap(), out);
    }

    #[test]
    fn mixed_phenomena_rejected() {
        let mut exs = make(&[("de-en", 2)]);
        exs[1].phenomenon = "nonsense".into();
        assert!(matches!(
            subsample_phenomenon(&exs, 1, 0),
            Err(Error::MixedPhenomena(..))
        ));
    }

    proptest! {
        #[test]
        fn allocation_matches_brute_force(
            sizes in prop::collection::vec(1usize..400, 1..7),
            cap in 1usize..600,
        ) {
            let c: BTreeMap<String, usize> = sizes
                .iter()
                .enumerate()
                .map(|(i, &n)| (format!("l{i}-en"), n))
                .collect();
            let a = largest_remainder(&c, cap);
            let total: usize = sizes.iter().sum();
            prop_assert_eq!(a.values().sum::<usize>(), cap.min(total));
            prop_assert!(a.iter().all(|(k, &v)| v <= c[k]));
            prop_assert_eq!(a, brute_force(&c, cap));
        }
    }
}
