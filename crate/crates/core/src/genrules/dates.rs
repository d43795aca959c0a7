use rand::Rng as _;

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta};
use crate::text::{find_word, splice_bytes};

/// Swaps the first month name of `translation` that the reference also contains: the
/// good side gets its abbreviation, the incorrect side a different month.
pub fn gen_date_time(
    meta: &Meta,
    translation: &str,
    reference: &str,
    tgt_lang: &str,
    cfg: &GeneratorConfig,
) -> GenOutcome {
    let mut out = GenOutcome::default();
    let Some(months) = cfg.months(tgt_lang) else {
        out.skip(reason::NO_MONTH_TABLE, 1);
        return out;
    };
    // (byte start, byte end, month index) for every month mention, in text order.
    let mut found: Vec<(usize, usize, usize)> = months
        .iter()
        .enumerate()
        .flat_map(|(i, (full, _))| find_word(translation, full).into_iter().map(move |(s, e)| (s, e, i)))
        .collect();
    found.sort();
    if found.is_empty() {
        out.skip(reason::NO_MONTH, 1);
        return out;
    }
    let Some(&(start, end, idx)) = found
        .iter()
        .find(|(_, _, i)| !find_word(reference, &months[*i].0).is_empty())
    else {
        out.skip(reason::MONTH_NOT_IN_REFERENCE, 1);
        return out;
    };

    let abbr = &months[idx].1;
    let good_end = if abbr.ends_with('.') && translation[end..].starts_with('.') {
        end + 1
    } else {
        end
    };
    let good = splice_bytes(translation, start, good_end, abbr);

    let mut rng = meta.rng(cfg, "date-time");
    let mut other = rng.random_range(0..months.len() - 1);
    if other >= idx {
        other += 1;
    }
    let incorrect = splice_bytes(translation, start, end, &months[other].0);

    out.push(
        meta,
        Draft {
            id: format!("{}:date-time", meta.id),
            langpair: meta.langpair.clone(),
            source: meta.source.clone(),
            reference: reference.to_string(),
            good,
            incorrect,
            phenomenon: "hallucination-date-time".into(),
            recipe: format!("date-time {} -> {}", months[idx].0, months[other].0),
        },
        &[],
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(translation: &str, reference: &str, seed: u64) -> GenOutcome {
        let cfg = GeneratorConfig {
            seed,
            ..GeneratorConfig::default()
        };
        gen_date_time(&Meta::new("d1", "de-en", "…"), translation, reference, "en", &cfg)
    }

    #[test]
    fn november_example() {
        let t = "The decision was taken at the National Congress in November.";
        let r = "It was decided at the National Congress in November.";
        let cfg = GeneratorConfig::default();
        let out = run(t, r, 0);
        let ex = &out.examples[0];
        assert_eq!(
            ex.good_translation,
            "The decision was taken at the National Congress in Nov."
        );
        let months: Vec<&str> = cfg.month_tables["en"].iter().map(|m| m.0.as_str()).collect();
        let rest = ex
            .incorrect_translation
            .strip_prefix("The decision was taken at the National Congress in ")
            .unwrap();
        let swapped = rest.strip_suffix('.').unwrap();
        assert!(months.contains(&swapped) && swapped != "November", "{swapped}");
    }

    #[test]
    fn some_seed_gives_august() {
        let t = "… in November.";
        assert!((0..200).any(|s| run(t, "November", s).examples[0].incorrect_translation == "… in August."));
    }

    #[test]
    fn skips() {
        assert_eq!(run("No dates here.", "None.", 0).skipped[reason::NO_MONTH], 1);
        assert_eq!(run("In May.", "In June.", 0).skipped[reason::MONTH_NOT_IN_REFERENCE], 1);
        let cfg = GeneratorConfig::default();
        let out = gen_date_time(&Meta::new("d", "en-ja", "x"), "5月", "5月", "ja", &cfg);
        assert_eq!(out.skipped[reason::NO_MONTH_TABLE], 1);
    }

    #[test]
    fn first_month_present_in_reference_is_used() {
        let out = run("From March to October.", "Until October.", 3);
        assert_eq!(out.examples[0].good_translation, "From March to Oct.");
    }

    #[test]
    fn deterministic_per_seed() {
        let t = "Born in July 1932.";
        assert_eq!(run(t, "July", 5), run(t, "July", 5));
    }
}
