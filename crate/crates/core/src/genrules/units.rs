//! Unit-mention extraction and conversion for the English unit-conversion recipe.

use std::ops::Range;

use regex::Regex;

use super::{reason, Draft, GenOutcome, GeneratorConfig, Meta, UnitConversion};

/// One `(amount, unit)` mention; ranges are byte offsets into the scanned text.
#[derive(Debug, Clone, PartialEq)]
pub struct Mention {
    pub span: Range<usize>,
    pub amount_text: String,
    pub amount: f64,
    pub unit_text: String,
    /// Index into `GeneratorConfig::units`.
    pub unit: usize,
}

/// Compiled matcher over every configured surface form, longest first.
pub struct UnitLexicon<'a> {
    cfg: &'a GeneratorConfig,
    re: Regex,
    forms: Vec<(String, usize)>,
}

impl<'a> UnitLexicon<'a> {
    pub fn new(cfg: &'a GeneratorConfig) -> Self {
        let mut forms: Vec<(String, usize)> = Vec::new();
        for (i, u) in cfg.units.iter().enumerate() {
            for f in std::iter::once(&u.name).chain([&u.singular]).chain(&u.aliases) {
                forms.push((f.clone(), i));
            }
        }
        forms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        forms.dedup_by(|a, b| a.0 == b.0);
        let alts: Vec<String> = forms.iter().map(|(f, _)| regex::escape(f)).collect();
        let re = Regex::new(&format!(
            r"(?P<amt>\d{{1,3}}(?:,\d{{3}})+(?:\.\d+)?|\d+(?:\.\d+)?)(?:\s|-)?(?P<unit>{})",
            alts.join("|")
        ))
        .expect("escaped alternation is a valid regex");
        UnitLexicon { cfg, re, forms }
    }

    /// All mentions in `text`, left to right, bounded by non-alphanumeric characters.
    pub fn mentions(&self, text: &str) -> Vec<Mention> {
        let mut out = Vec::new();
        for c in self.re.captures_iter(text) {
            let all = c.get(0).expect("group 0");
            let before = text[..all.start()].chars().next_back();
            if before.is_some_and(|ch| ch.is_alphanumeric() || ch == '.' || ch == ',') {
                continue;
            }
            let unit = c.name("unit").expect("unit group");
            let after = text[all.end()..].chars().next();
            if !unit.as_str().ends_with('.') && after.is_some_and(char::is_alphanumeric) {
                continue;
            }
            let amount_text = c.name("amt").expect("amount group").as_str();
            let Ok(amount) = amount_text.replace(',', "").parse::<f64>() else {
                continue;
            };
            let idx = self
                .forms
                .iter()
                .find(|(f, _)| f == unit.as_str())
                .expect("matched form")
                .1;
            out.push(Mention {
                span: all.range(),
                amount_text: amount_text.to_string(),
                amount,
                unit_text: unit.as_str().to_string(),
                unit: idx,
            });
        }
        out
    }

    /// Mentions minus self-disambiguating pairs such as `645 miles (1040 km)`.
    pub fn comparable_mentions(&self, text: &str) -> Vec<Mention> {
        let all = self.mentions(text);
        let mut drop = vec![false; all.len()];
        for i in 0..all.len().saturating_sub(1) {
            let (a, b) = (&all[i], &all[i + 1]);
            let between = &text[a.span.end..b.span.start];
            let after = text[b.span.end..].trim_start();
            if between.trim() == "(" && after.starts_with(')') {
                drop[i] = true;
                drop[i + 1] = true;
            }
        }
        all.into_iter()
            .zip(drop)
            .filter_map(|(m, d)| (!d).then_some(m))
            .collect()
    }

    pub fn unit_name(&self, m: &Mention) -> &str {
        &self.cfg.units[m.unit].name
    }

    fn surface(&self, unit: &str, amount: f64) -> String {
        let def = self.cfg.units.iter().find(|u| u.name == unit).expect("validated unit");
        if amount == 1.0 {
            def.singular.clone()
        } else {
            def.name.clone()
        }
    }
}

/// The first configured conversion out of `unit`.
pub fn conversion_for<'c>(cfg: &'c GeneratorConfig, unit: &str) -> Option<&'c UnitConversion> {
    cfg.unit_conversions.iter().find(|c| c.from == unit)
}

pub fn convert(amount: f64, conv: &UnitConversion) -> f64 {
    amount * conv.factor
}

pub fn invert(converted: f64, conv: &UnitConversion) -> f64 {
    converted * (1.0 / conv.factor)
}

/// Three significant figures, trailing zeros and a bare trailing point removed.
pub fn format_sig3(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".to_string();
    }
    let d = x.abs().log10().floor() as i32;
    let decimals = (2 - d).max(0) as usize;
    let scale = 10f64.powi(d - 2);
    let rounded = (x / scale).round() * scale;
    let mut s = format!("{rounded:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

fn sorted_key(ms: &[Mention]) -> Vec<(String, usize)> {
    let mut v: Vec<(String, usize)> = ms.iter().map(|m| (m.amount.to_string(), m.unit)).collect();
    v.sort();
    v
}

pub fn gen_unit_conversion(meta: &Meta, translation: &str, reference: &str, cfg: &GeneratorConfig) -> GenOutcome {
    let mut out = GenOutcome::default();
    if meta.target_lang() != "en" {
        out.skip(reason::NOT_ENGLISH, 2);
        return out;
    }
    let lex = UnitLexicon::new(cfg);
    let ours = lex.comparable_mentions(translation);
    if ours.is_empty() {
        out.skip(reason::NO_UNIT, 2);
        return out;
    }
    if sorted_key(&ours) != sorted_key(&lex.comparable_mentions(reference)) {
        out.skip(reason::UNITS_DIFFER, 2);
        return out;
    }
    let Some((m, conv)) = ours
        .iter()
        .find_map(|m| conversion_for(cfg, lex.unit_name(m)).map(|c| (m, c)))
    else {
        out.skip(reason::NO_CONVERSION, 2);
        return out;
    };
    let exact = convert(m.amount, conv);
    let shown = format_sig3(exact);
    let shown_value: f64 = shown.parse().unwrap_or(exact);
    let replace = |with: String| -> String {
        let mut s = translation.to_string();
        s.replace_range(m.span.clone(), &with);
        s
    };
    let good = replace(format!("{shown} {}", lex.surface(&conv.to, shown_value)));
    let variants = [
        (
            "hallucination-unit-conversion-amount-matches-ref",
            "a",
            replace(format!("{} {}", m.amount_text, lex.surface(&conv.to, m.amount))),
        ),
        (
            "hallucination-unit-conversion-unit-matches-ref",
            "b",
            replace(format!("{shown} {}", m.unit_text)),
        ),
    ];
    for (phenomenon, tag, incorrect) in variants {
        out.push(
            meta,
            Draft {
                id: format!("{}:unit-conversion:{tag}", meta.id),
                langpair: meta.langpair.clone(),
                source: meta.source.clone(),
                reference: reference.to_string(),
                good: good.clone(),
                incorrect,
                phenomenon: phenomenon.into(),
                recipe: format!(
                    "unit-conversion {} {} -> {} (exact {exact})",
                    m.amount_text, conv.from, conv.to
                ),
            },
            &[],
        );
    }
    out
}
