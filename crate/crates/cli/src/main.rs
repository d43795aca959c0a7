mod analyze;
mod ui;

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use acesforge_core::corpus::{self, ChallengeExample, Format, Taxonomy};
use acesforge_core::evalharness::{self, EvalConfig, MetricScoreTable, TRAINED_PAIRS};
use acesforge_core::genrules::driver::{self, Context};
use acesforge_core::genrules::{GeneratorConfig, Lexicon};
use acesforge_core::rng::sha256_hex;
use acesforge_core::textsim;
use anyhow::{Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ui::Ui;

/// A problem with the user's inputs or data (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Parser)]
#[command(
    name = "acesforge",
    version,
    about = "Generate contrastive MT challenge sets and meta-evaluate metrics on them"
)]
struct Cli {
    /// Plain output without ANSI colour (also set by ACESFORGE_NO_COLOR).
    #[arg(long, global = true)]
    no_color: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the generation recipes over a generation corpus.
    Generate(GenerateArgs),
    /// Score a challenge set with the surface baselines (BLEU, chrF, negative Levenshtein).
    ScoreBaselines(ScoreArgs),
    /// Correlations, category rollups, ACES-Score and language-pair groups.
    Evaluate(EvaluateArgs),
    /// Diagnostic deltas: source sensitivity, overlap decay, copy vs synonym, zero-shot splits.
    Analyze(AnalyzeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Jsonl,
    Tsv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Tsv => Format::Tsv,
        }
    }
}

#[derive(Args)]
struct ChallengeInput {
    /// Challenge set (JSONL or TSV).
    #[arg(long)]
    challenge: PathBuf,
    /// Challenge-set format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Taxonomy TSV (`leaf<TAB>subcategory<TAB>category`); the built-in one by default.
    #[arg(long)]
    taxonomy: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Generation corpus JSONL; the bundled mini corpus when omitted.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Generator configuration TOML; the bundled defaults when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lexicon TSV (`word<TAB>relation<TAB>target`); the bundled one when omitted.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Taxonomy TSV used to validate emitted examples; the built-in one by default.
    #[arg(long)]
    taxonomy: Option<PathBuf>,
    /// Seed for every randomized choice; same seed and inputs give identical output.
    #[arg(long)]
    seed: u64,
    /// Only keep these phenomena (comma separated).
    #[arg(long, value_delimiter = ',')]
    phenomena: Vec<String>,
    /// Output format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Output challenge-set file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Baseline {
    Bleu,
    Chrf,
    #[value(name = "neg_levenshtein")]
    NegLevenshtein,
}

impl Baseline {
    fn name(self) -> &'static str {
        match self {
            Baseline::Bleu => "bleu",
            Baseline::Chrf => "chrf",
            Baseline::NegLevenshtein => "neg_levenshtein",
        }
    }

    fn score(self, candidate: &str, reference: &str) -> f64 {
        match self {
            Baseline::Bleu => textsim::bleu(candidate, reference).value,
            Baseline::Chrf => textsim::chrf(candidate, reference).value,
            Baseline::NegLevenshtein => -(textsim::edit_distance(candidate, reference) as f64),
        }
    }
}

#[derive(Args)]
struct ScoreArgs {
    #[command(flatten)]
    input: ChallengeInput,
    /// Baselines to run (comma separated); all three by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    metric: Vec<Baseline>,
    /// Output directory; one `<metric>.tsv` per baseline.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
pub struct ScoresInput {
    /// Directory of `<metric>.tsv` score files, or a single score file.
    #[arg(long)]
    scores: Option<PathBuf>,
    /// Metric name for a single score file (default: file stem).
    #[arg(long)]
    metric: Option<String>,
    /// Scores within this distance count as ties.
    #[arg(long, default_value_t = 0.0)]
    epsilon: f64,
}

#[derive(Args)]
struct EvaluateArgs {
    #[command(flatten)]
    input: ChallengeInputOpt,
    #[command(flatten)]
    scores: ScoresInput,
    /// Report from per-category taus (`metric` plus the ten category columns) instead of scores.
    #[arg(long, conflicts_with_all = ["scores", "challenge"])]
    category_taus: Option<PathBuf>,
    /// Trained language pairs for the grouping (comma separated).
    #[arg(long, value_delimiter = ',', default_values_t = TRAINED_PAIRS.map(String::from))]
    trained_pairs: Vec<String>,
    /// Output directory for report.tsv and report.txt.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ChallengeInputOpt {
    /// Challenge set (JSONL or TSV); required unless --category-taus is given.
    #[arg(long)]
    challenge: Option<PathBuf>,
    /// Challenge-set format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Taxonomy TSV (`leaf<TAB>subcategory<TAB>category`); the built-in one by default.
    #[arg(long)]
    taxonomy: Option<PathBuf>,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    input: ChallengeInput,
    #[command(flatten)]
    scores: ScoresInput,
    /// Analyses to run (comma separated); `all` runs those the data supports.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    analysis: Vec<analyze::Analysis>,
    /// WMT language pairs for the zero-shot split (comma separated).
    #[arg(long, value_delimiter = ',', default_values_t = TRAINED_PAIRS.map(String::from))]
    wmt_langpairs: Vec<String>,
    /// Fewer examples than this on either side of a zero-shot split only warns.
    #[arg(long, default_value_t = acesforge_core::analysis::ZEROSHOT_MIN_PER_SIDE)]
    min_per_side: usize,
    /// Standard deviation for the copy-vs-synonym spread.
    #[arg(long, value_enum, default_value = "sample")]
    std: analyze::StdArg,
    /// Output directory for analysis.tsv, decay.tsv, copy_synonym.tsv and report files.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ui = Ui::new(cli.no_color);
    let outcome = std::panic::catch_unwind(|| run(cli.command, &ui));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            ui.error(&format!("{e:#}"));
            if e.downcast_ref::<UsageError>().is_some() || e.downcast_ref::<acesforge_core::Error>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
        Err(_) => ExitCode::from(1),
    }
}

fn run(command: Command, ui: &Ui) -> Result<()> {
    match command {
        Command::Generate(a) => cmd_generate(a, ui),
        Command::ScoreBaselines(a) => cmd_score_baselines(a, ui),
        Command::Evaluate(a) => cmd_evaluate(a, ui),
        Command::Analyze(a) => analyze::cmd_analyze(a, ui),
    }
}

pub fn load_taxonomy(path: Option<&Path>) -> Result<Taxonomy> {
    Ok(match path {
        Some(p) => Taxonomy::load(p)?,
        None => Taxonomy::aces(),
    })
}

fn read_input(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// Loads a challenge set; returns the examples and a short digest of the file bytes.
pub fn load_challenge(
    path: &Path,
    format: Option<FormatArg>,
    tax: &Taxonomy,
) -> Result<(Vec<ChallengeExample>, String)> {
    let text = read_input(path)?;
    let format = format.map(Format::from).unwrap_or_else(|| Format::from_path(path));
    let examples = corpus::parse_challenge_set(&text, format, tax)
        .with_context(|| format!("loading challenge set {}", path.display()))?;
    Ok((examples, short_digest(text.as_bytes())))
}

pub fn short_digest(bytes: &[u8]) -> String {
    format!("sha256:{}", &sha256_hex(bytes)[..16])
}

pub fn write_output(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
    }
    corpus::write_atomic(path, text.as_bytes())?;
    Ok(())
}

pub fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))
}

fn cmd_generate(a: GenerateArgs, ui: &Ui) -> Result<()> {
    let tax = load_taxonomy(a.taxonomy.as_deref())?;
    let mut cfg = match &a.config {
        Some(p) => GeneratorConfig::load(p).with_context(|| format!("loading config {}", p.display()))?,
        None => GeneratorConfig::default(),
    };
    cfg.seed = a.seed;
    let lexicon = match &a.lexicon {
        Some(p) => Lexicon::load(p).with_context(|| format!("loading lexicon {}", p.display()))?,
        None => Lexicon::bundled(),
    };
    let records = match &a.corpus {
        Some(p) => driver::load_generation_corpus(p).with_context(|| format!("loading corpus {}", p.display()))?,
        None => driver::mini_corpus(),
    };
    let filter: Option<BTreeSet<String>> = if a.phenomena.is_empty() {
        None
    } else {
        if let Some(bad) = a.phenomena.iter().find(|p| !tax.contains(p)) {
            return Err(usage(format!("unknown phenomenon `{bad}` in --phenomena")));
        }
        Some(a.phenomena.iter().cloned().collect())
    };
    let ctx = Context {
        cfg: &cfg,
        lexicon: &lexicon,
    };
    let run = driver::generate(&records, &ctx, filter.as_ref())?;
    let examples = &run.outcome.examples;

    let mut failures = Vec::new();
    let mut seen = BTreeSet::new();
    for e in examples {
        let mut v = corpus::validate(e, &tax);
        if !seen.insert(e.id.as_str()) {
            v.push("duplicate id".into());
        }
        if !v.is_empty() {
            failures.push(format!("{}: {}", e.id, v.join("; ")));
        }
    }
    if !failures.is_empty() {
        for f in &failures {
            ui.warn(f);
        }
        return Err(usage(format!(
            "{} generated examples failed validation; nothing written",
            failures.len()
        )));
    }

    let format = a.format.map(Format::from).unwrap_or_else(|| Format::from_path(&a.out));
    let mut text = corpus::render_challenge_set(examples, format)?;
    if format == Format::Tsv {
        text = format!("# acesforge generate {}\n{text}", ctx.provenance());
    }
    write_output(&a.out, &text)?;

    ui.heading(&format!(
        "generated {} examples from {} records ({})",
        examples.len(),
        records.len(),
        ctx.provenance()
    ));
    ui.line(&format!(
        "attempted {}, skipped {}, filtered out {}",
        run.outcome.attempted,
        run.outcome.skipped_total(),
        run.filtered_out
    ));
    if !run.outcome.skipped.is_empty() {
        ui.heading("skip reasons");
        for (reason, n) in &run.outcome.skipped {
            ui.line(&format!("{n:>6}  {reason}"));
        }
    }
    Ok(())
}

fn cmd_score_baselines(a: ScoreArgs, ui: &Ui) -> Result<()> {
    let tax = load_taxonomy(a.input.taxonomy.as_deref())?;
    let (examples, digest) = load_challenge(&a.input.challenge, a.input.format, &tax)?;
    let mut metrics = a.metric.clone();
    if metrics.is_empty() {
        metrics = vec![Baseline::Bleu, Baseline::Chrf, Baseline::NegLevenshtein];
    }
    metrics.sort();
    metrics.dedup();
    ensure_dir(&a.out)?;
    for m in metrics {
        let mut table = MetricScoreTable::new(m.name());
        for e in &examples {
            table.rows.insert(
                e.id.clone(),
                (
                    m.score(&e.good_translation, &e.reference),
                    m.score(&e.incorrect_translation, &e.reference),
                ),
            );
        }
        let path = a.out.join(format!("{}.tsv", m.name()));
        let prov = format!("acesforge score-baselines metric={} challenge={digest}", m.name());
        evalharness::save_scores(&table, &path, Some(&prov))?;
        ui.line(&format!("{:<16} {} rows -> {}", m.name(), table.len(), path.display()));
    }
    Ok(())
}

/// Score tables from a directory (every `*.tsv`, by file name) or from one file.
pub fn load_score_tables(s: &ScoresInput) -> Result<Vec<MetricScoreTable>> {
    let Some(path) = &s.scores else {
        return Err(usage("--scores is required"));
    };
    if path.is_dir() {
        if s.metric.is_some() {
            return Err(usage("--metric names a single score file, not a directory"));
        }
        let mut files: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
            .filter_map(|d| d.ok().map(|d| d.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "tsv"))
            .collect();
        files.sort();
        if files.is_empty() {
            return Err(usage(format!("no score files (*.tsv) in {}", path.display())));
        }
        files
            .iter()
            .map(|f| evalharness::load_scores(f, None).with_context(|| format!("loading scores {}", f.display())))
            .collect()
    } else {
        let t = evalharness::load_scores(path, s.metric.as_deref())
            .with_context(|| format!("loading scores {}", path.display()))?;
        Ok(vec![t])
    }
}

fn scores_digest(tables: &[MetricScoreTable]) -> String {
    let rendered: String = tables
        .iter()
        .map(|t| evalharness::render_scores(t, Some(&t.metric_name)))
        .collect();
    short_digest(rendered.as_bytes())
}

fn cmd_evaluate(a: EvaluateArgs, ui: &Ui) -> Result<()> {
    let (report, prov) = if let Some(p) = &a.category_taus {
        let text = read_input(p)?;
        let rows = evalharness::parse_category_taus(&text).with_context(|| format!("loading {}", p.display()))?;
        let prov = format!("acesforge evaluate category_taus={}", short_digest(text.as_bytes()));
        (evalharness::EvalReport { metrics: rows }, prov)
    } else {
        let Some(challenge) = &a.input.challenge else {
            return Err(usage("--challenge is required unless --category-taus is given"));
        };
        let tax = load_taxonomy(a.input.taxonomy.as_deref())?;
        let (examples, digest) = load_challenge(challenge, a.input.format, &tax)?;
        let tables = load_score_tables(&a.scores)?;
        let cfg = EvalConfig {
            epsilon: a.scores.epsilon,
            trained_pairs: a.trained_pairs.iter().cloned().collect(),
        };
        let report = evalharness::build_report(&examples, &tables, &tax, &cfg)?;
        let prov = format!(
            "acesforge evaluate challenge={digest} scores={} epsilon={}",
            scores_digest(&tables),
            a.scores.epsilon
        );
        (report, prov)
    };
    ensure_dir(&a.out)?;
    write_output(&a.out.join("report.tsv"), &report.to_tsv(Some(&prov)))?;
    let text = report.to_text();
    write_output(&a.out.join("report.txt"), &text)?;
    ui.block(&text);
    Ok(())
}
