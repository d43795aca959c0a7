use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn acesforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acesforge"))
        .arg("--no-color")
        .args(args)
        .output()
        .expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn generate(dir: &Path, seed: &str) -> PathBuf {
    let out = dir.join(format!("challenge-{seed}.jsonl"));
    let o = acesforge(&["generate", "--seed", seed, "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn generate_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = std::fs::read(generate(dir.path(), "3")).unwrap();
    let out = dir.path().join("again.jsonl");
    assert!(acesforge(&["generate", "--seed", "3", "--out", p(&out)])
        .status
        .success());
    assert_eq!(a, std::fs::read(out).unwrap());
    let other = std::fs::read(generate(dir.path(), "4")).unwrap();
    assert_ne!(a, other);
}

#[test]
fn generate_tsv_has_provenance_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.tsv");
    assert!(acesforge(&["generate", "--seed", "1", "--out", p(&out)])
        .status
        .success());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.starts_with("# acesforge generate seed=1 config=sha256:"));
}

#[test]
fn phenomenon_filter() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("f.jsonl");
    let o = acesforge(&[
        "generate",
        "--seed",
        "1",
        "--phenomena",
        "nonsense,copy-source",
        "--out",
        p(&out),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(!text.is_empty());
    for line in text.lines() {
        assert!(line.contains("\"phenomenon\":\"nonsense\"") || line.contains("\"phenomenon\":\"copy-source\""));
    }
    assert!(String::from_utf8_lossy(&o.stdout).contains("filtered out"));
}

#[test]
fn unknown_phenomenon_exits_2_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.jsonl");
    let o = acesforge(&[
        "generate",
        "--seed",
        "1",
        "--phenomena",
        "no-such-thing",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-thing"));
    assert!(!out.exists());
}

#[test]
fn missing_corpus_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.jsonl");
    let o = acesforge(&[
        "generate",
        "--seed",
        "1",
        "--corpus",
        "/nonexistent/corpus.jsonl",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_usage_exits_2() {
    assert_eq!(acesforge(&["generate"]).status.code(), Some(2));
    assert_eq!(acesforge(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn score_baselines_values() {
    let dir = tempfile::tempdir().unwrap();
    let challenge = dir.path().join("c.tsv");
    std::fs::write(
        &challenge,
        "id\tsource\treference\tgood_translation\tincorrect_translation\tphenomenon\tlangpair\tflags\tprovenance\n\
         a\tDie Katze saß\tthe cat sat down\tthe cat sat\tkitten\tnonsense\tde-en\t\t\n",
    )
    .unwrap();
    let out = dir.path().join("scores");
    let o = acesforge(&["score-baselines", "--challenge", p(&challenge), "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let row = |m: &str| {
        let text = std::fs::read_to_string(out.join(format!("{m}.tsv"))).unwrap();
        let line = text.lines().find(|l| l.starts_with("a\t")).unwrap().to_string();
        let cols: Vec<f64> = line.split('\t').skip(1).map(|x| x.parse().unwrap()).collect();
        (cols[0], cols[1])
    };
    assert_eq!(row("bleu").0, 71.65313105737893);
    assert_eq!(row("neg_levenshtein"), (-5.0, -13.0));
    assert!(row("chrf").0 > row("chrf").1);
}

#[test]
fn empty_scores_dir_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let challenge = generate(dir.path(), "1");
    let empty = dir.path().join("empty");
    std::fs::create_dir(&empty).unwrap();
    let o = acesforge(&[
        "evaluate",
        "--challenge",
        p(&challenge),
        "--scores",
        p(&empty),
        "--out",
        p(&dir.path().join("ev")),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn category_taus_fixture_reproduces_aces() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ev");
    let o = acesforge(&[
        "evaluate",
        "--category-taus",
        p(&fixture("reference_category_taus.tsv")),
        "--out",
        p(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let raw = std::fs::read_to_string(out.join("report.tsv")).unwrap();
    let tsv: String = raw
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let header: Vec<&str> = tsv.lines().next().unwrap().split('\t').collect();
    let col = header.iter().position(|c| *c == "aces_score").unwrap();
    let aces = |m: &str| -> f64 {
        let line = tsv.lines().find(|l| l.split('\t').next() == Some(m)).unwrap();
        line.split('\t').nth(col).unwrap().parse().unwrap()
    };
    assert!((aces("BLEU") + 2.79).abs() <= 0.01);
    assert!((aces("chrF") - 3.71).abs() <= 0.01);
    assert!((aces("f200spBLEU") - 0.06).abs() <= 0.01);
    let names: Vec<&str> = tsv.lines().skip(1).map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(names, ["BLEU", "chrF", "f200spBLEU", "Average"]);
}

#[test]
fn evaluate_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let challenge = generate(dir.path(), "2");
    let scores = dir.path().join("scores");
    assert!(
        acesforge(&["score-baselines", "--challenge", p(&challenge), "--out", p(&scores)])
            .status
            .success()
    );

    let ev = dir.path().join("ev");
    let o = acesforge(&[
        "evaluate",
        "--challenge",
        p(&challenge),
        "--scores",
        p(&scores),
        "--out",
        p(&ev),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let tsv = std::fs::read_to_string(ev.join("report.tsv")).unwrap();
    let names: Vec<&str> = tsv
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split('\t').next().unwrap())
        .collect();
    assert_eq!(names, ["bleu", "chrf", "neg_levenshtein", "Average"]);
    assert!(tsv.contains("lang:x-en"));

    let an = dir.path().join("an");
    let o = acesforge(&[
        "analyze",
        "--challenge",
        p(&challenge),
        "--scores",
        p(&scores),
        "--out",
        p(&an),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let analysis = std::fs::read_to_string(an.join("analysis.tsv")).unwrap();
    assert!(analysis.contains("\tsource-sensitivity\tcommonsense\t"));
    assert!(analysis.contains("\toverlap-decay\tnumber level1-level3\t"));
    assert!(an.join("decay.tsv").exists());
    let report = std::fs::read_to_string(an.join("report.tsv")).unwrap();
    assert!(report.contains("analysis:source_sensitivity"));
}

#[test]
fn source_sensitivity_without_both_variants_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let challenge = dir.path().join("c.jsonl");
    let o = acesforge(&[
        "generate",
        "--seed",
        "1",
        "--phenomena",
        "commonsense-only-ref-ambiguous,nonsense",
        "--out",
        p(&challenge),
    ]);
    assert!(o.status.success());
    let scores = dir.path().join("scores");
    assert!(
        acesforge(&["score-baselines", "--challenge", p(&challenge), "--out", p(&scores)])
            .status
            .success()
    );
    let out = dir.path().join("an");
    let o = acesforge(&[
        "analyze",
        "--challenge",
        p(&challenge),
        "--scores",
        p(&scores),
        "--analysis",
        "source-sensitivity",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("commonsense-src-and-ref-ambiguous"));
    assert!(!out.join("analysis.tsv").exists());
}
