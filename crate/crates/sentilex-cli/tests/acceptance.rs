//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (run with `--nocapture` to see them).
//!
//! Expected values come from independent oracles coded here (raw-moment
//! correlation formulas, brute-force rank assignment, exhaustive
//! enumeration) or from bundled reference data, never from the code under
//! test.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

use sentilex::corpus::{collapse_dual, DualStrength, LabeledText};
use sentilex::experiments::{five_number_summary, learning_curve, scheme_sweep};
use sentilex::lexicon::{Lexicon, ValenceScale};
use sentilex::matcher::{build_index, MatchStrategy};
use sentilex::scorer::{score_text, ScoringScheme};
use sentilex::stats::{pearson, spearman};
use sentilex::tokenize::tokenize;
use sentilex::Error;

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn afinn() -> Lexicon {
    let path = workspace_root().join("data/AFINN-111.txt");
    let file = std::io::BufReader::new(fs::File::open(&path).expect("bundled word list"));
    Lexicon::from_tsv(file, ValenceScale::microblog(), "AFINN-111").expect("bundled list loads")
}

fn pass(number: u32, name: &str) {
    println!("ACCEPTANCE {number} ({name}): PASS");
}

fn within(limit: Duration, started: Instant, what: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= limit,
        "{what} took {elapsed:?}, budget {limit:?}"
    );
}

// --- criterion 1 -----------------------------------------------------

#[test]
fn criterion_1_bundled_lexicon_audit() {
    let started = Instant::now();
    let lexicon = afinn();
    assert_eq!(lexicon.len(), 2477, "entry count");
    let counts = lexicon.polarity_counts();
    assert_eq!(counts.negative, 1598, "negative entries");
    assert_eq!(counts.positive, 878, "positive entries");
    assert_eq!(counts.neutral, 1, "neutral entries");
    let stripped = lexicon.strip_phrases();
    assert_eq!(lexicon.len() - stripped.len(), 15, "phrases removed");
    within(Duration::from_secs(1), started, "bundled lexicon audit");
    pass(1, "bundled lexicon audit: 2477 entries, 1598/878/1, 15 phrases");
}

// --- criterion 2 -----------------------------------------------------

/// Raw-moment Pearson, an algebraic route independent of the two-pass
/// implementation. Returns None when a variance vanishes.
fn pearson_oracle(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let syy: f64 = y.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let den = ((n * sxx - sx * sx) * (n * syy - sy * sy)).sqrt();
    if den == 0.0 || !den.is_finite() {
        return None;
    }
    Some((n * sxy - sx * sy) / den)
}

/// Quadratic-time midrank assignment: for each element, count smaller and
/// equal values directly.
fn ranks_oracle(values: &[f64]) -> Vec<f64> {
    values
        .iter()
        .map(|&v| {
            let smaller = values.iter().filter(|&&w| w < v).count() as f64;
            let equal = values.iter().filter(|&&w| w == v).count() as f64;
            smaller + (equal + 1.0) / 2.0
        })
        .collect()
}

fn spearman_oracle(x: &[f64], y: &[f64]) -> Option<f64> {
    pearson_oracle(&ranks_oracle(x), &ranks_oracle(y))
}

#[test]
fn criterion_2_correlation_oracle() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ea2);
    let mut compared = 0;
    for case in 0..200 {
        let len = rng.random_range(3..=50);
        let quantize = case % 2 == 0; // half the series carry heavy ties
        let draw = |rng: &mut ChaCha8Rng| {
            let v: f64 = rng.random_range(-10.0..10.0);
            if quantize {
                v.round()
            } else {
                v
            }
        };
        let x: Vec<f64> = (0..len).map(|_| draw(&mut rng)).collect();
        let y: Vec<f64> = (0..len).map(|_| draw(&mut rng)).collect();

        match (pearson(&x, &y), pearson_oracle(&x, &y)) {
            (Ok(got), Some(want)) => {
                assert!((got - want).abs() < 1e-10, "pearson {got} vs {want}");
                compared += 1;
            }
            (Err(Error::DegenerateSeries { .. }), None) => {}
            (got, want) => panic!("pearson definedness mismatch: {got:?} vs {want:?}"),
        }
        match (spearman(&x, &y), spearman_oracle(&x, &y)) {
            (Ok(got), Some(want)) => {
                assert!((got - want).abs() < 1e-10, "spearman {got} vs {want}");
            }
            (Err(Error::DegenerateSeries { .. }), None) => {}
            (got, want) => panic!("spearman definedness mismatch: {got:?} vs {want:?}"),
        }
    }
    assert!(compared > 150, "too few defined cases: {compared}");
    within(Duration::from_secs(1), started, "correlation oracle");
    pass(2, "pearson/spearman agree with independent oracles to 1e-10 on 200 series");
}

// --- criterion 3 -----------------------------------------------------

#[test]
fn criterion_3_porter_conformance() {
    let started = Instant::now();
    let dir = workspace_root().join("crates/sentilex/tests/data/porter");
    let voc: Vec<String> = fs::read_to_string(dir.join("voc.txt"))
        .expect("reference vocabulary")
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let out: Vec<String> = fs::read_to_string(dir.join("output.txt"))
        .expect("reference outputs")
        .split_whitespace()
        .map(str::to_string)
        .collect();
    assert_eq!(voc.len(), out.len());
    assert!(voc.len() > 20_000, "full reference set expected");
    let mut mismatches = 0;
    for (word, want) in voc.iter().zip(&out) {
        if sentilex::porter_stem(word) != *want {
            mismatches += 1;
        }
    }
    assert_eq!(mismatches, 0, "of {} reference pairs", voc.len());
    within(Duration::from_secs(1), started, "porter conformance");
    pass(3, format!("porter matches all {} reference pairs", voc.len()).as_str());
}

// --- criterion 4 -----------------------------------------------------

#[test]
fn criterion_4_dual_collapse_exhaustion() {
    for positive in 1..=5 {
        for negative in -5..=-1 {
            let dual = DualStrength::new(positive, negative).unwrap();
            let got = collapse_dual(dual);
            // the rule, restated independently: numerically largest
            // magnitude wins, equal magnitudes zero out
            let expected = if positive > -negative {
                positive
            } else if -negative > positive {
                negative
            } else {
                0
            };
            assert_eq!(got, expected, "({positive}, {negative})");
            assert!(got.abs() == positive.max(-negative) || got == 0);
            assert_eq!(got == 0, positive == -negative);
        }
    }
    pass(4, "dual-strength collapse matches the rule on all 25 pairs");
}

// --- criterion 5 -----------------------------------------------------

#[test]
fn criterion_5_scorer_identities() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c0e);
    for case in 0..1000 {
        let scale = if case % 2 == 0 {
            ValenceScale::microblog()
        } else {
            ValenceScale::affective_norms()
        };
        let neutral = scale.neutral();
        // random lexicon over a tiny alphabet so texts hit it often;
        // half-step valences keep deviation sums exact
        let vocab = ["ga", "ge", "gi", "go", "gu", "ka", "ke", "ki", "ko", "ku"];
        let steps = ((scale.max() - scale.min()) * 2.0) as i64;
        let mut tsv = String::new();
        for term in vocab.iter().take(rng.random_range(1..=vocab.len())) {
            let valence = scale.min() + rng.random_range(0..=steps) as f64 / 2.0;
            tsv.push_str(&format!("{term}\t{valence}\n"));
        }
        let lexicon = Lexicon::from_tsv(std::io::Cursor::new(tsv), scale, "r").unwrap();
        let index = build_index(&lexicon, MatchStrategy::Exact).unwrap();

        let words: Vec<&str> = (0..rng.random_range(0..30))
            .map(|_| {
                if rng.random_bool(0.7) {
                    vocab[rng.random_range(0..vocab.len())]
                } else {
                    "zzz"
                }
            })
            .collect();
        let tokens = tokenize(&words.join(" "));

        let mean = score_text(&tokens, &index, ScoringScheme::MeanAllTokens, neutral);
        let sum = score_text(&tokens, &index, ScoringScheme::SumRaw, neutral);
        let quantized = score_text(&tokens, &index, ScoringScheme::Quantized, neutral);
        let extreme = score_text(&tokens, &index, ScoringScheme::Extreme, neutral);

        // identity 1: sum and mean agree up to the token count
        let lhs = sum.value - neutral;
        let rhs = (mean.value - neutral) * mean.token_count as f64;
        assert!((lhs - rhs).abs() <= 1e-12, "case {case}: {lhs} vs {rhs}");

        // identity 2: quantized is the sign of the mean deviation
        let expected_sign = if mean.value > neutral {
            1.0
        } else if mean.value < neutral {
            -1.0
        } else {
            0.0
        };
        assert_eq!(quantized.value, expected_sign, "case {case}");

        // identity 3: extreme magnitude is the max deviation, or zero on
        // an opposite-sign tie
        let devs: Vec<f64> = tokens
            .iter()
            .map(|t| lexicon.valence(&t.text).map_or(0.0, |v| v - neutral))
            .collect();
        let max_mag = devs.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        let tie = devs.iter().any(|&d| d == max_mag && d > 0.0)
            && devs.iter().any(|&d| d == -max_mag && d < 0.0);
        let expected = if tie { 0.0 } else { max_mag };
        assert_eq!((extreme.value - neutral).abs(), expected, "case {case}");
    }
    within(Duration::from_secs(5), started, "scorer identities");
    pass(5, "scorer identities hold on 1000 random lexicon/text instances");
}

// --- criterion 6 -----------------------------------------------------

/// Corpus whose gold scores are an exact positive-affine image of the
/// full-lexicon mean score: gold = 0.8 * score + 5, realized as integer
/// ratings (5K ratings per text of K words summing to 4T + 25K).
fn synthetic_corpus(lexicon: &Lexicon, texts: usize, seed: u64) -> Vec<LabeledText> {
    // only terms that tokenize back to themselves (hyphenated entries
    // like "cover-up" split and would break the construction)
    let terms: Vec<(String, i64)> = lexicon
        .entries()
        .filter(|(t, _)| {
            let tokens = tokenize(t);
            tokens.len() == 1 && tokens[0].text == *t
        })
        .map(|(t, v)| (t.to_string(), v as i64))
        .collect();
    assert!(terms.len() > 2000, "term pool unexpectedly small");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..texts)
        .map(|i| {
            let k = rng.random_range(1..=6usize);
            let mut words = Vec::with_capacity(k);
            let mut total = 0i64;
            for _ in 0..k {
                let (term, valence) = &terms[rng.random_range(0..terms.len())];
                words.push(term.clone());
                total += valence;
            }
            let slots = 5 * k as i64;
            let sum = 4 * total + 25 * k as i64;
            let base = sum / slots;
            let remainder = (sum - base * slots) as usize;
            let mut ratings = vec![base as i32; slots as usize];
            for rating in ratings.iter_mut().take(remainder) {
                *rating += 1;
            }
            LabeledText {
                id: format!("s{i}"),
                text: words.join(" "),
                ratings,
            }
        })
        .collect()
}

#[test]
fn criterion_6_synthetic_end_to_end() {
    let started = Instant::now();
    let lexicon = afinn().strip_phrases();
    let corpus = synthetic_corpus(&lexicon, 500, 0xfeed);

    // sanity: the construction really makes gold affine in the score
    let index = build_index(&lexicon, MatchStrategy::Exact).unwrap();
    for record in corpus.iter().take(20) {
        let score = score_text(
            &tokenize(&record.text),
            &index,
            ScoringScheme::MeanAllTokens,
            0.0,
        );
        assert!((record.gold_score() - (0.8 * score.value + 5.0)).abs() < 1e-9);
    }

    let sweep = scheme_sweep(&corpus, &lexicon, MatchStrategy::Exact).unwrap();
    let mean_row = sweep
        .iter()
        .find(|r| r.scheme == ScoringScheme::MeanAllTokens)
        .unwrap();
    let mean_pearson = mean_row.pearson.expect("defined");
    assert!(
        (mean_pearson - 1.0).abs() <= 1e-9,
        "mean-scheme pearson {mean_pearson}"
    );
    let quant_row = sweep
        .iter()
        .find(|r| r.scheme == ScoringScheme::Quantized)
        .unwrap();
    assert!(quant_row.pearson.expect("defined") <= mean_pearson);

    let sizes = [5, 50, 500, lexicon.len()];
    let run = || {
        learning_curve(&corpus, &lexicon, MatchStrategy::Exact, &sizes, 50, 0xabcd).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "bit-reproducible across runs");

    let full = first.last().unwrap();
    for sample in &full.pearson_samples {
        assert_eq!(*sample, full.pearson_samples[0], "zero variance at full");
    }
    for sample in &full.spearman_samples {
        assert_eq!(*sample, full.spearman_samples[0], "zero variance at full");
    }
    let median_full = five_number_summary(&full.pearson_samples).unwrap().median;
    let median_small = five_number_summary(&first[0].pearson_samples).unwrap().median;
    assert!((median_full - 1.0).abs() <= 1e-9, "median at full {median_full}");
    assert!(median_full >= median_small);

    within(Duration::from_secs(10), started, "synthetic end-to-end");
    pass(6, "synthetic self-consistency: sweep 1.0, curve reproducible, full-size degenerate");
}

// --- criterion 7 -----------------------------------------------------

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sentilex"))
}

fn run_ok(args: &[&str]) -> Output {
    let output = bin().args(args).output().expect("spawn sentilex");
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    output
}

#[test]
fn criterion_7_table_layout_and_documented_targets() {
    // The original study corpus and third-party lexicons are not
    // redistributable, so exact replication is out of desk reach. This
    // criterion checks the two things that are ours: user-supplied files
    // in the documented formats drive eval end to end, and the docs state
    // the replication targets with their tolerance.
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let corpus = "t1\tgood day\t7,8,7,8,7,8,7,8,7,8\n\
                  t2\tbad day\t2,3,2,3,2,3,2,3,2,3\n\
                  t3\tso so\t5,5,5,5,5,5,5,5,5,5\n\
                  t4\twin win\t8,8,8,8,8,8,8,8,7,7\n\
                  t5\tlose hard\t3,3,2,2,3,3,2,2,3,3\n";
    let corpus_path = dir.join("amt.tsv");
    fs::write(&corpus_path, corpus).unwrap();
    let norms = dir.join("norms.txt");
    fs::write(&norms, "good\t7.5\nbad\t2.5\nday\t5.5\nwin\t8\nlose\t3\n").unwrap();
    let pos = dir.join("pos.txt");
    fs::write(&pos, "good\nwin\n").unwrap();
    let neg = dir.join("neg.txt");
    fs::write(&neg, "bad\nlose\n").unwrap();
    let dual = dir.join("dual.tsv");
    fs::write(&dual, "t1\t4\t-1\nt2\t1\t-4\nt3\t2\t-2\nt4\t5\t-1\nt5\t1\t-3\n").unwrap();

    let out = dir.join("out");
    run_ok(&[
        "eval",
        "--corpus",
        corpus_path.to_str().unwrap(),
        "--lexicon",
        workspace_root().join("data/AFINN-111.txt").to_str().unwrap(),
        "--lexicon",
        norms.to_str().unwrap(),
        "--scale",
        "-5:0:5",
        "--scale",
        "1:5:9",
        "--polarity-pos",
        pos.to_str().unwrap(),
        "--polarity-neg",
        neg.to_str().unwrap(),
        "--dual-column",
        &format!("SS={}", dual.display()),
        "--out",
        out.to_str().unwrap(),
    ]);

    // Table layout: gold row plus one row/column per method, in both
    // matrices and the JSON mirror.
    let pearson_csv = fs::read_to_string(out.join("correlation_pearson.csv")).unwrap();
    let header = pearson_csv.lines().next().unwrap();
    assert_eq!(header, ",gold,AFINN-111,norms,pos,SS");
    assert_eq!(pearson_csv.lines().count(), 6);
    let spearman_csv = fs::read_to_string(out.join("correlation_spearman.csv")).unwrap();
    assert_eq!(spearman_csv.lines().next().unwrap(), header);
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("eval.json")).unwrap()).unwrap();
    assert_eq!(doc["columns"].as_array().unwrap().len(), 5);

    // The docs state the replication targets and the tolerance.
    let readme = fs::read_to_string(workspace_root().join("README.md")).unwrap();
    for target in [
        "0.564", "0.525", "0.374", "0.458", "0.610", // pearson vs gold
        "0.596", "0.544", "0.422", "0.491", "0.616", // spearman vs gold
        "299", "0.49", "0.52", // intersection and sub-lexicon pearson
        "0.81",  // cross-lexicon rank correlation
        "0.03",  // tolerance
    ] {
        assert!(readme.contains(target), "README.md must state target {target}");
    }
    pass(7, "eval drives user-supplied files in the documented layout; targets documented");
}

// --- criterion 8 -----------------------------------------------------

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut entries: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    entries.sort();
    entries
}

#[test]
fn criterion_8_cli_determinism() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let corpus_path = dir.join("c.tsv");
    fs::write(
        &corpus_path,
        "t1\tgood day\t7,8\nt2\tbad day\t2,3\nt3\tmeh\t5,6\nt4\twin big\t8,9\n",
    )
    .unwrap();
    let lex_a = dir.join("a.txt");
    fs::write(&lex_a, "good\t3\nbad\t-3\nwin\t4\nbig\t1\n").unwrap();
    let lex_b = dir.join("b.txt");
    fs::write(&lex_b, "good\t7\nbad\t3\nday\t5.5\n").unwrap();
    let ext = dir.join("e.tsv");
    fs::write(&ext, "t1\t1\nt2\t-1\nt3\t0\nt4\t2\n").unwrap();

    let afinn_path = workspace_root().join("data/AFINN-111.txt");
    let commands: Vec<Vec<String>> = vec![
        vec![
            "score".into(),
            "--lexicon".into(),
            afinn_path.display().to_string(),
            "--corpus".into(),
            corpus_path.display().to_string(),
            "--scheme".into(),
            "all".into(),
            "--match".into(),
            "stemmed".into(),
        ],
        vec![
            "eval".into(),
            "--corpus".into(),
            corpus_path.display().to_string(),
            "--lexicon".into(),
            lex_a.display().to_string(),
            "--column".into(),
            format!("ext={}", ext.display()),
        ],
        vec![
            "compare".into(),
            "--lexicon".into(),
            lex_a.display().to_string(),
            "--lexicon".into(),
            lex_b.display().to_string(),
            "--scale".into(),
            "-5:0:5".into(),
            "--scale".into(),
            "1:5:9".into(),
        ],
        vec![
            "curve".into(),
            "--lexicon".into(),
            lex_a.display().to_string(),
            "--corpus".into(),
            corpus_path.display().to_string(),
            "--sizes".into(),
            "2,4".into(),
            "--resamples".into(),
            "7".into(),
            "--seed".into(),
            "99".into(),
        ],
    ];

    for (i, base) in commands.iter().enumerate() {
        // identical config both times, including the --out directory;
        // the second run overwrites the first
        let needs_out = base[0] != "score";
        let out_dir = dir.join(format!("out{i}"));
        let run_once = || -> (Vec<u8>, Vec<(String, Vec<u8>)>) {
            let mut args = base.clone();
            if needs_out {
                args.push("--out".into());
                args.push(out_dir.display().to_string());
            }
            let output = bin().args(&args).output().expect("spawn sentilex");
            assert!(
                output.status.success(),
                "{base:?}: {}",
                String::from_utf8_lossy(&output.stderr)
            );
            let artifacts = if needs_out {
                read_dir_sorted(&out_dir)
            } else {
                Vec::new()
            };
            (output.stdout, artifacts)
        };
        let first = run_once();
        let second = run_once();
        assert_eq!(first.0, second.0, "stdout of {base:?}");
        assert_eq!(
            first.1.len(),
            second.1.len(),
            "artifact count of {base:?}"
        );
        for ((name_a, bytes_a), (name_b, bytes_b)) in first.1.iter().zip(&second.1) {
            assert_eq!(name_a, name_b);
            assert_eq!(bytes_a, bytes_b, "artifact {name_a} of {base:?}");
        }
    }
    pass(8, "all four commands are byte-identical across repeated runs");
}
