//! Evaluation harness: coverage counts, pairwise correlation matrices,
//! scheme sweeps, and resampled learning curves.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::compare::sublexicon;
use crate::corpus::{gold_column, LabeledText, ScoreColumn};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::matcher::{build_index, LookupIndex, MatchStrategy};
use crate::scorer::{score_text, ScoringScheme};
use crate::stats;
use crate::tokenize::{tokenize, Token};

/// How much of a corpus vocabulary a lexicon reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub total_tokens: usize,
    pub unique_tokens: usize,
    /// Distinct index keys hit by the corpus vocabulary.
    pub unique_matched: usize,
    pub lexicon_size: usize,
}

/// Count token and match coverage of a phrase-free lexicon over a corpus.
pub fn coverage(
    corpus: &[LabeledText],
    lexicon: &Lexicon,
    strategy: MatchStrategy,
) -> Result<CoverageReport> {
    let index = build_index(lexicon, strategy)?;
    let mut total_tokens = 0;
    let mut unique = std::collections::BTreeSet::new();
    for record in corpus {
        for token in tokenize(&record.text) {
            total_tokens += 1;
            unique.insert(token.text);
        }
    }
    let mut hit_keys = std::collections::BTreeSet::new();
    for token in &unique {
        if let Some((key, _)) = index.lookup_entry(token) {
            hit_keys.insert(key.to_string());
        }
    }
    Ok(CoverageReport {
        total_tokens,
        unique_tokens: unique.len(),
        unique_matched: hit_keys.len(),
        lexicon_size: lexicon.len(),
    })
}

/// Pairwise Pearson and Spearman matrices over gold plus score columns.
///
/// Cells are `None` where a correlation is undefined (constant column);
/// gaps are reported, never silently zeroed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub column_names: Vec<String>,
    pub pearson: Vec<Vec<Option<f64>>>,
    pub spearman: Vec<Vec<Option<f64>>>,
}

impl CorrelationReport {
    /// Column names whose diagonal is undefined, i.e. constant columns.
    pub fn degenerate_columns(&self) -> Vec<&str> {
        self.column_names
            .iter()
            .enumerate()
            .filter(|(i, _)| self.pearson[*i][*i].is_none())
            .map(|(_, n)| n.as_str())
            .collect()
    }
}

fn correlation_cell(x: &[f64], y: &[f64]) -> Result<(Option<f64>, Option<f64>)> {
    let p = match stats::pearson(x, y) {
        Ok(v) => Some(v),
        Err(Error::DegenerateSeries { .. }) => None,
        Err(e) => return Err(e),
    };
    let s = match stats::spearman(x, y) {
        Ok(v) => Some(v),
        Err(Error::DegenerateSeries { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok((p, s))
}

/// Build the full symmetric correlation matrix for gold plus columns.
pub fn correlation_matrix(
    gold: &ScoreColumn,
    columns: &[ScoreColumn],
) -> Result<CorrelationReport> {
    let mut all: Vec<&ScoreColumn> = Vec::with_capacity(columns.len() + 1);
    all.push(gold);
    all.extend(columns.iter());
    let n = all.len();
    if gold.values.len() < 2 {
        return Err(Error::SeriesTooShort {
            len: gold.values.len(),
        });
    }
    for column in &all {
        if column.values.len() != gold.values.len() {
            return Err(Error::LengthMismatch {
                left: gold.values.len(),
                right: column.values.len(),
            });
        }
    }
    let mut pearson = vec![vec![None; n]; n];
    let mut spearman = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i..n {
            let (p, s) = correlation_cell(&all[i].values, &all[j].values)?;
            pearson[i][j] = p;
            pearson[j][i] = p;
            spearman[i][j] = s;
            spearman[j][i] = s;
        }
    }
    Ok(CorrelationReport {
        column_names: all.iter().map(|c| c.name.clone()).collect(),
        pearson,
        spearman,
    })
}

/// One scheme's correlations against gold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchemeSweepRow {
    pub scheme: ScoringScheme,
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
}

/// Score the corpus under a scheme, returning one aligned column.
pub fn score_column(
    corpus: &[LabeledText],
    index: &LookupIndex,
    scheme: ScoringScheme,
    name: &str,
) -> ScoreColumn {
    let neutral = index.scale().neutral();
    ScoreColumn {
        name: name.to_string(),
        values: corpus
            .iter()
            .map(|r| score_text(&tokenize(&r.text), index, scheme, neutral).value)
            .collect(),
    }
}

/// Evaluate every scoring scheme against gold on the same corpus and
/// matching strategy.
pub fn scheme_sweep(
    corpus: &[LabeledText],
    lexicon: &Lexicon,
    strategy: MatchStrategy,
) -> Result<Vec<SchemeSweepRow>> {
    if corpus.len() < 2 {
        return Err(Error::SeriesTooShort { len: corpus.len() });
    }
    let index = build_index(lexicon, strategy)?;
    let gold = gold_column(corpus);
    let tokens: Vec<Vec<Token>> = corpus.iter().map(|r| tokenize(&r.text)).collect();
    let neutral = index.scale().neutral();
    let mut rows = Vec::with_capacity(ScoringScheme::ALL.len());
    for scheme in ScoringScheme::ALL {
        let values: Vec<f64> = tokens
            .iter()
            .map(|t| score_text(t, &index, scheme, neutral).value)
            .collect();
        let (pearson, spearman) = correlation_cell(&values, &gold.values)?;
        rows.push(SchemeSweepRow {
            scheme,
            pearson,
            spearman,
        });
    }
    Ok(rows)
}

/// Correlation samples for one sub-lexicon size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LearningCurvePoint {
    pub size: usize,
    /// One entry per resample; `None` records an undefined correlation.
    pub pearson_samples: Vec<Option<f64>>,
    pub spearman_samples: Vec<Option<f64>>,
}

/// Evaluate random sub-lexicons of each size against gold.
///
/// Sampling is uniform without replacement. Each (size, resample) pair
/// draws from its own seeded substream, so results are bit-reproducible
/// regardless of evaluation order.
pub fn learning_curve(
    corpus: &[LabeledText],
    lexicon: &Lexicon,
    strategy: MatchStrategy,
    sizes: &[usize],
    resamples: usize,
    seed: u64,
) -> Result<Vec<LearningCurvePoint>> {
    if resamples == 0 {
        return Err(Error::NoResamples);
    }
    for &size in sizes {
        if size > lexicon.len() {
            return Err(Error::SizeExceedsLexicon {
                size,
                lexicon_size: lexicon.len(),
            });
        }
    }
    if corpus.len() < 2 {
        return Err(Error::SeriesTooShort { len: corpus.len() });
    }

    let gold = gold_column(corpus);
    let tokens: Vec<Vec<Token>> = corpus.iter().map(|r| tokenize(&r.text)).collect();
    let terms: Vec<String> = lexicon.entries().map(|(t, _)| t.to_string()).collect();
    let neutral = lexicon.scale().neutral();

    let mut points = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let mut pearson_samples = Vec::with_capacity(resamples);
        let mut spearman_samples = Vec::with_capacity(resamples);
        for rep in 0..resamples {
            let mut rng = substream(seed, size, rep);
            let picked: Vec<String> = rand::seq::index::sample(&mut rng, terms.len(), size)
                .iter()
                .map(|i| terms[i].clone())
                .collect();
            let sub = sublexicon(&picked, lexicon)?;
            let index = build_index(&sub, strategy)?;
            let values: Vec<f64> = tokens
                .iter()
                .map(|t| score_text(t, &index, ScoringScheme::MeanAllTokens, neutral).value)
                .collect();
            let (p, s) = correlation_cell(&values, &gold.values)?;
            pearson_samples.push(p);
            spearman_samples.push(s);
        }
        points.push(LearningCurvePoint {
            size,
            pearson_samples,
            spearman_samples,
        });
    }
    Ok(points)
}

/// Independent RNG stream for one (size, resample) cell.
fn substream(seed: u64, size: usize, rep: usize) -> ChaCha8Rng {
    debug_assert!(size < (1 << 32) && rep < (1 << 32));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((size as u64) << 32) | rep as u64);
    rng
}

/// Five-number summary with quartiles from the median-of-halves rule:
/// the middle element is excluded from both halves when the count is odd.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiveNumber {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

fn median_of(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Summary over the defined values only; errors when none are defined.
pub fn five_number_summary(samples: &[Option<f64>]) -> Result<FiveNumber> {
    let mut defined: Vec<f64> = samples.iter().filter_map(|s| *s).collect();
    if defined.is_empty() {
        return Err(Error::AllSamplesUndefined);
    }
    defined.sort_by(f64::total_cmp);
    let n = defined.len();
    if n == 1 {
        let v = defined[0];
        return Ok(FiveNumber {
            min: v,
            q1: v,
            median: v,
            q3: v,
            max: v,
        });
    }
    Ok(FiveNumber {
        min: defined[0],
        q1: median_of(&defined[..n / 2]),
        median: median_of(&defined),
        q3: median_of(&defined[n.div_ceil(2)..]),
        max: defined[n - 1],
    })
}

/// Boxplot summaries of both statistics of a learning-curve point.
pub fn summarize_boxplot(point: &LearningCurvePoint) -> Result<(FiveNumber, FiveNumber)> {
    Ok((
        five_number_summary(&point.pearson_samples)?,
        five_number_summary(&point.spearman_samples)?,
    ))
}
