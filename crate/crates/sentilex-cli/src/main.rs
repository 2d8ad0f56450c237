//! Batch command line front end: score texts, evaluate lexicons against
//! gold-labeled corpora, compare word lists, and trace learning curves.
//!
//! Every command is deterministic given its flags (including `--seed`),
//! and artifacts are written atomically via temp-and-rename so a failing
//! run never leaves partial output behind.

use std::fs::{self, File};
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sentilex::compare::{intersect, intersection_rank_correlation, sign_discrepancies};
use sentilex::corpus::{gold_column, load_corpus, load_dual_column, load_score_column, LabeledText};
use sentilex::experiments::{
    correlation_matrix, coverage, five_number_summary, learning_curve, score_column,
    CorrelationReport,
};
use sentilex::lexicon::read_term_list;
use sentilex::report;
use sentilex::{build_index, tokenize, Lexicon, MatchStrategy, ScoringScheme, ValenceScale};

#[derive(Parser)]
#[command(
    name = "sentilex",
    version,
    about = "Score and evaluate sentiment word lists over short informal text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score texts with one lexicon under one or all schemes
    Score(ScoreArgs),
    /// Correlation matrix of lexicons and external columns against gold
    Eval(EvalArgs),
    /// Intersect two lexicons: rank correlation and sign discrepancies
    Compare(CompareArgs),
    /// Resampled learning curve of correlation against lexicon size
    Curve(CurveArgs),
}

#[derive(Clone, Copy)]
struct ScaleSpec(ValenceScale);

impl FromStr for ScaleSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected MIN:NEUTRAL:MAX, got {s:?}"));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.parse().map_err(|_| format!("non-numeric bound {p:?}")))
            .collect::<std::result::Result<_, String>>()?;
        ValenceScale::new(nums[0], nums[1], nums[2])
            .map(ScaleSpec)
            .map_err(|e| e.to_string())
    }
}

#[derive(Clone)]
struct ColumnSpec {
    name: String,
    path: PathBuf,
}

impl FromStr for ColumnSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.split_once('=') {
            Some((name, path)) if !name.is_empty() && !path.is_empty() => Ok(ColumnSpec {
                name: name.to_string(),
                path: PathBuf::from(path),
            }),
            _ => Err(format!("expected NAME=PATH, got {s:?}")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatchArg {
    Exact,
    Stemmed,
}

impl From<MatchArg> for MatchStrategy {
    fn from(arg: MatchArg) -> Self {
        match arg {
            MatchArg::Exact => MatchStrategy::Exact,
            MatchArg::Stemmed => MatchStrategy::Stemmed,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Mean,
    Sum,
    MeanMatched,
    Extreme,
    Quantized,
    All,
}

impl SchemeArg {
    fn schemes(self) -> Vec<ScoringScheme> {
        match self {
            SchemeArg::Mean => vec![ScoringScheme::MeanAllTokens],
            SchemeArg::Sum => vec![ScoringScheme::SumRaw],
            SchemeArg::MeanMatched => vec![ScoringScheme::MeanMatched],
            SchemeArg::Extreme => vec![ScoringScheme::Extreme],
            SchemeArg::Quantized => vec![ScoringScheme::Quantized],
            SchemeArg::All => ScoringScheme::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Lexicon inputs shared by all commands. `--scale` values pair with
/// `--lexicon` values by position; unpaired lexicons use -5:0:5.
#[derive(Args)]
struct LexiconOpts {
    /// Valence word list file (term<TAB>valence per line); repeatable
    #[arg(long = "lexicon", value_name = "PATH")]
    lexicons: Vec<PathBuf>,

    /// Scale of the --lexicon at the same position, as MIN:NEUTRAL:MAX
    #[arg(
        long = "scale",
        value_name = "MIN:NEUTRAL:MAX",
        allow_hyphen_values = true
    )]
    scales: Vec<ScaleSpec>,

    /// Positive half of a polarity word list (one term per line)
    #[arg(long = "polarity-pos", value_name = "PATH", requires = "polarity_neg")]
    polarity_pos: Option<PathBuf>,

    /// Negative half of a polarity word list
    #[arg(long = "polarity-neg", value_name = "PATH", requires = "polarity_pos")]
    polarity_neg: Option<PathBuf>,
}

impl LexiconOpts {
    fn load(&self) -> Result<Vec<Lexicon>> {
        if self.scales.len() > self.lexicons.len() {
            bail!(
                "{} --scale values for {} --lexicon values",
                self.scales.len(),
                self.lexicons.len()
            );
        }
        let mut lexicons = Vec::new();
        for (i, path) in self.lexicons.iter().enumerate() {
            let scale = self
                .scales
                .get(i)
                .map(|s| s.0)
                .unwrap_or_else(ValenceScale::microblog);
            let lex = Lexicon::from_tsv(open(path)?, scale, &stem_name(path))
                .with_context(|| format!("in lexicon file {}", path.display()))?;
            lexicons.push(lex);
        }
        if let (Some(pos), Some(neg)) = (&self.polarity_pos, &self.polarity_neg) {
            let pos_terms = read_term_list(open(pos)?)
                .with_context(|| format!("in polarity file {}", pos.display()))?;
            let neg_terms = read_term_list(open(neg)?)
                .with_context(|| format!("in polarity file {}", neg.display()))?;
            let lex = Lexicon::from_polarity(&pos_terms, &neg_terms, &stem_name(pos))
                .with_context(|| {
                    format!("building polarity lexicon from {}", pos.display())
                })?;
            lexicons.push(lex);
        }
        Ok(lexicons)
    }

    fn load_exactly(&self, n: usize) -> Result<Vec<Lexicon>> {
        let lexicons = self.load()?;
        if lexicons.len() != n {
            bail!(
                "this command needs exactly {n} lexicon{} (counting a polarity pair as one), got {}",
                if n == 1 { "" } else { "s" },
                lexicons.len()
            );
        }
        Ok(lexicons)
    }
}

#[derive(Args)]
struct ScoreArgs {
    #[command(flatten)]
    lexicon: LexiconOpts,

    /// Corpus TSV (id<TAB>text<TAB>r1,r2,...)
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "raw",
        required_unless_present = "raw"
    )]
    corpus: Option<PathBuf>,

    /// Plain input, one raw text per line; ids are 1-based line numbers
    #[arg(long, value_name = "PATH")]
    raw: Option<PathBuf>,

    #[arg(long = "match", value_enum, default_value_t = MatchArg::Exact)]
    matching: MatchArg,

    #[arg(long, value_enum, default_value_t = SchemeArg::Mean)]
    scheme: SchemeArg,

    /// Output stream format
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Write the stream to DIR/scores.csv or DIR/scores.ndjson instead of
    /// standard output
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    lexicon: LexiconOpts,

    /// Corpus TSV with gold ratings
    #[arg(long, value_name = "PATH")]
    corpus: PathBuf,

    #[arg(long = "match", value_enum, default_value_t = MatchArg::Exact)]
    matching: MatchArg,

    /// Scheme used to score each lexicon column (one scheme, not all)
    #[arg(long, value_enum, default_value_t = SchemeArg::Mean)]
    scheme: SchemeArg,

    /// External score column as NAME=PATH (file: id<TAB>value)
    #[arg(long = "column", value_name = "NAME=PATH")]
    columns: Vec<ColumnSpec>,

    /// External dual-strength column as NAME=PATH (file: id<TAB>pos<TAB>neg)
    #[arg(long = "dual-column", value_name = "NAME=PATH")]
    dual_columns: Vec<ColumnSpec>,

    /// Output directory for correlation_pearson.csv,
    /// correlation_spearman.csv and eval.json
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    lexicon: LexiconOpts,

    #[arg(long = "match", value_enum, default_value_t = MatchArg::Exact)]
    matching: MatchArg,

    /// Output directory for intersection.csv and discrepancies.csv
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

#[derive(Args)]
struct CurveArgs {
    #[command(flatten)]
    lexicon: LexiconOpts,

    #[arg(long, value_name = "PATH")]
    corpus: PathBuf,

    #[arg(long = "match", value_enum, default_value_t = MatchArg::Exact)]
    matching: MatchArg,

    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Comma-separated sub-lexicon sizes; default doubles from 5 up to
    /// the full (phrase-stripped) lexicon size
    #[arg(long, value_name = "N,N,...", value_delimiter = ',')]
    sizes: Vec<usize>,

    #[arg(long, default_value_t = 50)]
    resamples: usize,

    /// Output directory for curve.csv, curve_summary.csv and curve.json
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> Result<()> {
    match Cli::parse().command {
        Command::Score(args) => cmd_score(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Curve(args) => cmd_curve(args),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(File::open(path).with_context(|| {
        format!("cannot open {}", path.display())
    })?))
}

fn stem_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn read_corpus(path: &Path) -> Result<Vec<LabeledText>> {
    load_corpus(open(path)?).with_context(|| format!("in corpus file {}", path.display()))
}

fn write_atomic(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)
        .with_context(|| format!("cannot create output directory {}", dir.display()))?;
    let target = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, contents).with_context(|| format!("cannot write {}", tmp.display()))?;
    fs::rename(&tmp, &target)
        .with_context(|| format!("cannot move output into place at {}", target.display()))?;
    Ok(target)
}

fn fmt_cell(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.3}"),
        None => "-".to_string(),
    }
}

fn cmd_score(args: ScoreArgs) -> Result<()> {
    let lexicon = args.lexicon.load_exactly(1)?.remove(0).strip_phrases();
    let index = build_index(&lexicon, args.matching.into())?;
    let neutral = lexicon.scale().neutral();

    let texts: Vec<(String, String)> = match (&args.corpus, &args.raw) {
        (Some(path), None) => read_corpus(path)?
            .into_iter()
            .map(|r| (r.id, r.text))
            .collect(),
        (None, Some(path)) => {
            let contents = fs::read_to_string(path)
                .with_context(|| format!("cannot open {}", path.display()))?;
            contents
                .lines()
                .enumerate()
                .map(|(i, line)| ((i + 1).to_string(), line.to_string()))
                .collect()
        }
        _ => unreachable!("clap enforces corpus xor raw"),
    };

    let mut rows = Vec::new();
    for (id, text) in &texts {
        let tokens = tokenize(text);
        for scheme in args.scheme.schemes() {
            let score = sentilex::score_text(&tokens, &index, scheme, neutral);
            rows.push(report::ScoreRow {
                id: id.clone(),
                scheme: scheme.name(),
                value: score.value,
            });
        }
    }

    let (rendered, file_name) = match args.format {
        FormatArg::Csv => (report::scores_csv(&rows)?, "scores.csv"),
        FormatArg::Json => (report::scores_ndjson(&rows)?, "scores.ndjson"),
    };
    match &args.out {
        Some(dir) => {
            let path = write_atomic(dir, file_name, &rendered)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn print_matrix(report: &CorrelationReport, which: report::Statistic) {
    let matrix = match which {
        report::Statistic::Pearson => &report.pearson,
        report::Statistic::Spearman => &report.spearman,
    };
    let width = report
        .column_names
        .iter()
        .map(|n| n.len())
        .max()
        .unwrap_or(4)
        .max(6);
    println!("{} correlations:", which.name());
    print!("{:>width$}", "");
    for name in &report.column_names {
        print!(" {name:>width$}");
    }
    println!();
    for (name, row) in report.column_names.iter().zip(matrix) {
        print!("{name:>width$}");
        for cell in row {
            print!(" {:>width$}", fmt_cell(*cell));
        }
        println!();
    }
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    if args.scheme == SchemeArg::All {
        bail!("--scheme all is not valid for eval; pick one scheme");
    }
    let scheme = args.scheme.schemes()[0];
    let strategy: MatchStrategy = args.matching.into();
    let corpus = read_corpus(&args.corpus)?;
    let lexicons: Vec<Lexicon> = args
        .lexicon
        .load()?
        .into_iter()
        .map(|l| l.strip_phrases())
        .collect();
    if lexicons.is_empty() && args.columns.is_empty() && args.dual_columns.is_empty() {
        bail!("need at least one --lexicon, --polarity-pos/--polarity-neg pair, --column or --dual-column");
    }

    let gold = gold_column(&corpus);
    let mut columns = Vec::new();
    let mut coverage_rows = Vec::new();
    for lexicon in &lexicons {
        let index = build_index(lexicon, strategy)?;
        columns.push(score_column(&corpus, &index, scheme, lexicon.name()));
        coverage_rows.push(report::NamedCoverage {
            lexicon: lexicon.name().to_string(),
            coverage: coverage(&corpus, lexicon, strategy)?,
        });
    }
    for spec in &args.columns {
        columns.push(
            load_score_column(open(&spec.path)?, &corpus, &spec.name)
                .with_context(|| format!("in score column {}", spec.path.display()))?,
        );
    }
    for spec in &args.dual_columns {
        columns.push(
            load_dual_column(open(&spec.path)?, &corpus, &spec.name)
                .with_context(|| format!("in dual-strength column {}", spec.path.display()))?,
        );
    }

    let matrix = correlation_matrix(&gold, &columns)?;

    write_atomic(
        &args.out,
        "correlation_pearson.csv",
        &report::correlation_matrix_csv(&matrix, report::Statistic::Pearson)?,
    )?;
    write_atomic(
        &args.out,
        "correlation_spearman.csv",
        &report::correlation_matrix_csv(&matrix, report::Statistic::Spearman)?,
    )?;
    write_atomic(&args.out, "eval.json", &report::eval_json(&matrix, &coverage_rows)?)?;

    let rating_counts = corpus.iter().map(|r| r.ratings.len());
    match (rating_counts.clone().min(), rating_counts.max()) {
        (Some(lo), Some(hi)) if lo == hi => {
            println!("corpus: {} texts, {lo} ratings each", corpus.len())
        }
        (Some(lo), Some(hi)) => {
            println!("corpus: {} texts, {lo}..{hi} ratings per text", corpus.len())
        }
        _ => println!("corpus: {} texts", corpus.len()),
    }
    for row in &coverage_rows {
        println!(
            "coverage {}: {} tokens, {} unique; {} of {} lexicon entries hit",
            row.lexicon,
            row.coverage.total_tokens,
            row.coverage.unique_tokens,
            row.coverage.unique_matched,
            row.coverage.lexicon_size
        );
    }
    print_matrix(&matrix, report::Statistic::Pearson);
    print_matrix(&matrix, report::Statistic::Spearman);
    let degenerate = matrix.degenerate_columns();
    if !degenerate.is_empty() {
        println!(
            "note: constant columns with undefined correlations: {}",
            degenerate.join(", ")
        );
    }
    println!("reports written to {}", args.out.display());
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let mut lexicons = args.lexicon.load_exactly(2)?;
    let b = lexicons.remove(1).strip_phrases();
    let a = lexicons.remove(0).strip_phrases();
    let strategy: MatchStrategy = args.matching.into();

    let result = intersect(&a, &b, strategy)?;
    let neutral_a = a.scale().neutral();
    let neutral_b = b.scale().neutral();
    let discrepancies = sign_discrepancies(&result, neutral_a, neutral_b);

    write_atomic(&args.out, "intersection.csv", &report::intersection_csv(&result)?)?;
    write_atomic(
        &args.out,
        "discrepancies.csv",
        &report::discrepancy_csv(&result, neutral_a, neutral_b)?,
    )?;

    println!(
        "{} ({} entries) vs {} ({} entries), {} matching",
        a.name(),
        a.len(),
        b.name(),
        b.len(),
        strategy.name()
    );
    if result.is_empty() {
        println!("intersection is empty; no correlation to report");
    } else {
        println!("intersection: {} keys", result.len());
        match intersection_rank_correlation(&result) {
            Ok(rho) => println!("rank correlation: {rho:.3}"),
            Err(_) => println!("rank correlation: undefined (constant valences)"),
        }
        println!("sign discrepancies: {}", discrepancies.len());
        for term in discrepancies.iter().take(10) {
            println!("  {term}");
        }
        if discrepancies.len() > 10 {
            println!("  ... and {} more", discrepancies.len() - 10);
        }
    }
    println!("reports written to {}", args.out.display());
    Ok(())
}

/// Sizes doubling from 5 up to the full lexicon, always ending at full.
fn default_sizes(full: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut size = 5.min(full);
    while size < full {
        sizes.push(size);
        size *= 2;
    }
    sizes.push(full);
    sizes
}

fn cmd_curve(args: CurveArgs) -> Result<()> {
    let lexicon = args.lexicon.load_exactly(1)?.remove(0).strip_phrases();
    if lexicon.is_empty() {
        bail!("lexicon {} has no single-word entries", lexicon.name());
    }
    let corpus = read_corpus(&args.corpus)?;
    let sizes = if args.sizes.is_empty() {
        default_sizes(lexicon.len())
    } else {
        args.sizes.clone()
    };

    let points = learning_curve(
        &corpus,
        &lexicon,
        args.matching.into(),
        &sizes,
        args.resamples,
        args.seed,
    )?;

    write_atomic(&args.out, "curve.csv", &report::curve_csv(&points)?)?;
    write_atomic(&args.out, "curve_summary.csv", &report::curve_summary_csv(&points)?)?;
    write_atomic(
        &args.out,
        "curve.json",
        &report::curve_json(&points, args.seed, args.resamples)?,
    )?;

    println!(
        "learning curve over {} texts, {} resamples per size, seed {}",
        corpus.len(),
        args.resamples,
        args.seed
    );
    for point in &points {
        let defined = point.pearson_samples.iter().flatten().count();
        let pearson = five_number_summary(&point.pearson_samples)
            .map(|s| format!("{:.3}", s.median))
            .unwrap_or_else(|_| "undefined".to_string());
        let spearman = five_number_summary(&point.spearman_samples)
            .map(|s| format!("{:.3}", s.median))
            .unwrap_or_else(|_| "undefined".to_string());
        println!(
            "size {:>6}: median pearson {pearson}, median spearman {spearman} ({defined}/{} defined)",
            point.size,
            point.pearson_samples.len()
        );
    }
    println!("reports written to {}", args.out.display());
    Ok(())
}
