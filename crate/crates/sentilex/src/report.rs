//! CSV and JSON emission for evaluation artifacts.
//!
//! CSV floats use the shortest round-trip representation; undefined
//! correlations become empty CSV fields and JSON nulls. All output is
//! deterministic for identical inputs.

use serde::Serialize;

use crate::compare::IntersectionResult;
use crate::error::Result;
use crate::experiments::{
    five_number_summary, CorrelationReport, CoverageReport, FiveNumber, LearningCurvePoint,
};

/// Which correlation statistic a matrix holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Pearson,
    Spearman,
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::Pearson => "pearson",
            Statistic::Spearman => "spearman",
        }
    }
}

fn cell(value: Option<f64>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

/// One correlation matrix as CSV: header row of column names, then one
/// row per column.
pub fn correlation_matrix_csv(report: &CorrelationReport, which: Statistic) -> Result<String> {
    let matrix = match which {
        Statistic::Pearson => &report.pearson,
        Statistic::Spearman => &report.spearman,
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(report.column_names.iter().cloned());
    writer.write_record(&header)?;
    for (name, row) in report.column_names.iter().zip(matrix) {
        let mut record = vec![name.clone()];
        record.extend(row.iter().map(|v| cell(*v)));
        writer.write_record(&record)?;
    }
    Ok(String::from_utf8(writer.into_inner().expect("vec writer")).expect("utf-8 csv"))
}

/// Coverage of one lexicon, labeled for reports.
#[derive(Debug, Clone, Serialize)]
pub struct NamedCoverage {
    pub lexicon: String,
    #[serde(flatten)]
    pub coverage: CoverageReport,
}

#[derive(Serialize)]
struct EvalDocument<'a> {
    columns: &'a [String],
    pearson: &'a [Vec<Option<f64>>],
    spearman: &'a [Vec<Option<f64>>],
    degenerate_columns: Vec<&'a str>,
    coverage: &'a [NamedCoverage],
}

/// JSON document mirroring the matrix CSVs plus coverage counts.
pub fn eval_json(report: &CorrelationReport, coverage: &[NamedCoverage]) -> Result<String> {
    let doc = EvalDocument {
        columns: &report.column_names,
        pearson: &report.pearson,
        spearman: &report.spearman,
        degenerate_columns: report.degenerate_columns(),
        coverage,
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

/// Learning-curve samples as CSV rows of size, resample, pearson, spearman.
pub fn curve_csv(points: &[LearningCurvePoint]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["size", "resample", "pearson", "spearman"])?;
    for point in points {
        for (rep, (p, s)) in point
            .pearson_samples
            .iter()
            .zip(&point.spearman_samples)
            .enumerate()
        {
            writer.write_record([
                point.size.to_string(),
                rep.to_string(),
                cell(*p),
                cell(*s),
            ])?;
        }
    }
    Ok(String::from_utf8(writer.into_inner().expect("vec writer")).expect("utf-8 csv"))
}

/// Boxplot summaries per size and statistic. Sizes where every sample is
/// undefined emit empty summary fields.
pub fn curve_summary_csv(points: &[LearningCurvePoint]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "size", "statistic", "defined", "min", "q1", "median", "q3", "max",
    ])?;
    for point in points {
        for (statistic, samples) in [
            ("pearson", &point.pearson_samples),
            ("spearman", &point.spearman_samples),
        ] {
            let defined = samples.iter().flatten().count();
            let summary = five_number_summary(samples).ok();
            let mut record = vec![
                point.size.to_string(),
                statistic.to_string(),
                defined.to_string(),
            ];
            match summary {
                Some(s) => record.extend(
                    [s.min, s.q1, s.median, s.q3, s.max]
                        .iter()
                        .map(|v| v.to_string()),
                ),
                None => record.extend(std::iter::repeat_n(String::new(), 5)),
            }
            writer.write_record(&record)?;
        }
    }
    Ok(String::from_utf8(writer.into_inner().expect("vec writer")).expect("utf-8 csv"))
}

#[derive(Serialize)]
struct CurvePointDocument<'a> {
    size: usize,
    pearson: &'a [Option<f64>],
    spearman: &'a [Option<f64>],
    pearson_summary: Option<FiveNumber>,
    spearman_summary: Option<FiveNumber>,
}

#[derive(Serialize)]
struct CurveDocument<'a> {
    seed: u64,
    resamples: usize,
    points: Vec<CurvePointDocument<'a>>,
}

/// JSON document mirroring curve.csv and its summaries.
pub fn curve_json(points: &[LearningCurvePoint], seed: u64, resamples: usize) -> Result<String> {
    let doc = CurveDocument {
        seed,
        resamples,
        points: points
            .iter()
            .map(|p| CurvePointDocument {
                size: p.size,
                pearson: &p.pearson_samples,
                spearman: &p.spearman_samples,
                pearson_summary: five_number_summary(&p.pearson_samples).ok(),
                spearman_summary: five_number_summary(&p.spearman_samples).ok(),
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

/// One scored text under one scheme.
#[derive(Debug, Clone, Serialize)]
pub struct ScoreRow {
    pub id: String,
    pub scheme: &'static str,
    pub value: f64,
}

/// Score stream as CSV with an `id,scheme,value` header.
pub fn scores_csv(rows: &[ScoreRow]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["id", "scheme", "value"])?;
    for row in rows {
        writer.write_record([row.id.clone(), row.scheme.to_string(), row.value.to_string()])?;
    }
    Ok(String::from_utf8(writer.into_inner().expect("vec writer")).expect("utf-8 csv"))
}

/// Score stream as newline-delimited JSON objects.
pub fn scores_ndjson(rows: &[ScoreRow]) -> Result<String> {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(row)?);
        out.push('\n');
    }
    Ok(out)
}

fn pairs_csv(result: &IntersectionResult, rows: impl Iterator<Item = usize>) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["term", "valence_a", "valence_b"])?;
    for i in rows {
        writer.write_record([
            result.terms[i].clone(),
            result.valences_a[i].to_string(),
            result.valences_b[i].to_string(),
        ])?;
    }
    Ok(String::from_utf8(writer.into_inner().expect("vec writer")).expect("utf-8 csv"))
}

/// All shared terms with both valences.
pub fn intersection_csv(result: &IntersectionResult) -> Result<String> {
    pairs_csv(result, 0..result.terms.len())
}

/// Only the terms with strictly opposite valence signs.
pub fn discrepancy_csv(
    result: &IntersectionResult,
    neutral_a: f64,
    neutral_b: f64,
) -> Result<String> {
    let rows = (0..result.terms.len()).filter(|&i| {
        let da = result.valences_a[i] - neutral_a;
        let db = result.valences_b[i] - neutral_b;
        (da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)
    });
    pairs_csv(result, rows)
}
