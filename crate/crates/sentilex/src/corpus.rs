//! Gold-labeled corpora and externally produced score columns.
//!
//! Corpus format: UTF-8 TSV, one record per line as
//! `id<TAB>text<TAB>r1,r2,...` where ratings are integers in 1..9 and the
//! text field escapes backslash, tab, newline and carriage return as
//! `\\`, `\t`, `\n`, `\r`. Score columns are `id<TAB>value` lines and
//! dual-strength columns `id<TAB>pos<TAB>neg`; both align to the corpus
//! by id, not by line order.

use std::collections::{BTreeMap, HashSet};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// One corpus item: raw text plus its human ratings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledText {
    pub id: String,
    pub text: String,
    /// Ratings on the 1..9 scale; non-empty.
    pub ratings: Vec<i32>,
}

impl LabeledText {
    /// Mean of the ratings: the per-text gold score, in [1, 9].
    pub fn gold_score(&self) -> f64 {
        self.ratings.iter().map(|&r| r as f64).sum::<f64>() / self.ratings.len() as f64
    }
}

/// A simultaneous positive/negative strength pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualStrength {
    positive: i32,
    negative: i32,
}

impl DualStrength {
    /// `positive` in 1..5, `negative` in -5..-1.
    pub fn new(positive: i32, negative: i32) -> Option<Self> {
        if (1..=5).contains(&positive) && (-5..=-1).contains(&negative) {
            Some(DualStrength { positive, negative })
        } else {
            None
        }
    }

    pub fn positive(&self) -> i32 {
        self.positive
    }

    pub fn negative(&self) -> i32 {
        self.negative
    }
}

/// Collapse a dual-strength pair to one value: whichever magnitude is
/// larger wins, and equal magnitudes zero out.
pub fn collapse_dual(d: DualStrength) -> i32 {
    let pos_mag = d.positive;
    let neg_mag = -d.negative;
    if pos_mag > neg_mag {
        d.positive
    } else if neg_mag > pos_mag {
        d.negative
    } else {
        0
    }
}

/// A named score column aligned to corpus order.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreColumn {
    pub name: String,
    pub values: Vec<f64>,
}

fn escape_text(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            _ => out.push(c),
        }
    }
    out
}

fn unescape_text(raw: &str, line: usize) -> Result<String> {
    let mut out = String::with_capacity(raw.len());
    let mut chars = raw.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('\\') => out.push('\\'),
            Some('t') => out.push('\t'),
            Some('n') => out.push('\n'),
            Some('r') => out.push('\r'),
            other => {
                return Err(Error::MalformedLine {
                    line,
                    reason: match other {
                        Some(c) => format!("unknown escape \\{c} in text field"),
                        None => "dangling backslash in text field".into(),
                    },
                });
            }
        }
    }
    Ok(out)
}

/// Load a corpus TSV stream; records keep file order.
pub fn load_corpus(reader: impl BufRead) -> Result<Vec<LabeledText>> {
    let mut records = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.is_empty() {
            continue;
        }
        let mut fields = line.splitn(3, '\t');
        let id = fields.next().unwrap_or_default();
        let (raw_text, raw_ratings) = match (fields.next(), fields.next()) {
            (Some(t), Some(r)) => (t, r),
            _ => {
                return Err(Error::MalformedLine {
                    line: line_no,
                    reason: "expected id<TAB>text<TAB>ratings".into(),
                })
            }
        };
        if id.is_empty() {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: "empty id".into(),
            });
        }
        if !seen.insert(id.to_string()) {
            return Err(Error::DuplicateId {
                line: line_no,
                id: id.to_string(),
            });
        }
        let text = unescape_text(raw_text, line_no)?;
        let mut ratings = Vec::new();
        if !raw_ratings.is_empty() {
            for part in raw_ratings.split(',') {
                let rating: i64 = part.trim().parse().map_err(|_| Error::MalformedLine {
                    line: line_no,
                    reason: format!("non-integer rating {part:?}"),
                })?;
                if !(1..=9).contains(&rating) {
                    return Err(Error::RatingOutOfRange {
                        line: line_no,
                        id: id.to_string(),
                        rating,
                    });
                }
                ratings.push(rating as i32);
            }
        }
        if ratings.is_empty() {
            return Err(Error::EmptyRatings {
                line: line_no,
                id: id.to_string(),
            });
        }
        records.push(LabeledText {
            id: id.to_string(),
            text,
            ratings,
        });
    }
    Ok(records)
}

/// Serialize a corpus back to the canonical TSV form. Loading the output
/// reproduces the input byte for byte when the input was canonical.
pub fn write_corpus(corpus: &[LabeledText], mut writer: impl Write) -> Result<()> {
    for record in corpus {
        let ratings: Vec<String> = record.ratings.iter().map(|r| r.to_string()).collect();
        writeln!(
            writer,
            "{}\t{}\t{}",
            record.id,
            escape_text(&record.text),
            ratings.join(",")
        )?;
    }
    Ok(())
}

/// The corpus's gold scores as a column named `gold`.
pub fn gold_column(corpus: &[LabeledText]) -> ScoreColumn {
    ScoreColumn {
        name: "gold".to_string(),
        values: corpus.iter().map(LabeledText::gold_score).collect(),
    }
}

fn align_by_id(
    by_id: BTreeMap<String, f64>,
    corpus: &[LabeledText],
    name: &str,
) -> Result<ScoreColumn> {
    let mut values = Vec::with_capacity(corpus.len());
    for record in corpus {
        match by_id.get(&record.id) {
            Some(v) => values.push(*v),
            None => {
                return Err(Error::MissingId {
                    id: record.id.clone(),
                })
            }
        }
    }
    Ok(ScoreColumn {
        name: name.to_string(),
        values,
    })
}

fn parse_id_rows(
    reader: impl BufRead,
    corpus: &[LabeledText],
    expected_fields: usize,
) -> Result<Vec<(usize, String, Vec<String>)>> {
    let known: HashSet<&str> = corpus.iter().map(|r| r.id.as_str()).collect();
    let mut rows = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != expected_fields {
            return Err(Error::MalformedLine {
                line: line_no,
                reason: format!(
                    "expected {expected_fields} tab-separated fields, found {}",
                    fields.len()
                ),
            });
        }
        let id = fields[0];
        if !known.contains(id) {
            return Err(Error::UnknownId {
                line: line_no,
                id: id.to_string(),
            });
        }
        if !seen.insert(id.to_string()) {
            return Err(Error::DuplicateId {
                line: line_no,
                id: id.to_string(),
            });
        }
        rows.push((
            line_no,
            id.to_string(),
            fields[1..].iter().map(|s| s.to_string()).collect(),
        ));
    }
    Ok(rows)
}

/// Load an `id<TAB>value` column and align it to corpus order.
pub fn load_score_column(
    reader: impl BufRead,
    corpus: &[LabeledText],
    name: &str,
) -> Result<ScoreColumn> {
    let mut by_id = BTreeMap::new();
    for (line_no, id, fields) in parse_id_rows(reader, corpus, 2)? {
        let value: f64 = fields[0].trim().parse().map_err(|_| Error::MalformedLine {
            line: line_no,
            reason: format!("non-numeric value {:?}", fields[0]),
        })?;
        by_id.insert(id, value);
    }
    align_by_id(by_id, corpus, name)
}

/// Load an `id<TAB>pos<TAB>neg` dual-strength column, collapsing each
/// pair to a single value.
pub fn load_dual_column(
    reader: impl BufRead,
    corpus: &[LabeledText],
    name: &str,
) -> Result<ScoreColumn> {
    let mut by_id = BTreeMap::new();
    for (line_no, id, fields) in parse_id_rows(reader, corpus, 3)? {
        let parse = |s: &str| -> Result<i64> {
            s.trim().parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                reason: format!("non-integer strength {s:?}"),
            })
        };
        let positive = parse(&fields[0])?;
        let negative = parse(&fields[1])?;
        let dual = DualStrength::new(positive as i32, negative as i32).ok_or(
            Error::DualOutOfBounds {
                line: line_no,
                positive,
                negative,
            },
        )?;
        by_id.insert(id, collapse_dual(dual) as f64);
    }
    align_by_id(by_id, corpus, name)
}
