//! Sentiment lexicons: named maps from lowercase terms to numeric valences
//! on a declared scale.
//!
//! Lexicons on different scales coexist (a -5..+5 microblog list, a 1..9
//! affective-norms list, a -1/+1 polarity list); every consumer works off
//! the scale's neutral point rather than assuming zero.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::Serialize;

use crate::error::{Error, Result};

/// Valence scale of a lexicon: bounds plus the neutral point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ValenceScale {
    min: f64,
    neutral: f64,
    max: f64,
}

impl ValenceScale {
    pub fn new(min: f64, neutral: f64, max: f64) -> Result<Self> {
        if !(min < neutral && neutral < max) {
            return Err(Error::InvalidScale { min, neutral, max });
        }
        Ok(ValenceScale { min, neutral, max })
    }

    /// The -5..+5 scale used by the bundled word list.
    pub fn microblog() -> Self {
        ValenceScale {
            min: -5.0,
            neutral: 0.0,
            max: 5.0,
        }
    }

    /// The 1..9 scale used by affective-norms word lists.
    pub fn affective_norms() -> Self {
        ValenceScale {
            min: 1.0,
            neutral: 5.0,
            max: 9.0,
        }
    }

    /// The -1..+1 scale of converted polarity lists.
    pub fn polarity() -> Self {
        ValenceScale {
            min: -1.0,
            neutral: 0.0,
            max: 1.0,
        }
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn neutral(&self) -> f64 {
        self.neutral
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn contains(&self, valence: f64) -> bool {
        valence >= self.min && valence <= self.max
    }
}

/// True when a (already trimmed) term is a multiword phrase.
pub fn is_phrase(term: &str) -> bool {
    term.chars().any(char::is_whitespace)
}

/// Entry counts by polarity relative to the scale's neutral point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolarityCounts {
    pub negative: usize,
    pub positive: usize,
    pub neutral: usize,
}

impl PolarityCounts {
    pub fn total(&self) -> usize {
        self.negative + self.positive + self.neutral
    }
}

/// A named, immutable term -> valence map.
///
/// Terms are case-folded at construction, so lookup is case-insensitive
/// end to end. Entries iterate in lexicographic term order.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    name: String,
    scale: ValenceScale,
    entries: BTreeMap<String, f64>,
}

impl Lexicon {
    /// Parse a `term<TAB>valence` stream.
    ///
    /// Empty lines and `#`-prefixed comment lines are skipped. Duplicate
    /// terms (after case folding) are rejected rather than merged:
    /// silent merging hides data defects.
    pub fn from_tsv(reader: impl BufRead, scale: ValenceScale, name: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            let line = line.strip_suffix('\r').unwrap_or(&line);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (raw_term, raw_valence) = line.split_once('\t').ok_or(Error::MalformedLine {
                line: line_no,
                reason: "expected term<TAB>valence".into(),
            })?;
            let term = raw_term.trim().to_lowercase();
            if term.is_empty() {
                return Err(Error::MalformedLine {
                    line: line_no,
                    reason: "empty term".into(),
                });
            }
            let valence: f64 = raw_valence.trim().parse().map_err(|_| Error::MalformedLine {
                line: line_no,
                reason: format!("non-numeric valence {raw_valence:?}"),
            })?;
            if !scale.contains(valence) {
                return Err(Error::ValenceOutOfScale {
                    line: line_no,
                    term,
                    valence,
                    min: scale.min,
                    max: scale.max,
                });
            }
            if entries.insert(term.clone(), valence).is_some() {
                return Err(Error::DuplicateTerm { line: line_no, term });
            }
        }
        Ok(Lexicon {
            name: name.to_string(),
            scale,
            entries,
        })
    }

    /// Build a +-1 lexicon from two polarity term sets.
    pub fn from_polarity<I, J, S, T>(positive: I, negative: J, name: &str) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut entries = BTreeMap::new();
        for term in positive {
            let term = term.as_ref().trim().to_lowercase();
            if !term.is_empty() {
                entries.insert(term, 1.0);
            }
        }
        for term in negative {
            let term = term.as_ref().trim().to_lowercase();
            if term.is_empty() {
                continue;
            }
            if entries.get(&term) == Some(&1.0) {
                return Err(Error::OverlappingPolarity { term });
            }
            entries.insert(term, -1.0);
        }
        Ok(Lexicon {
            name: name.to_string(),
            scale: ValenceScale::polarity(),
            entries,
        })
    }

    /// Copy of this lexicon with all multiword phrases removed.
    pub fn strip_phrases(&self) -> Lexicon {
        Lexicon {
            name: self.name.clone(),
            scale: self.scale,
            entries: self
                .entries
                .iter()
                .filter(|(term, _)| !is_phrase(term))
                .map(|(t, v)| (t.clone(), *v))
                .collect(),
        }
    }

    /// Histogram of valences keyed by bin index; bin `i` covers
    /// `[i * bin_width, (i + 1) * bin_width)`.
    pub fn valence_histogram(&self, bin_width: f64) -> BTreeMap<i64, usize> {
        assert!(
            bin_width > 0.0 && bin_width.is_finite(),
            "bin_width must be positive"
        );
        let mut bins = BTreeMap::new();
        for valence in self.entries.values() {
            let bin = (valence / bin_width).floor() as i64;
            *bins.entry(bin).or_insert(0) += 1;
        }
        bins
    }

    /// Partition entry counts by valence below / above / at neutral.
    pub fn polarity_counts(&self) -> PolarityCounts {
        let mut counts = PolarityCounts {
            negative: 0,
            positive: 0,
            neutral: 0,
        };
        for valence in self.entries.values() {
            if *valence < self.scale.neutral {
                counts.negative += 1;
            } else if *valence > self.scale.neutral {
                counts.positive += 1;
            } else {
                counts.neutral += 1;
            }
        }
        counts
    }

    /// Serialize as `term<TAB>valence` lines, LF endings, sorted by term.
    /// Round-trips exactly through [`Lexicon::from_tsv`].
    pub fn to_tsv(&self, mut writer: impl Write) -> Result<()> {
        for (term, valence) in &self.entries {
            writeln!(writer, "{term}\t{valence}")?;
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn scale(&self) -> ValenceScale {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn valence(&self, term: &str) -> Option<f64> {
        self.entries.get(term).copied()
    }

    pub fn contains_term(&self, term: &str) -> bool {
        self.entries.contains_key(term)
    }

    /// Entries in lexicographic term order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, f64)> {
        self.entries.iter().map(|(t, v)| (t.as_str(), *v))
    }

    pub fn phrase_count(&self) -> usize {
        self.entries.keys().filter(|t| is_phrase(t)).count()
    }
}

/// Read a one-term-per-line polarity list; `#` comments and blanks skipped.
pub fn read_term_list(reader: impl BufRead) -> Result<Vec<String>> {
    let mut terms = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        terms.push(line.to_string());
    }
    Ok(terms)
}
