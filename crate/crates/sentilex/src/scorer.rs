//! Aggregate per-token valences into one sentiment strength per text.
//!
//! All five schemes work on deviations from the scale's neutral point, so
//! they stay correct on scales whose neutral is not zero (a 1..9 list as
//! much as a -5..+5 one).

use serde::Serialize;

use crate::matcher::LookupIndex;
use crate::tokenize::Token;

/// Text-level aggregation rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScoringScheme {
    /// Sum of deviations divided by the number of all tokens.
    MeanAllTokens,
    /// Plain sum of deviations.
    SumRaw,
    /// Sum of deviations divided by the number of matched tokens.
    MeanMatched,
    /// The deviation of largest magnitude; opposite-sign ties cancel.
    Extreme,
    /// Sign of the all-token mean: -1, 0 or +1.
    Quantized,
}

impl ScoringScheme {
    pub const ALL: [ScoringScheme; 5] = [
        ScoringScheme::MeanAllTokens,
        ScoringScheme::SumRaw,
        ScoringScheme::MeanMatched,
        ScoringScheme::Extreme,
        ScoringScheme::Quantized,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ScoringScheme::MeanAllTokens => "mean",
            ScoringScheme::SumRaw => "sum",
            ScoringScheme::MeanMatched => "mean-matched",
            ScoringScheme::Extreme => "extreme",
            ScoringScheme::Quantized => "quantized",
        }
    }
}

/// Sentiment strength of one text.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TextScore {
    pub value: f64,
    pub token_count: usize,
    /// Tokens with a lexicon hit of non-neutral valence.
    pub matched_count: usize,
}

/// Score a tokenized text against an index.
///
/// Unmatched tokens contribute the neutral valence. Degenerate inputs do
/// not error: an empty text (or no matches, where the scheme divides by
/// matches) scores neutral, and quantized scores 0.
pub fn score_text(
    tokens: &[Token],
    index: &LookupIndex,
    scheme: ScoringScheme,
    neutral: f64,
) -> TextScore {
    let token_count = tokens.len();
    let mut matched_count = 0;
    let mut sum_dev = 0.0;
    // extreme tracking: magnitude of the largest deviation and which signs reach it
    let mut max_mag = 0.0f64;
    let mut pos_at_max = false;
    let mut neg_at_max = false;

    for token in tokens {
        let dev = match index.lookup(&token.text) {
            Some(valence) => {
                if valence != neutral {
                    matched_count += 1;
                }
                valence - neutral
            }
            None => 0.0,
        };
        sum_dev += dev;
        let mag = dev.abs();
        if mag > max_mag {
            max_mag = mag;
            pos_at_max = dev > 0.0;
            neg_at_max = dev < 0.0;
        } else if mag == max_mag && mag > 0.0 {
            pos_at_max |= dev > 0.0;
            neg_at_max |= dev < 0.0;
        }
    }

    let mean_dev = if token_count > 0 {
        sum_dev / token_count as f64
    } else {
        0.0
    };

    let value = match scheme {
        ScoringScheme::MeanAllTokens => neutral + mean_dev,
        ScoringScheme::SumRaw => neutral + sum_dev,
        ScoringScheme::MeanMatched => {
            if matched_count > 0 {
                neutral + sum_dev / matched_count as f64
            } else {
                neutral
            }
        }
        ScoringScheme::Extreme => {
            if pos_at_max && neg_at_max {
                neutral
            } else if pos_at_max {
                neutral + max_mag
            } else if neg_at_max {
                neutral - max_mag
            } else {
                neutral
            }
        }
        ScoringScheme::Quantized => {
            if mean_dev > 0.0 {
                1.0
            } else if mean_dev < 0.0 {
                -1.0
            } else {
                0.0
            }
        }
    };

    TextScore {
        value,
        token_count,
        matched_count,
    }
}
