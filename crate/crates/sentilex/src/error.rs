//! Crate-wide error type.

use thiserror::Error;

/// Errors produced while loading data or evaluating lexicons.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("line {line}: term {term:?}: valence {valence} outside scale [{min}, {max}]")]
    ValenceOutOfScale {
        line: usize,
        term: String,
        valence: f64,
        min: f64,
        max: f64,
    },

    #[error("line {line}: duplicate term {term:?} after case folding")]
    DuplicateTerm { line: usize, term: String },

    #[error("term {term:?} appears in both polarity lists")]
    OverlappingPolarity { term: String },

    #[error("invalid valence scale: need min < neutral < max, got {min}:{neutral}:{max}")]
    InvalidScale { min: f64, neutral: f64, max: f64 },

    #[error("phrase entry {term:?} present; strip phrases before building an index")]
    PhraseInIndex { term: String },

    #[error("paired series length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("series of length {len} too short for correlation (need at least 2)")]
    SeriesTooShort { len: usize },

    /// A constant series has no defined correlation. Callers that build
    /// reports map this to an explicit gap instead of a number.
    #[error("correlation undefined: {side} series is constant")]
    DegenerateSeries { side: &'static str },

    #[error("line {line}: id {id:?}: rating {rating} outside [1, 9]")]
    RatingOutOfRange { line: usize, id: String, rating: i64 },

    #[error("line {line}: id {id:?}: record has no ratings")]
    EmptyRatings { line: usize, id: String },

    #[error("line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },

    #[error("score column is missing corpus id {id:?}")]
    MissingId { id: String },

    #[error("line {line}: id {id:?} is not present in the corpus")]
    UnknownId { line: usize, id: String },

    #[error("line {line}: dual strength out of bounds: positive {positive}, negative {negative}")]
    DualOutOfBounds {
        line: usize,
        positive: i64,
        negative: i64,
    },

    #[error("term {term:?} not present in source lexicon")]
    TermNotFound { term: String },

    #[error("sample size {size} exceeds lexicon size {lexicon_size}")]
    SizeExceedsLexicon { size: usize, lexicon_size: usize },

    #[error("resample count must be at least 1")]
    NoResamples,

    #[error("no defined samples to summarize")]
    AllSamplesUndefined,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
