//! Sentiment lexicon engine and evaluation harness for short informal
//! text.
//!
//! The pipeline: load a valence word list ([`lexicon`]), tokenize raw
//! text ([`tokenize`]), resolve token valences under exact or stemmed
//! matching ([`matcher`], [`stem`]), aggregate them into a per-text
//! sentiment strength ([`scorer`]), and evaluate against gold-labeled
//! corpora ([`corpus`], [`stats`], [`experiments`]). [`compare`] analyzes
//! word lists against each other, and [`report`] renders the artifacts.

pub mod compare;
pub mod corpus;
pub mod error;
pub mod experiments;
pub mod lexicon;
pub mod matcher;
pub mod report;
pub mod scorer;
pub mod stats;
pub mod stem;
pub mod tokenize;

pub use error::{Error, Result};
pub use lexicon::{Lexicon, PolarityCounts, ValenceScale};
pub use matcher::{build_index, LookupIndex, MatchStrategy};
pub use scorer::{score_text, ScoringScheme, TextScore};
pub use stem::porter_stem;
pub use tokenize::{tokenize, Token};
