//! Cross-lexicon analysis: intersections, rank correlation over shared
//! terms, sign discrepancies, and intersection-restricted sub-lexicons.

use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::matcher::{build_index, MatchStrategy};
use crate::stats;

/// Shared keys of two lexicons with the valence each side assigns.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionResult {
    /// Shared keys in lexicographic order. Under stemmed matching these
    /// are stems; under exact matching, literal terms.
    pub terms: Vec<String>,
    pub valences_a: Vec<f64>,
    pub valences_b: Vec<f64>,
    pub strategy: MatchStrategy,
}

impl IntersectionResult {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Intersect two phrase-free lexicons under a matching strategy.
///
/// Under stemmed matching, each side is collision-merged (mean valence
/// per stem) before keys are compared, the same rule the matcher applies.
pub fn intersect(a: &Lexicon, b: &Lexicon, strategy: MatchStrategy) -> Result<IntersectionResult> {
    let index_a = build_index(a, strategy)?;
    let index_b = build_index(b, strategy)?;
    let mut terms = Vec::new();
    let mut valences_a = Vec::new();
    let mut valences_b = Vec::new();
    for (key, valence_a) in index_a.entries() {
        // keys are already canonical; a re-keying lookup would stem stems
        if let Some(valence_b) = index_b.get(key) {
            terms.push(key.to_string());
            valences_a.push(valence_a);
            valences_b.push(valence_b);
        }
    }
    Ok(IntersectionResult {
        terms,
        valences_a,
        valences_b,
        strategy,
    })
}

/// Spearman rank correlation between the two valence columns.
pub fn intersection_rank_correlation(result: &IntersectionResult) -> Result<f64> {
    stats::spearman(&result.valences_a, &result.valences_b)
}

/// Terms whose valences sit on strictly opposite sides of the respective
/// neutral points. A valence exactly at neutral on either side is not a
/// discrepancy.
pub fn sign_discrepancies(
    result: &IntersectionResult,
    neutral_a: f64,
    neutral_b: f64,
) -> Vec<String> {
    result
        .terms
        .iter()
        .zip(result.valences_a.iter().zip(&result.valences_b))
        .filter(|(_, (&va, &vb))| {
            let da = va - neutral_a;
            let db = vb - neutral_b;
            (da > 0.0 && db < 0.0) || (da < 0.0 && db > 0.0)
        })
        .map(|(term, _)| term.clone())
        .collect()
}

/// Restrict a lexicon to the given terms, keeping valences and scale.
pub fn sublexicon(terms: &[String], source: &Lexicon) -> Result<Lexicon> {
    let mut tsv = String::new();
    for term in terms {
        match source.valence(term) {
            Some(valence) => {
                tsv.push_str(term);
                tsv.push('\t');
                tsv.push_str(&valence.to_string());
                tsv.push('\n');
            }
            None => {
                return Err(Error::TermNotFound { term: term.clone() });
            }
        }
    }
    Lexicon::from_tsv(
        std::io::Cursor::new(tsv),
        source.scale(),
        source.name(),
    )
}
