//! Lookup indices over lexicons: exact term matching or Porter-stemmed
//! matching with stemming applied on both sides.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lexicon::{is_phrase, Lexicon, ValenceScale};
use crate::stem::porter_stem;

/// How lexicon terms and tokens are keyed before lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatchStrategy {
    /// Keys are the lexicon terms themselves.
    Exact,
    /// Keys are Porter stems, of terms and of tokens alike.
    Stemmed,
}

impl MatchStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            MatchStrategy::Exact => "exact",
            MatchStrategy::Stemmed => "stemmed",
        }
    }
}

/// Terms that collapsed onto one key, with the valence stored for it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Collision {
    pub key: String,
    /// The merged terms, in lexicographic order.
    pub terms: Vec<String>,
    /// Arithmetic mean of the merged terms' valences.
    pub merged_valence: f64,
}

/// Immutable key -> valence map built from a phrase-free lexicon.
#[derive(Debug, Clone)]
pub struct LookupIndex {
    strategy: MatchStrategy,
    scale: ValenceScale,
    map: BTreeMap<String, f64>,
    collisions: Vec<Collision>,
}

/// Build an index under the given strategy.
///
/// Under [`MatchStrategy::Stemmed`], terms sharing a stem are merged to
/// the arithmetic mean of their valences and the merge is logged. Phrase
/// entries are rejected; callers strip them first.
pub fn build_index(lexicon: &Lexicon, strategy: MatchStrategy) -> Result<LookupIndex> {
    let mut groups: BTreeMap<String, Vec<(String, f64)>> = BTreeMap::new();
    for (term, valence) in lexicon.entries() {
        if is_phrase(term) {
            return Err(Error::PhraseInIndex {
                term: term.to_string(),
            });
        }
        let key = match strategy {
            MatchStrategy::Exact => term.to_string(),
            MatchStrategy::Stemmed => porter_stem(term),
        };
        groups.entry(key).or_default().push((term.to_string(), valence));
    }

    let mut map = BTreeMap::new();
    let mut collisions = Vec::new();
    for (key, members) in groups {
        let mean = members.iter().map(|(_, v)| v).sum::<f64>() / members.len() as f64;
        if members.len() > 1 {
            collisions.push(Collision {
                key: key.clone(),
                terms: members.iter().map(|(t, _)| t.clone()).collect(),
                merged_valence: mean,
            });
        }
        map.insert(key, mean);
    }

    Ok(LookupIndex {
        strategy,
        scale: lexicon.scale(),
        map,
        collisions,
    })
}

impl LookupIndex {
    /// Valence for a lowercase token, if its key is present.
    pub fn lookup(&self, token_text: &str) -> Option<f64> {
        self.lookup_entry(token_text).map(|(_, v)| v)
    }

    /// Key and valence hit by a token; the key is the canonical entry the
    /// token resolved to (the stem, under stemmed matching).
    pub fn lookup_entry(&self, token_text: &str) -> Option<(&str, f64)> {
        match self.strategy {
            MatchStrategy::Exact => self
                .map
                .get_key_value(token_text)
                .map(|(k, v)| (k.as_str(), *v)),
            MatchStrategy::Stemmed => self
                .map
                .get_key_value(&porter_stem(token_text))
                .map(|(k, v)| (k.as_str(), *v)),
        }
    }

    /// Valence stored for a canonical key, without re-keying the input.
    pub fn get(&self, key: &str) -> Option<f64> {
        self.map.get(key).copied()
    }

    pub fn strategy(&self) -> MatchStrategy {
        self.strategy
    }

    pub fn scale(&self) -> ValenceScale {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn collisions(&self) -> &[Collision] {
        &self.collisions
    }

    /// Keys in lexicographic order.
    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, f64)> {
        self.map.iter().map(|(k, v)| (k.as_str(), *v))
    }
}
