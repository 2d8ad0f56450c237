//! Word tokenization for short informal text.
//!
//! Tokens are maximal runs of Unicode letters and digits, allowing a single
//! internal apostrophe so contractions stay whole. URLs (`http://`,
//! `https://`, `www.`) are deleted outright, `@mentions` are dropped, and
//! `#hashtags` lose the `#` but keep the word. Digit-only tokens are kept;
//! they simply never match a lexicon.

use std::collections::BTreeSet;

/// One lowercase word with its character span in the raw input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Lowercased token text.
    pub text: String,
    /// Character offset of the first character.
    pub start: usize,
    /// Character offset one past the last character.
    pub end: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// Case-insensitive match of an ASCII pattern at the head of a char slice.
fn starts_with_ascii(chars: &[char], pattern: &str) -> bool {
    pattern.len() <= chars.len()
        && pattern
            .chars()
            .zip(chars)
            .all(|(p, c)| c.eq_ignore_ascii_case(&p))
}

fn starts_url(chars: &[char]) -> bool {
    starts_with_ascii(chars, "http://")
        || starts_with_ascii(chars, "https://")
        || starts_with_ascii(chars, "www.")
}

/// Split raw text into lowercase word tokens, left to right.
pub fn tokenize(raw: &str) -> Vec<Token> {
    let chars: Vec<char> = raw.chars().collect();
    let n = chars.len();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < n {
        let at_boundary = i == 0 || !is_word_char(chars[i - 1]);

        if at_boundary && starts_url(&chars[i..]) {
            while i < n && !chars[i].is_whitespace() {
                i += 1;
            }
            continue;
        }

        if chars[i] == '@' && at_boundary && i + 1 < n && is_word_char(chars[i + 1]) {
            i += 1;
            // usernames may contain underscores
            while i < n && (is_word_char(chars[i]) || chars[i] == '_') {
                i += 1;
            }
            continue;
        }

        if is_word_char(chars[i]) {
            let start = i;
            let mut used_apostrophe = false;
            i += 1;
            loop {
                if i < n && is_word_char(chars[i]) {
                    i += 1;
                } else if i < n
                    && chars[i] == '\''
                    && !used_apostrophe
                    && i + 1 < n
                    && is_word_char(chars[i + 1])
                {
                    used_apostrophe = true;
                    i += 2;
                } else {
                    break;
                }
            }
            let text: String = chars[start..i].iter().collect::<String>().to_lowercase();
            tokens.push(Token {
                text,
                start,
                end: i,
            });
        } else {
            i += 1;
        }
    }
    tokens
}

/// Distinct token texts.
pub fn unique_tokens(tokens: &[Token]) -> BTreeSet<String> {
    tokens.iter().map(|t| t.text.clone()).collect()
}
