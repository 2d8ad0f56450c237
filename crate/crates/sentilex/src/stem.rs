//! Porter suffix-stripping stemmer.
//!
//! This is a port of Martin Porter's own canonical implementation, the one
//! that generated the reference vocabulary/output pairs bundled under
//! `tests/data/porter/`. It keeps that implementation's documented
//! departures from the 1980 write-up: words of length one or two are left
//! untouched, step 2 maps `bli` to `ble` (not `abli` to `able`), and step 2
//! gains a `logi` to `log` rule.

/// Stem one lowercase word.
///
/// Words shorter than three characters come back unchanged, as does any
/// word containing non-ASCII characters (the algorithm is defined over
/// English letters; anything else would be guesswork). Non-letter ASCII
/// characters are treated as consonants, matching the reference code.
pub fn porter_stem(word: &str) -> String {
    if !word.is_ascii() || word.len() <= 2 {
        return word.to_string();
    }
    let mut s = Stemmer {
        b: word.as_bytes().to_vec(),
        stem: 0,
    };
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    String::from_utf8(s.b).expect("ascii in, ascii out")
}

struct Stemmer {
    /// Current word bytes.
    b: Vec<u8>,
    /// Length of the stem left of the most recently matched suffix.
    stem: usize,
}

impl Stemmer {
    /// True when `b[i]` acts as a consonant. `y` is a consonant at the
    /// start of the word or after a vowel.
    fn cons(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => {
                if i == 0 {
                    true
                } else {
                    !self.cons(i - 1)
                }
            }
            _ => true,
        }
    }

    /// The measure of `b[0..stem]`: the number of vowel-consonant
    /// sequence pairs, as in the pattern C?(VC)^m V?.
    fn m(&self) -> usize {
        let j = self.stem;
        let mut n = 0;
        let mut i = 0;
        while i < j && self.cons(i) {
            i += 1;
        }
        if i >= j {
            return 0;
        }
        i += 1;
        loop {
            while i < j && !self.cons(i) {
                i += 1;
            }
            if i >= j {
                return n;
            }
            i += 1;
            n += 1;
            while i < j && self.cons(i) {
                i += 1;
            }
            if i >= j {
                return n;
            }
            i += 1;
        }
    }

    fn vowel_in_stem(&self) -> bool {
        (0..self.stem).any(|i| !self.cons(i))
    }

    fn doublec(&self, i: usize) -> bool {
        i >= 1 && self.b[i] == self.b[i - 1] && self.cons(i)
    }

    /// consonant-vowel-consonant ending at `i`, where the final consonant
    /// is not w, x or y. Used to spot stems like "hop" that take an e.
    fn cvc(&self, i: usize) -> bool {
        if i < 2 || !self.cons(i) || self.cons(i - 1) || !self.cons(i - 2) {
            return false;
        }
        !matches!(self.b[i], b'w' | b'x' | b'y')
    }

    /// On match, records the stem length and returns true.
    fn ends(&mut self, s: &[u8]) -> bool {
        let len = self.b.len();
        if s.len() > len {
            return false;
        }
        if &self.b[len - s.len()..] == s {
            self.stem = len - s.len();
            true
        } else {
            false
        }
    }

    /// Replace the matched suffix with `s`.
    fn setto(&mut self, s: &[u8]) {
        self.b.truncate(self.stem);
        self.b.extend_from_slice(s);
    }

    /// Replace the matched suffix with `s` when the stem has measure > 0.
    fn r(&mut self, s: &[u8]) {
        if self.m() > 0 {
            self.setto(s);
        }
    }

    /// Plurals and -ed/-ing endings.
    fn step1ab(&mut self) {
        if self.b.last() == Some(&b's') {
            let len = self.b.len();
            if self.ends(b"sses") {
                self.b.truncate(len - 2);
            } else if self.ends(b"ies") {
                self.setto(b"i");
            } else if self.b[len - 2] != b's' {
                self.b.truncate(len - 1);
            }
        }
        if self.ends(b"eed") {
            if self.m() > 0 {
                let len = self.b.len();
                self.b.truncate(len - 1);
            }
        } else if (self.ends(b"ed") || self.ends(b"ing")) && self.vowel_in_stem() {
            self.b.truncate(self.stem);
            if self.ends(b"at") {
                self.setto(b"ate");
            } else if self.ends(b"bl") {
                self.setto(b"ble");
            } else if self.ends(b"iz") {
                self.setto(b"ize");
            } else {
                let len = self.b.len();
                if self.doublec(len - 1) {
                    if !matches!(self.b[len - 1], b'l' | b's' | b'z') {
                        self.b.truncate(len - 1);
                    }
                } else {
                    self.stem = len;
                    if self.m() == 1 && self.cvc(len - 1) {
                        self.b.push(b'e');
                    }
                }
            }
        }
    }

    /// Turn terminal y to i when there is another vowel in the stem.
    fn step1c(&mut self) {
        if self.ends(b"y") && self.vowel_in_stem() {
            let last = self.b.len() - 1;
            self.b[last] = b'i';
        }
    }

    /// Map double suffixes to single ones (-ization -> -ize and so on).
    // one rule per line, in the reference code's order
    #[allow(clippy::if_same_then_else, clippy::collapsible_match)]
    fn step2(&mut self) {
        let len = self.b.len();
        if len < 2 {
            return;
        }
        match self.b[len - 2] {
            b'a' => {
                if self.ends(b"ational") {
                    self.r(b"ate");
                } else if self.ends(b"tional") {
                    self.r(b"tion");
                }
            }
            b'c' => {
                if self.ends(b"enci") {
                    self.r(b"ence");
                } else if self.ends(b"anci") {
                    self.r(b"ance");
                }
            }
            b'e' => {
                if self.ends(b"izer") {
                    self.r(b"ize");
                }
            }
            b'l' => {
                if self.ends(b"bli") {
                    self.r(b"ble");
                } else if self.ends(b"alli") {
                    self.r(b"al");
                } else if self.ends(b"entli") {
                    self.r(b"ent");
                } else if self.ends(b"eli") {
                    self.r(b"e");
                } else if self.ends(b"ousli") {
                    self.r(b"ous");
                }
            }
            b'o' => {
                if self.ends(b"ization") {
                    self.r(b"ize");
                } else if self.ends(b"ation") {
                    self.r(b"ate");
                } else if self.ends(b"ator") {
                    self.r(b"ate");
                }
            }
            b's' => {
                if self.ends(b"alism") {
                    self.r(b"al");
                } else if self.ends(b"iveness") {
                    self.r(b"ive");
                } else if self.ends(b"fulness") {
                    self.r(b"ful");
                } else if self.ends(b"ousness") {
                    self.r(b"ous");
                }
            }
            b't' => {
                if self.ends(b"aliti") {
                    self.r(b"al");
                } else if self.ends(b"iviti") {
                    self.r(b"ive");
                } else if self.ends(b"biliti") {
                    self.r(b"ble");
                }
            }
            b'g' => {
                if self.ends(b"logi") {
                    self.r(b"log");
                }
            }
            _ => {}
        }
    }

    /// -ic-, -full, -ness and friends.
    #[allow(clippy::collapsible_match)]
    fn step3(&mut self) {
        let len = self.b.len();
        match self.b[len - 1] {
            b'e' => {
                if self.ends(b"icate") {
                    self.r(b"ic");
                } else if self.ends(b"ative") {
                    self.r(b"");
                } else if self.ends(b"alize") {
                    self.r(b"al");
                }
            }
            b'i' => {
                if self.ends(b"iciti") {
                    self.r(b"ic");
                }
            }
            b'l' => {
                if self.ends(b"ical") {
                    self.r(b"ic");
                } else if self.ends(b"ful") {
                    self.r(b"");
                }
            }
            b's' => {
                if self.ends(b"ness") {
                    self.r(b"");
                }
            }
            _ => {}
        }
    }

    /// Drop -ant, -ence and similar suffixes when the measure exceeds one.
    fn step4(&mut self) {
        let len = self.b.len();
        if len < 2 {
            return;
        }
        let matched = match self.b[len - 2] {
            b'a' => self.ends(b"al"),
            b'c' => self.ends(b"ance") || self.ends(b"ence"),
            b'e' => self.ends(b"er"),
            b'i' => self.ends(b"ic"),
            b'l' => self.ends(b"able") || self.ends(b"ible"),
            b'n' => {
                self.ends(b"ant")
                    || self.ends(b"ement")
                    || self.ends(b"ment")
                    || self.ends(b"ent")
            }
            b'o' => {
                (self.ends(b"ion")
                    && self.stem >= 1
                    && matches!(self.b[self.stem - 1], b's' | b't'))
                    || self.ends(b"ou")
            }
            b's' => self.ends(b"ism"),
            b't' => self.ends(b"ate") || self.ends(b"iti"),
            b'u' => self.ends(b"ous"),
            b'v' => self.ends(b"ive"),
            b'z' => self.ends(b"ize"),
            _ => false,
        };
        if matched && self.m() > 1 {
            self.b.truncate(self.stem);
        }
    }

    /// Remove a final -e and reduce -ll, measured over the word as it
    /// stood on entry (as the reference code does).
    fn step5(&mut self) {
        let len = self.b.len();
        self.stem = len;
        let m_whole = self.m();
        let mut keep = len;
        if self.b[len - 1] == b'e'
            && (m_whole > 1 || (m_whole == 1 && !self.cvc(len.wrapping_sub(2))))
        {
            keep -= 1;
        }
        if keep >= 2 {
            let last = keep - 1;
            if self.b[last] == b'l' && self.doublec(last) && m_whole > 1 {
                keep -= 1;
            }
        }
        self.b.truncate(keep);
    }
}
