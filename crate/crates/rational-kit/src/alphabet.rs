//! Alphabets, symbols and words.
//!
//! Symbols are tokens (non-empty strings without whitespace), not single
//! characters, so multi-character symbol names work everywhere. Words are
//! sequences of symbol ids relative to a fixed [`Alphabet`]; the symbol order
//! declared at construction is used for every canonical form in the crate.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Dense state index of an automaton.
pub type StateId = usize;
/// Index of a symbol in its [`Alphabet`].
pub type SymbolId = usize;
/// A word over some alphabet, as a sequence of symbol ids.
pub type Word = Vec<SymbolId>;

/// Reserved token for the empty word / ε-transitions in all textual formats.
pub const EPSILON_TOKEN: &str = "eps";

/// Transition label: a proper symbol or ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Eps,
    Sym(SymbolId),
}

impl Label {
    pub fn symbol(self) -> Option<SymbolId> {
        match self {
            Label::Eps => None,
            Label::Sym(s) => Some(s),
        }
    }
}

/// An ordered finite set of distinct symbol tokens.
#[derive(Debug, Clone)]
pub struct Alphabet {
    symbols: Vec<String>,
    index: HashMap<String, SymbolId>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}
impl Eq for Alphabet {}

impl Alphabet {
    /// Builds an alphabet from symbol tokens in the given (fixed) order.
    ///
    /// Rejects empty alphabets, duplicate symbols, whitespace in symbols and
    /// the reserved token `eps`.
    pub fn new<I, S>(symbols: I) -> Result<Alphabet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::input("alphabet must not be empty"));
        }
        let mut index = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::input(format!(
                    "invalid symbol {s:?}: symbols are non-empty tokens without whitespace"
                )));
            }
            if s == EPSILON_TOKEN {
                return Err(Error::input("`eps` is reserved and cannot be a symbol"));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols, index })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: non-empty
    }

    pub fn symbol(&self, id: SymbolId) -> &str {
        &self.symbols[id]
    }

    pub fn id(&self, symbol: &str) -> Option<SymbolId> {
        self.index.get(symbol).copied()
    }

    pub fn id_or_err(&self, symbol: &str) -> Result<SymbolId> {
        self.id(symbol)
            .ok_or_else(|| Error::input(format!("unknown symbol {symbol:?}")))
    }

    pub fn ids(&self) -> std::ops::Range<SymbolId> {
        0..self.symbols.len()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.symbols.iter().map(String::as_str)
    }

    /// True when every symbol is a single character, which allows words to be
    /// written without separators.
    pub fn all_single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Union of two alphabets: the symbols of `self` in order, then the
    /// symbols of `other` not already present.
    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut symbols = self.symbols.clone();
        for s in &other.symbols {
            if !self.index.contains_key(s) {
                symbols.push(s.clone());
            }
        }
        Alphabet::new(symbols).expect("union of valid alphabets is valid")
    }

    /// Parses a word. `eps` denotes the empty word. Whitespace-separated
    /// tokens are looked up as symbols; a contiguous string is split by
    /// greedy longest-match against the symbol set.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == EPSILON_TOKEN {
            return Ok(Vec::new());
        }
        if text.chars().any(char::is_whitespace) {
            return text
                .split_whitespace()
                .map(|tok| self.id_or_err(tok))
                .collect();
        }
        // Greedy longest-match tokenization of a contiguous word.
        let mut word = Vec::new();
        let mut rest = text;
        'outer: while !rest.is_empty() {
            let mut best: Option<(usize, SymbolId)> = None;
            for (i, s) in self.symbols.iter().enumerate() {
                if rest.starts_with(s.as_str())
                    && best.map_or(true, |(blen, _)| s.len() > blen)
                {
                    best = Some((s.len(), i));
                }
            }
            match best {
                Some((len, id)) => {
                    word.push(id);
                    rest = &rest[len..];
                    continue 'outer;
                }
                None => {
                    return Err(Error::input(format!(
                        "cannot tokenize {text:?} over alphabet {self}: stuck at {rest:?}"
                    )))
                }
            }
        }
        Ok(word)
    }

    /// Formats a word; the empty word prints as `eps`. Single-character
    /// alphabets print contiguously, others space-separated.
    pub fn format_word(&self, word: &[SymbolId]) -> String {
        if word.is_empty() {
            return EPSILON_TOKEN.to_string();
        }
        let sep = if self.all_single_char() { "" } else { " " };
        word.iter()
            .map(|&s| self.symbol(s))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// All words of length exactly `len`, in lexicographic order of the
    /// declared symbol order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for w in &out {
                for s in self.ids() {
                    let mut w2 = w.clone();
                    w2.push(s);
                    next.push(w2);
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `max_len`, in length-then-lexicographic
    /// order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in 0..=max_len {
            out.extend(self.words_of_length(len));
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_symbols() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a", "eps"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn word_round_trip() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        assert_eq!(ab.parse_word("abba").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(ab.parse_word("eps").unwrap(), Vec::<usize>::new());
        assert_eq!(ab.format_word(&[0, 1]), "ab");
        assert_eq!(ab.format_word(&[]), "eps");

        let coins = Alphabet::new(["w", "t", "f"]).unwrap();
        assert_eq!(coins.parse_word("w t f").unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn greedy_tokenization_prefers_longest() {
        let al = Alphabet::new(["a", "ab", "b"]).unwrap();
        assert_eq!(al.parse_word("ab").unwrap(), vec![1]);
        assert_eq!(al.parse_word("a b").unwrap(), vec![0, 2]);
    }

    #[test]
    fn enumeration_order() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let words = ab.words_up_to(2);
        let txt: Vec<String> = words.iter().map(|w| ab.format_word(w)).collect();
        assert_eq!(txt, ["eps", "a", "b", "aa", "ab", "ba", "bb"]);
    }
}
