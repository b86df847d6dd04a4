use std::fmt;

use crate::error::{Error, Result};

/// Token reserved for the left endmarker of quantum automata.
pub const ENDMARKER: &str = "^";

/// Ordered list of distinct input symbols.
///
/// Symbols are referred to by their index everywhere else in the crate; a
/// word is a `[usize]` of symbol indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("empty alphabet".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s == ENDMARKER {
                return Err(Error::ReservedSymbol);
            }
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c == '#') {
                return Err(Error::InvalidAlphabet(format!("bad token {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Self { symbols })
    }

    /// `{s1, ..., sj}`.
    pub fn indexed(j: usize) -> Result<Self> {
        Self::new((1..=j).map(|i| format!("s{i}")))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, token: &str) -> Result<usize> {
        self.symbols
            .iter()
            .position(|s| s == token)
            .ok_or_else(|| Error::UnknownSymbol(token.to_string()))
    }

    fn single_chars(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Parses a word. Tokens are whitespace separated; when every symbol is a
    /// single character, a token that is not itself a symbol is split into
    /// characters, so `"abb"` and `"a b b"` both work over `{a, b}`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let mut word = Vec::new();
        for token in text.split_whitespace() {
            if let Ok(i) = self.index_of(token) {
                word.push(i);
            } else if self.single_chars() {
                for c in token.chars() {
                    word.push(self.index_of(c.encode_utf8(&mut [0; 4]))?);
                }
            } else {
                return Err(Error::UnknownSymbol(token.to_string()));
            }
        }
        Ok(word)
    }

    /// Inverse of [`Alphabet::parse_word`]: concatenated when all symbols are
    /// single characters, space separated otherwise.
    pub fn format_word(&self, word: &[usize]) -> String {
        let sep = if self.single_chars() { "" } else { " " };
        word.iter()
            .map(|&i| self.symbols[i].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Checks that every symbol index of `word` is in range.
    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&s| s >= self.len()) {
            Some(s) => Err(Error::UnknownSymbol(format!("#{s}"))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}

/// All words of length exactly `len`, in lexicographic order of symbol
/// indices.
pub fn words_of_length(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (k as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    (0..total).map(move |mut idx| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = (idx % k as u128) as usize;
            idx /= k as u128;
        }
        w
    })
}

/// All words of length at most `max_len`, shortest first, lexicographic
/// within a length.
pub fn words_up_to(k: usize, max_len: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=max_len).flat_map(move |len| words_of_length(k, len))
}
