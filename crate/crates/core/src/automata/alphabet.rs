use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered, duplicate-free list of symbol names. A symbol's index is its position.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    symbols: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::input("alphabet must be non-empty"));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c == '|') {
                return Err(Error::input(format!("invalid symbol name {s:?}")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::input(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
        })
    }

    /// One symbol per character, e.g. `Alphabet::from_chars("abcd")`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Alphabet::new(chars.chars().map(String::from))
    }

    /// `{a, b, ...}` with `size` symbols drawn from the latin lowercase letters.
    pub fn latin(size: usize) -> Result<Self> {
        if size == 0 || size > 26 {
            return Err(Error::input(format!("unsupported alphabet size {size}")));
        }
        Alphabet::new((b'a'..b'a' + size as u8).map(|c| (c as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, i: usize) -> &str {
        &self.symbols[i]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    /// Parses a word written as space-separated symbol names; `λ` or the empty
    /// string is the empty word. When every symbol is a single character,
    /// unseparated input such as `aab` is also accepted.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "λ" {
            return Ok(Word::empty());
        }
        let single_char = self.symbols.iter().all(|s| s.chars().count() == 1);
        let tokens: Vec<String> = if text.contains(char::is_whitespace) || !single_char {
            text.split_whitespace().map(String::from).collect()
        } else {
            text.chars().map(String::from).collect()
        };
        tokens
            .iter()
            .map(|t| {
                self.index_of(t)
                    .ok_or_else(|| Error::input(format!("unknown symbol {t:?} in word {text:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    /// Space-separated symbol names, `λ` for the empty word.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "λ".to_string();
        }
        w.symbols()
            .iter()
            .map(|&s| self.symbol(s))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbols.join(" "))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet[{self}]")
    }
}

/// A word as a sequence of symbol indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    pub(crate) fn check(&self, alphabet: &Alphabet) -> Result<()> {
        match self.0.iter().find(|&&s| s >= alphabet.len()) {
            Some(s) => Err(Error::input(format!(
                "symbol index {s} out of range for alphabet of size {}",
                alphabet.len()
            ))),
            None => Ok(()),
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl From<&[usize]> for Word {
    fn from(v: &[usize]) -> Self {
        Word(v.to_vec())
    }
}
