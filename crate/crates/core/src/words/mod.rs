//! Free-group words, finitely presented groups and a bounded relator-insertion
//! identity checker.
//!
//! Words are immutable values over string-named generators. Every constructor
//! returns a freely reduced word, so structural equality of [`Word`]s is
//! equality in the free group.

mod parse;
mod presentation;
mod relator;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use parse::{parse_presentation_file, parse_word, PresentationFile};
pub use presentation::{Alphabet, Presentation};
pub use relator::{equal_mod_relator, Insertion, RelatorOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid generator name {0:?}: names must be non-empty and contain no whitespace or '^'")]
    InvalidSymbol(String),
    #[error("duplicate generator {0:?} in alphabet")]
    DuplicateGenerator(String),
    #[error("alphabet mismatch: generator {0:?} is not in the alphabet")]
    AlphabetMismatch(String),
    #[error("relator search needs exactly one relator, presentation has {0}")]
    RelatorCount(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Name of a generator. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GeneratorSymbol(Arc<str>);

impl GeneratorSymbol {
    pub fn new(name: &str) -> Result<Self, WordError> {
        if name.is_empty() || name.contains('^') || name.chars().any(char::is_whitespace) {
            return Err(WordError::InvalidSymbol(name.to_string()));
        }
        Ok(Self(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for GeneratorSymbol {
    type Error = WordError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Self::new(&value)
    }
}

impl From<GeneratorSymbol> for String {
    fn from(value: GeneratorSymbol) -> Self {
        value.0.to_string()
    }
}

impl fmt::Debug for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A generator or its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub symbol: GeneratorSymbol,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: GeneratorSymbol, inverse: bool) -> Self {
        Self { symbol, inverse }
    }

    pub fn inverted(&self) -> Self {
        Self { symbol: self.symbol.clone(), inverse: !self.inverse }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.symbol)
        } else {
            write!(f, "{}", self.symbol)
        }
    }
}

/// Freely reduced word. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Per-generator exponent parities of a word, plus the parity of the total
/// exponent sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentParity {
    pub per_generator: Vec<bool>,
    pub total: bool,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Freely reduces a raw letter sequence.
    pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Self { letters: stack }
    }

    /// Single positive or inverse generator.
    pub fn generator(symbol: &GeneratorSymbol, inverse: bool) -> Self {
        Self { letters: vec![Letter::new(symbol.clone(), inverse)] }
    }

    /// `symbol^exponent`.
    pub fn power(symbol: &GeneratorSymbol, exponent: i64) -> Self {
        let letter = Letter::new(symbol.clone(), exponent < 0);
        Self { letters: vec![letter; exponent.unsigned_abs() as usize] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::free_reduce(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// Product of a sequence of words, left to right.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        Word::free_reduce(words.into_iter().flat_map(|w| w.letters.iter().cloned()))
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverted).collect() }
    }

    /// Reverses the letter order without inverting letters. This is the
    /// anti-automorphism that converts between left-to-right and
    /// right-to-left composition conventions.
    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().cloned().collect() }
    }

    /// Strips matching inverse pairs from both ends. The result is a shortest
    /// word among the cyclic permutations of the reduced word.
    pub fn cyclic_reduce(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i].cancels(&l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    /// Cyclic rotation by `k` letters to the left. Only meaningful on
    /// cyclically reduced words, where it stays freely reduced.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::free_reduce(letters)
    }

    /// Signed exponent sum of one generator.
    pub fn exponent_sum(&self, symbol: &GeneratorSymbol) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.symbol == symbol)
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    /// Exponent parities indexed by `alphabet`.
    pub fn exponent_sum_mod2(&self, alphabet: &Alphabet) -> Result<ExponentParity, WordError> {
        let mut per_generator = vec![false; alphabet.len()];
        for l in &self.letters {
            let idx = alphabet
                .index_of(&l.symbol)
                .ok_or_else(|| WordError::AlphabetMismatch(l.symbol.to_string()))?;
            per_generator[idx] ^= true;
        }
        let total = per_generator.iter().fold(false, |acc, b| acc ^ b);
        Ok(ExponentParity { per_generator, total })
    }

    /// Distinct generators used by the word.
    pub fn symbols(&self) -> impl Iterator<Item = &GeneratorSymbol> {
        self.letters.iter().map(|l| &l.symbol)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word::free_reduce(iter)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
