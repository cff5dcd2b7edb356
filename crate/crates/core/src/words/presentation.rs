use std::collections::HashMap;
use std::fmt;

use super::{GeneratorSymbol, Word, WordError};

/// Ordered list of distinct generator symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<GeneratorSymbol>,
    index: HashMap<GeneratorSymbol, usize>,
}

impl Alphabet {
    pub fn new(symbols: Vec<GeneratorSymbol>) -> Result<Self, WordError> {
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(WordError::DuplicateGenerator(s.to_string()));
            }
        }
        Ok(Self { symbols, index })
    }

    pub fn from_names<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let symbols = names
            .into_iter()
            .map(|n| GeneratorSymbol::new(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &GeneratorSymbol) -> Option<usize> {
        self.index.get(symbol).copied()
    }

    pub fn lookup(&self, name: &str) -> Option<&GeneratorSymbol> {
        self.symbols.iter().find(|s| s.as_str() == name)
    }

    pub fn contains(&self, symbol: &GeneratorSymbol) -> bool {
        self.index.contains_key(symbol)
    }

    /// Fails if `word` uses a symbol outside this alphabet.
    pub fn check(&self, word: &Word) -> Result<(), WordError> {
        match word.symbols().find(|s| !self.contains(s)) {
            Some(s) => Err(WordError::AlphabetMismatch(s.to_string())),
            None => Ok(()),
        }
    }

    /// Column encoding used by the coset engines: `2 * generator + inverse`.
    pub fn columns(&self, word: &Word) -> Result<Vec<usize>, WordError> {
        word.letters()
            .iter()
            .map(|l| {
                self.index_of(&l.symbol)
                    .map(|i| 2 * i + usize::from(l.inverse))
                    .ok_or_else(|| WordError::AlphabetMismatch(l.symbol.to_string()))
            })
            .collect()
    }
}

/// Generators plus relators. Relators are stored cyclically reduced and
/// trivial relators are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self, WordError> {
        for r in &relators {
            alphabet.check(r)?;
        }
        let relators = relators
            .iter()
            .map(Word::cyclic_reduce)
            .filter(|r| !r.is_identity())
            .collect();
        Ok(Self { alphabet, relators })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        self.alphabet.symbols()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.alphabet.len()
    }
}

impl fmt::Display for Presentation {
    /// Renders in the presentation text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gens:")?;
        for s in self.alphabet.symbols() {
            write!(f, " {s}")?;
        }
        writeln!(f)?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}
