//! Presentation text format:
//!
//! ```text
//! # comment
//! gens: x1 x2 x3
//! rel: x1 x1 x2 x2 x3 x3
//! sub: x1 x2
//! ```
//!
//! Tokens are whitespace separated and an inverse is written `x1^-1`.

use super::{Alphabet, GeneratorSymbol, Letter, Presentation, Word, WordError};

/// A parsed presentation file: the group and the subgroup generators listed
/// on `sub:` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFile {
    pub presentation: Presentation,
    pub subgroup: Vec<Word>,
}

fn parse_letter(token: &str, alphabet: Option<&Alphabet>, line: usize) -> Result<Letter, WordError> {
    let err = |message: String| WordError::Parse { line, message };
    let (name, inverse) = match token.split_once('^') {
        None => (token, false),
        Some((name, "-1")) => (name, true),
        Some((name, "1")) => (name, false),
        Some(_) => return Err(err(format!("bad exponent in token {token:?}; only ^-1 is allowed"))),
    };
    let symbol = match alphabet {
        Some(a) => a
            .lookup(name)
            .cloned()
            .ok_or_else(|| err(format!("unknown generator {name:?}")))?,
        None => GeneratorSymbol::new(name).map_err(|e| err(e.to_string()))?,
    };
    Ok(Letter::new(symbol, inverse))
}

fn parse_tokens(text: &str, alphabet: Option<&Alphabet>, line: usize) -> Result<Word, WordError> {
    let letters = text
        .split_whitespace()
        .map(|t| parse_letter(t, alphabet, line))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::free_reduce(letters))
}

/// Parses a whitespace separated word. When `alphabet` is given, every token
/// must name one of its generators.
pub fn parse_word(text: &str, alphabet: Option<&Alphabet>) -> Result<Word, WordError> {
    parse_tokens(text, alphabet, 1)
}

pub fn parse_presentation_file(text: &str) -> Result<PresentationFile, WordError> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relators = Vec::new();
    let mut subgroup = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, body) = content.split_once(':').ok_or_else(|| WordError::Parse {
            line,
            message: format!("expected `gens:`, `rel:` or `sub:`, found {content:?}"),
        })?;
        match key.trim() {
            "gens" => {
                if alphabet.is_some() {
                    return Err(WordError::Parse { line, message: "duplicate gens line".into() });
                }
                let a = Alphabet::from_names(body.split_whitespace())
                    .map_err(|e| WordError::Parse { line, message: e.to_string() })?;
                alphabet = Some(a);
            }
            kind @ ("rel" | "sub") => {
                let a = alphabet.as_ref().ok_or_else(|| WordError::Parse {
                    line,
                    message: format!("`{kind}:` before `gens:`"),
                })?;
                if body.trim().is_empty() {
                    return Err(WordError::Parse { line, message: format!("empty `{kind}:` line") });
                }
                let w = parse_tokens(body, Some(a), line)?;
                if kind == "rel" {
                    relators.push(w);
                } else {
                    subgroup.push(w);
                }
            }
            other => {
                return Err(WordError::Parse { line, message: format!("unknown directive {other:?}") })
            }
        }
    }

    let alphabet = alphabet.ok_or(WordError::Parse { line: 0, message: "missing gens line".into() })?;
    let presentation = Presentation::new(alphabet, relators)?;
    Ok(PresentationFile { presentation, subgroup })
}
