//! Reidemeister–Schreier generators and presentations for subgroups given by
//! a coset table, Tietze simplification, and abelianization.

mod bprime;
mod snf;
mod tietze;

use std::collections::HashSet;

use thiserror::Error;

use crate::coset_enum::{CosetError, CosetTable};
use crate::words::{Alphabet, GeneratorSymbol, Letter, Presentation, Word, WordError};

pub use bprime::{
    level2_generating_set, parity_table, rs_simplify_to_bprime, schreier_candidates, BPrimeElement,
    FormalCandidate, Level2Generator,
};
pub use snf::{abelianization, exponent_sum_matrix, smith_normal_form, AbelianGroupDescription, IntMatrix, SmithForm};
pub use tietze::{tietze_simplify, TietzeEffort, DEFAULT_ELIMINATION_LENGTH, DEFAULT_TIETZE_PASSES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("table and presentation use different alphabets")]
    AlphabetMismatch,
    #[error("subgroup is not normal: Schreier generator {0} moves a coset")]
    NotNormal(String),
    #[error("candidate {0} does not have an expected shape")]
    Shape(String),
    #[error("rewriting identity failed for {0}")]
    RuleIdentity(String),
}

/// Schreier generator `u x (rep of coset u x)^-1` for a representative `u`
/// and a positive generator `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierGenerator {
    pub coset: usize,
    pub generator: GeneratorSymbol,
    pub word: Word,
}

impl SchreierGenerator {
    /// Label `u,x` with the representative written out.
    pub fn label(&self, t: &CosetTable) -> String {
        format!("({}, {})", t.transversal()[self.coset], self.generator)
    }
}

fn schreier_word(t: &CosetTable, coset: usize, gen_index: usize) -> Word {
    let letter = Letter::new(t.alphabet().symbols()[gen_index].clone(), false);
    let target = t.action(coset, 2 * gen_index);
    Word::product([&t.transversal()[coset], &Word::free_reduce([letter]), &t.transversal()[target].inverse()])
}

/// Nontrivial Schreier generators, one per (coset, positive generator) off
/// the spanning tree, without repeated words.
pub fn schreier_generators(t: &CosetTable) -> Vec<SchreierGenerator> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for coset in 0..t.n_cosets() {
        for (i, symbol) in t.alphabet().symbols().iter().enumerate() {
            let word = schreier_word(t, coset, i);
            if !word.is_identity() && seen.insert(word.clone()) {
                out.push(SchreierGenerator { coset, generator: symbol.clone(), word });
            }
        }
    }
    out
}

/// Whether the subgroup of `t` is normal: each Schreier generator fixes
/// every coset.
pub fn is_normal(t: &CosetTable) -> bool {
    first_non_normal(t).is_none()
}

fn first_non_normal(t: &CosetTable) -> Option<Word> {
    schreier_generators(t).into_iter().map(|s| s.word).find(|w| {
        (0..t.n_cosets()).any(|c| t.trace(c, w).expect("word over the table alphabet") != c)
    })
}

fn subgroup_symbol(generator: &GeneratorSymbol, coset: usize) -> Result<GeneratorSymbol, WordError> {
    GeneratorSymbol::new(&format!("{generator}_{coset}"))
}

/// Reidemeister presentation of the subgroup with table `t`, on generators
/// `x_c` (Schreier generator for coset `c` and generator `x`), Tietze
/// simplified with `effort`.
pub fn subgroup_presentation(
    p: &Presentation,
    t: &CosetTable,
    effort: TietzeEffort,
) -> Result<Presentation, SubgroupError> {
    if p.alphabet() != t.alphabet() {
        return Err(SubgroupError::AlphabetMismatch);
    }
    t.audit_with(p)?;
    let n = p.num_generators();
    // Tree edges give trivial Schreier generators.
    let mut symbols: Vec<Option<GeneratorSymbol>> = Vec::with_capacity(t.n_cosets() * n);
    for coset in 0..t.n_cosets() {
        for (i, g) in p.generators().iter().enumerate() {
            symbols.push(if schreier_word(t, coset, i).is_identity() {
                None
            } else {
                Some(subgroup_symbol(g, coset)?)
            });
        }
    }
    let rewrite = |start: usize, r: &Word| -> Result<Word, SubgroupError> {
        let cols = p.alphabet().columns(r)?;
        let mut c = start;
        let mut letters = Vec::new();
        for col in cols {
            let i = col / 2;
            if col % 2 == 0 {
                if let Some(s) = &symbols[c * n + i] {
                    letters.push(Letter::new(s.clone(), false));
                }
                c = t.action(c, col);
            } else {
                c = t.action(c, col);
                if let Some(s) = &symbols[c * n + i] {
                    letters.push(Letter::new(s.clone(), true));
                }
            }
        }
        Ok(Word::free_reduce(letters))
    };
    let mut relators = Vec::with_capacity(t.n_cosets() * p.relators().len());
    for r in p.relators() {
        for c in 0..t.n_cosets() {
            relators.push(rewrite(c, r)?);
        }
    }
    let alphabet = Alphabet::new(symbols.into_iter().flatten().collect())?;
    let raw = Presentation::new(alphabet, relators)?;
    Ok(tietze_simplify(&raw, effort))
}
