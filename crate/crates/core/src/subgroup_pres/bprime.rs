//! Reidemeister–Schreier generators of the index-2 subgroup of the level 2
//! mapping class group cut out by the parity of Y-homeomorphisms, written in
//! the left-coset form `overline(wu)^-1 w u` and rewritten to the labelled
//! set B′.

use std::collections::BTreeSet;
use std::fmt;

use super::{first_non_normal, SubgroupError};
use crate::coset_enum::{column_letter, CosetTable};
use crate::mod2::{MappingClassSymbol, MappingClassWord};
use crate::words::{Alphabet, GeneratorSymbol, Letter, Word};

/// Generator of the level 2 mapping class group: `Y_{i,j}` or the squared
/// twist `T_{1,j,k,l}^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level2Generator {
    Y(usize, usize),
    TSq(usize, usize, usize),
}

impl Level2Generator {
    pub fn symbol(&self) -> GeneratorSymbol {
        let name = match self {
            Level2Generator::Y(i, j) => format!("Y{i},{j}"),
            Level2Generator::TSq(j, k, l) => format!("Tsq1,{j},{k},{l}"),
        };
        GeneratorSymbol::new(&name).expect("valid generator name")
    }

    pub fn from_symbol(s: &GeneratorSymbol) -> Option<Self> {
        let nums = |rest: &str| -> Option<Vec<usize>> { rest.split(',').map(|p| p.parse().ok()).collect() };
        let name = s.as_str();
        if let Some(rest) = name.strip_prefix("Tsq") {
            match nums(rest)?.as_slice() {
                [1, j, k, l] => Some(Level2Generator::TSq(*j, *k, *l)),
                _ => None,
            }
        } else {
            match nums(name.strip_prefix('Y')?)?.as_slice() {
                [i, j] => Some(Level2Generator::Y(*i, *j)),
                _ => None,
            }
        }
    }

    /// Image in the index-2 quotient: Y-homeomorphisms are odd.
    pub fn parity(&self) -> bool {
        matches!(self, Level2Generator::Y(..))
    }

    pub fn mapping_class(&self) -> MappingClassWord {
        match *self {
            Level2Generator::Y(i, j) => MappingClassWord::single(MappingClassSymbol::Y(i, j), 1),
            Level2Generator::TSq(j, k, l) => MappingClassWord::single(MappingClassSymbol::twist(&[1, j, k, l]), 2),
        }
    }
}

const Y12: Level2Generator = Level2Generator::Y(1, 2);

/// `Y_{i,j}` for `1 <= i <= g - 1`, `j != i`, then `T_{1,j,k,l}^2` for
/// `2 <= j < k < l <= g`.
pub fn level2_generating_set(g: usize) -> Vec<Level2Generator> {
    let mut out = Vec::new();
    for i in 1..g {
        for j in (1..=g).filter(|&j| j != i) {
            out.push(Level2Generator::Y(i, j));
        }
    }
    for j in 2..=g {
        for k in j + 1..=g {
            for l in k + 1..=g {
                out.push(Level2Generator::TSq(j, k, l));
            }
        }
    }
    out
}

/// Coset table of the kernel of the parity map on `gens`.
pub fn parity_table(gens: &[Level2Generator]) -> Result<CosetTable, SubgroupError> {
    let alphabet = Alphabet::new(gens.iter().map(Level2Generator::symbol).collect())?;
    let perms: Vec<Vec<usize>> =
        gens.iter().map(|x| if x.parity() { vec![1, 0] } else { vec![0, 1] }).collect();
    Ok(CosetTable::from_permutations(alphabet, &perms)?)
}

/// `overline(wu)^-1 w u` for a representative `u` and a signed generator
/// `w`, kept as an unreduced letter sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCandidate {
    pub u: Word,
    pub w: Letter,
    pub overline: Word,
    pub letters: Vec<Letter>,
    /// `wu` reduces to a representative, so the candidate is trivial.
    pub wu_in_transversal: bool,
}

impl FormalCandidate {
    pub fn word(&self) -> Word {
        Word::free_reduce(self.letters.iter().cloned())
    }
}

impl fmt::Display for FormalCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// All left-form candidates for a normal subgroup, one per representative
/// and signed generator, including those with `wu` in the transversal.
/// Left and right cosets agree only for normal subgroups, so other tables
/// are rejected.
pub fn schreier_candidates(t: &CosetTable) -> Result<Vec<FormalCandidate>, SubgroupError> {
    if let Some(w) = first_non_normal(t) {
        return Err(SubgroupError::NotNormal(w.to_string()));
    }
    let mut out = Vec::new();
    for u in t.transversal() {
        for col in 0..2 * t.alphabet().len() {
            let w = column_letter(t.alphabet(), col);
            let wu = Word::free_reduce(std::iter::once(w.clone()).chain(u.letters().iter().cloned()));
            let overline = t.transversal()[t.trace(0, &wu)?].clone();
            let letters = overline
                .inverse()
                .letters()
                .iter()
                .cloned()
                .chain(std::iter::once(w.clone()))
                .chain(u.letters().iter().cloned())
                .collect();
            let wu_in_transversal = t.transversal().contains(&wu);
            out.push(FormalCandidate { u: u.clone(), w, overline, letters, wu_in_transversal });
        }
    }
    Ok(out)
}

/// Element of B′: `Y_{i,j} Y_{1,2}`, `Y_{i,j}^2`, `Y_{1,2}^-1 T_{1,j,k,l}^2 Y_{1,2}`
/// or `T_{1,j,k,l}^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BPrimeElement {
    YY12(usize, usize),
    YSq(usize, usize),
    ConjT(usize, usize, usize),
    TSq(usize, usize, usize),
}

fn letter(x: Level2Generator, inverse: bool) -> Letter {
    Letter::new(x.symbol(), inverse)
}

impl BPrimeElement {
    /// Word over the level 2 generators.
    pub fn word(&self) -> Word {
        let y = |i, j| Level2Generator::Y(i, j);
        let t = |j, k, l| Level2Generator::TSq(j, k, l);
        Word::free_reduce(match *self {
            BPrimeElement::YY12(i, j) => vec![letter(y(i, j), false), letter(Y12, false)],
            BPrimeElement::YSq(i, j) => vec![letter(y(i, j), false), letter(y(i, j), false)],
            BPrimeElement::ConjT(j, k, l) => {
                vec![letter(Y12, true), letter(t(j, k, l), false), letter(Y12, false)]
            }
            BPrimeElement::TSq(j, k, l) => vec![letter(t(j, k, l), false)],
        })
    }

    /// Symbol word with runs kept as written: `Y_{1,2} Y_{1,2}` and
    /// `Y_{1,2}^2` stay distinct.
    pub fn mapping_class(&self) -> MappingClassWord {
        let y = MappingClassSymbol::Y;
        let t = |j, k, l| MappingClassSymbol::twist(&[1, j, k, l]);
        MappingClassWord::new(match *self {
            BPrimeElement::YY12(i, j) => vec![(y(i, j), 1), (y(1, 2), 1)],
            BPrimeElement::YSq(i, j) => vec![(y(i, j), 2)],
            BPrimeElement::ConjT(j, k, l) => vec![(y(1, 2), -1), (t(j, k, l), 2), (y(1, 2), 1)],
            BPrimeElement::TSq(j, k, l) => vec![(t(j, k, l), 2)],
        })
    }

    /// The full B′ for genus `g`, from its index ranges.
    pub fn expected_set(g: usize) -> BTreeSet<BPrimeElement> {
        let mut out = BTreeSet::new();
        for x in level2_generating_set(g) {
            match x {
                Level2Generator::Y(i, j) => {
                    out.insert(BPrimeElement::YY12(i, j));
                    out.insert(BPrimeElement::YSq(i, j));
                }
                Level2Generator::TSq(j, k, l) => {
                    out.insert(BPrimeElement::ConjT(j, k, l));
                    out.insert(BPrimeElement::TSq(j, k, l));
                }
            }
        }
        out
    }
}

impl fmt::Display for BPrimeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mapping_class())
    }
}

type Factors = Vec<(BPrimeElement, i8)>;

/// Writes a candidate as a product of B′ elements and their inverses.
fn classify(c: &[(Level2Generator, bool)]) -> Option<Factors> {
    use Level2Generator::{TSq, Y};
    match *c {
        [(Y(i, j), false), (y12, false)] if y12 == Y12 => Some(vec![(BPrimeElement::YY12(i, j), 1)]),
        // Y^-1 Y12 = (Y^2)^-1 . Y Y12
        [(Y(i, j), true), (y12, false)] if y12 == Y12 => {
            Some(vec![(BPrimeElement::YSq(i, j), -1), (BPrimeElement::YY12(i, j), 1)])
        }
        // Y12^-1 Y^e = (Y^-e Y12)^-1
        [(y12, true), (y @ Y(..), e)] if y12 == Y12 => {
            let inner = classify(&[(y, !e), (Y12, false)])?;
            Some(inner.into_iter().rev().map(|(b, s)| (b, -s)).collect())
        }
        [(y12, true), (TSq(j, k, l), e), (y12b, false)] if y12 == Y12 && y12b == Y12 => {
            Some(vec![(BPrimeElement::ConjT(j, k, l), if e { -1 } else { 1 })])
        }
        [(TSq(j, k, l), e)] => Some(vec![(BPrimeElement::TSq(j, k, l), if e { -1 } else { 1 })]),
        _ => None,
    }
}

/// Rewrites formal candidates to B′ using `Y_{1,2}^-1 Y^{±1} = (Y^{∓1} Y_{1,2})^-1`
/// and `Y^-1 Y_{1,2} = Y^-2 . Y Y_{1,2}`, checking each rewrite in the free
/// group on the level 2 generators.
pub fn rs_simplify_to_bprime(candidates: &[FormalCandidate]) -> Result<BTreeSet<BPrimeElement>, SubgroupError> {
    let mut out = BTreeSet::new();
    for c in candidates {
        let shape: Option<Vec<(Level2Generator, bool)>> =
            c.letters.iter().map(|l| Level2Generator::from_symbol(&l.symbol).map(|x| (x, l.inverse))).collect();
        let factors = shape.as_deref().and_then(classify).ok_or_else(|| SubgroupError::Shape(c.to_string()))?;
        let rebuilt = Word::product(
            factors.iter().map(|(b, s)| if *s > 0 { b.word() } else { b.word().inverse() }).collect::<Vec<_>>().iter(),
        );
        if rebuilt != c.word() {
            return Err(SubgroupError::RuleIdentity(c.to_string()));
        }
        out.extend(factors.into_iter().map(|(b, _)| b));
    }
    Ok(out)
}
