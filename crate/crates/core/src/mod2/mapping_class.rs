use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{
    curve_class, neighborhood_boundary_classes, transvection, CurveSpec, GF2Matrix, HomologyError,
};

/// Named mapping classes of `N_g`. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MappingClassSymbol {
    /// Dehn twist `T_{i,j}` or `T_{i,j,k,l}` about `alpha_{i,...}`; indices
    /// strictly increasing.
    Twist(Vec<usize>),
    /// Y-homeomorphism `Y_{i,j}` (crosscap slide of crosscap `i` along
    /// `alpha_{i,j}`).
    Y(usize, usize),
    /// Crosscap pushing map `a_{k;i,j}` along `alpha_{k;i,j}`, `i < j`.
    PushA { k: usize, i: usize, j: usize },
    /// Crosscap pushing map `b_{k;i,j}` along `beta_{k;i,j}`, `i < j`.
    PushB { k: usize, i: usize, j: usize },
    /// Crosscap transposition `sigma_{i,j}`, `i < j`.
    Sigma(usize, usize),
    /// Rotation sending crosscap `i` to crosscap `i + 1` (mod g).
    Eta,
}

impl MappingClassSymbol {
    pub fn twist(indices: &[usize]) -> Self {
        MappingClassSymbol::Twist(indices.to_vec())
    }

    /// Pushing maps with the index pair normalized, since
    /// `alpha_{k;j,i} = alpha_{k;i,j}` and likewise for beta.
    pub fn push_a(k: usize, i: usize, j: usize) -> Self {
        MappingClassSymbol::PushA { k, i: i.min(j), j: i.max(j) }
    }

    pub fn push_b(k: usize, i: usize, j: usize) -> Self {
        MappingClassSymbol::PushB { k, i: i.min(j), j: i.max(j) }
    }

    pub fn sigma(i: usize, j: usize) -> Self {
        MappingClassSymbol::Sigma(i.min(j), i.max(j))
    }

    pub fn validate(&self, g: usize) -> Result<(), HomologyError> {
        let in_range = |i: &usize| (1..=g).contains(i);
        let ok = match self {
            MappingClassSymbol::Twist(idx) => {
                (idx.len() == 2 || idx.len() == 4)
                    && idx.iter().all(in_range)
                    && idx.windows(2).all(|w| w[0] < w[1])
            }
            MappingClassSymbol::Y(i, j) => in_range(i) && in_range(j) && i != j,
            MappingClassSymbol::PushA { k, i, j } | MappingClassSymbol::PushB { k, i, j } => {
                [k, i, j].into_iter().all(in_range) && i < j && k != i && k != j
            }
            MappingClassSymbol::Sigma(i, j) => in_range(i) && in_range(j) && i < j,
            MappingClassSymbol::Eta => g >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(HomologyError::InvalidIndices { symbol: self.to_string(), genus: g })
        }
    }

    /// Mod-2 homology action of a single symbol.
    pub fn action(&self, g: usize) -> Result<GF2Matrix, HomologyError> {
        self.validate(g)?;
        match self {
            MappingClassSymbol::Twist(idx) => transvection(&curve_class(&CurveSpec::Closed(idx.clone()), g)?),
            // Y-homeomorphisms lie in the level 2 mapping class group.
            MappingClassSymbol::Y(..) => Ok(GF2Matrix::identity(g)),
            MappingClassSymbol::PushA { k, i, j } | MappingClassSymbol::PushB { k, i, j } => {
                let spec = match self {
                    MappingClassSymbol::PushA { .. } => CurveSpec::Alpha { k: *k, i: *i, j: *j },
                    _ => CurveSpec::Beta { k: *k, i: *i, j: *j },
                };
                let (c1, c2) = neighborhood_boundary_classes(&spec, g)?;
                let t2_inv = transvection(&c2)?.pow(-1).expect("transvections are invertible");
                transvection(&c1)?.mul(&t2_inv)
            }
            MappingClassSymbol::Sigma(i, j) => {
                let mut perm: Vec<usize> = (0..g).collect();
                perm.swap(i - 1, j - 1);
                Ok(GF2Matrix::permutation(&perm))
            }
            MappingClassSymbol::Eta => {
                Ok(GF2Matrix::permutation(&(0..g).map(|i| (i + 1) % g).collect::<Vec<_>>()))
            }
        }
    }
}

fn join(idx: &[usize]) -> String {
    idx.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for MappingClassSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingClassSymbol::Twist(idx) => write!(f, "T{}", join(idx)),
            MappingClassSymbol::Y(i, j) => write!(f, "Y{i},{j}"),
            MappingClassSymbol::PushA { k, i, j } => write!(f, "a{k};{i},{j}"),
            MappingClassSymbol::PushB { k, i, j } => write!(f, "b{k};{i},{j}"),
            MappingClassSymbol::Sigma(i, j) => write!(f, "s{i},{j}"),
            MappingClassSymbol::Eta => f.write_str("eta"),
        }
    }
}

fn parse_indices(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|p| p.parse().ok().filter(|&i: &usize| i > 0)).collect()
}

impl FromStr for MappingClassSymbol {
    type Err = HomologyError;

    /// Accepts `T1,2`, `T1,2,3,4`, `Y1,2`, `a1;2,3`, `b1;2,3`, `s1,2`, `eta`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || HomologyError::Parse(s.to_string());
        if s == "eta" {
            return Ok(MappingClassSymbol::Eta);
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match head {
            "T" => Ok(MappingClassSymbol::Twist(parse_indices(rest).ok_or_else(err)?)),
            "Y" | "s" => match parse_indices(rest).ok_or_else(err)?.as_slice() {
                [i, j] if head == "Y" => Ok(MappingClassSymbol::Y(*i, *j)),
                [i, j] => Ok(MappingClassSymbol::sigma(*i, *j)),
                _ => Err(err()),
            },
            "a" | "b" => {
                let (k, pair) = rest.split_once(';').ok_or_else(err)?;
                let k: usize = k.parse().map_err(|_| err())?;
                match parse_indices(pair).ok_or_else(err)?.as_slice() {
                    [i, j] if head == "a" => Ok(MappingClassSymbol::push_a(k, *i, *j)),
                    [i, j] => Ok(MappingClassSymbol::push_b(k, *i, *j)),
                    _ => Err(err()),
                }
            }
            _ => Err(err()),
        }
    }
}

/// Product of symbols with integer exponents, composed right to left. Runs
/// of equal symbols are kept as written: `Y1,2 Y1,2` and `Y1,2^2` are
/// different symbol words for the same mapping class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MappingClassWord {
    factors: Vec<(MappingClassSymbol, i64)>,
}

impl MappingClassWord {
    pub fn new(factors: Vec<(MappingClassSymbol, i64)>) -> Self {
        Self { factors: factors.into_iter().filter(|(_, e)| *e != 0).collect() }
    }

    pub fn single(symbol: MappingClassSymbol, exponent: i64) -> Self {
        Self::new(vec![(symbol, exponent)])
    }

    pub fn factors(&self) -> &[(MappingClassSymbol, i64)] {
        &self.factors
    }

    pub fn inverse(&self) -> Self {
        Self { factors: self.factors.iter().rev().map(|(s, e)| (s.clone(), -e)).collect() }
    }

    pub fn concat(&self, other: &MappingClassWord) -> Self {
        Self { factors: self.factors.iter().chain(&other.factors).cloned().collect() }
    }

    pub fn validate(&self, g: usize) -> Result<(), HomologyError> {
        self.factors.iter().try_for_each(|(s, _)| s.validate(g))
    }
}

impl fmt::Display for MappingClassWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (n, (s, e)) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MappingClassWord {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors = s
            .split_whitespace()
            .map(|tok| {
                let (sym, exp) = match tok.split_once('^') {
                    Some((sym, e)) => {
                        (sym, e.parse::<i64>().map_err(|_| HomologyError::Parse(tok.to_string()))?)
                    }
                    None => (tok, 1),
                };
                Ok((sym.parse()?, exp))
            })
            .collect::<Result<Vec<_>, HomologyError>>()?;
        Ok(MappingClassWord::new(factors))
    }
}

impl Serialize for MappingClassWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Mod-2 homology action of a word: `M(s_1)^{e_1} ... M(s_n)^{e_n}`.
pub fn mod2_action(w: &MappingClassWord, g: usize) -> Result<GF2Matrix, HomologyError> {
    let mut acc = GF2Matrix::identity(g);
    for (symbol, exponent) in w.factors() {
        let m = symbol.action(g)?;
        acc = acc.mul(&m.pow(*exponent).expect("mapping class actions are invertible"))?;
    }
    Ok(acc)
}
