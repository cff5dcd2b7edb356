use std::fmt;

use super::{GF2Vector, HomologyError};
use crate::words::{GeneratorSymbol, Letter, Word};

/// A curve or based loop on `N_g`, identified by the crosscaps it passes
/// through. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurveSpec {
    /// Closed curve passing once through each listed crosscap.
    Closed(Vec<usize>),
    /// Two-sided loop `alpha_{k;i,j}` based at crosscap `k`.
    Alpha { k: usize, i: usize, j: usize },
    /// Two-sided loop `beta_{k;i,j}` based at crosscap `k`.
    Beta { k: usize, i: usize, j: usize },
    /// One-sided loop `x_{k;i}` based at crosscap `k`.
    X { k: usize, i: usize },
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveSpec::Closed(idx) => {
                let s: Vec<String> = idx.iter().map(usize::to_string).collect();
                write!(f, "alpha_{{{}}}", s.join(","))
            }
            CurveSpec::Alpha { k, i, j } => write!(f, "alpha_{{{k};{i},{j}}}"),
            CurveSpec::Beta { k, i, j } => write!(f, "beta_{{{k};{i},{j}}}"),
            CurveSpec::X { k, i } => write!(f, "x_{{{k};{i}}}"),
        }
    }
}

fn in_range(i: usize, g: usize) -> bool {
    (1..=g).contains(&i)
}

fn all_distinct(idx: &[usize]) -> bool {
    idx.iter().enumerate().all(|(n, a)| !idx[..n].contains(a))
}

impl CurveSpec {
    pub fn validate(&self, g: usize) -> Result<(), HomologyError> {
        let ok = match self {
            CurveSpec::Closed(idx) => {
                !idx.is_empty() && idx.iter().all(|&i| in_range(i, g)) && all_distinct(idx)
            }
            CurveSpec::Alpha { k, i, j } | CurveSpec::Beta { k, i, j } => {
                [*k, *i, *j].iter().all(|&x| in_range(x, g)) && all_distinct(&[*k, *i, *j])
            }
            CurveSpec::X { k, i } => in_range(*k, g) && in_range(*i, g) && k != i,
        };
        if ok {
            Ok(())
        } else {
            Err(HomologyError::InvalidIndices { symbol: self.to_string(), genus: g })
        }
    }

    pub fn base(&self) -> Option<usize> {
        match self {
            CurveSpec::Closed(_) => None,
            CurveSpec::Alpha { k, .. } | CurveSpec::Beta { k, .. } | CurveSpec::X { k, .. } => Some(*k),
        }
    }
}

/// `p, q, k` appear in this cyclic order on `1..g`.
fn cyclically_ordered(p: usize, q: usize, k: usize) -> bool {
    (p < q && q < k) || (q < k && k < p) || (k < p && p < q)
}

fn x_symbol(i: usize) -> GeneratorSymbol {
    GeneratorSymbol::new(&format!("x{i}")).expect("valid generator name")
}

/// Word in the generators `x{i}` of `pi_1(N_{g-1}^{(k)})` for a based loop:
/// `alpha_{k;i,j} = x_p x_q` and `beta_{k;i,j} = x_q x_p`, where `p, q, k`
/// are in cyclic order.
pub fn based_loop_word(loop_spec: &CurveSpec, g: usize) -> Result<Word, HomologyError> {
    loop_spec.validate(g)?;
    let x = |i| Letter::new(x_symbol(i), false);
    match *loop_spec {
        CurveSpec::Alpha { k, i, j } | CurveSpec::Beta { k, i, j } => {
            let (p, q) = if cyclically_ordered(i, j, k) { (i, j) } else { (j, i) };
            let alpha = matches!(loop_spec, CurveSpec::Alpha { .. });
            Ok(if alpha { Word::free_reduce([x(p), x(q)]) } else { Word::free_reduce([x(q), x(p)]) })
        }
        CurveSpec::X { i, .. } => Ok(Word::free_reduce([x(i)])),
        CurveSpec::Closed(_) => Err(HomologyError::NotBased(loop_spec.to_string())),
    }
}

/// Mod-2 class of a curve: the sum of the crosscap classes it traverses once.
/// The base crosscap of a based loop is not traversed.
pub fn curve_class(c: &CurveSpec, g: usize) -> Result<GF2Vector, HomologyError> {
    c.validate(g)?;
    let mut v = GF2Vector::zero(g);
    let unit = |i: usize| GF2Vector::unit(i - 1, g);
    match c {
        CurveSpec::Closed(idx) => {
            for &i in idx {
                v = v.add(&unit(i))?;
            }
        }
        CurveSpec::Alpha { i, j, .. } | CurveSpec::Beta { i, j, .. } => {
            v = unit(*i).add(&unit(*j))?;
        }
        CurveSpec::X { i, .. } => v = unit(*i),
    }
    Ok(v)
}

/// Classes of the two boundary curves of a regular neighbourhood of a
/// two-sided loop based at crosscap `k`, after the blowup at `k`. One copy
/// misses crosscap `k`, the other runs through it twice. The loop is given as
/// a word in the `x{i}` generators, `i != k`.
pub fn boundary_classes_of_word(
    k: usize,
    word: &Word,
    g: usize,
) -> Result<(GF2Vector, GF2Vector), HomologyError> {
    let mut crossings = vec![0u64; g];
    for l in word.letters() {
        let i: usize = l
            .symbol
            .as_str()
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .filter(|&i| in_range(i, g) && i != k)
            .ok_or_else(|| HomologyError::InvalidIndices { symbol: word.to_string(), genus: g })?;
        crossings[i - 1] += 1;
    }
    if crossings.iter().sum::<u64>() % 2 == 1 {
        return Err(HomologyError::OneSidedLoop(word.to_string()));
    }
    let reduce = |counts: &[u64]| {
        let bits = counts
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, c)| acc | ((c % 2) << i));
        GF2Vector::from_bits(bits, g)
    };
    let missing_base = reduce(&crossings);
    let mut through_base = crossings;
    through_base[k - 1] += 2;
    Ok((missing_base, reduce(&through_base)))
}

/// Boundary classes for a catalogued based loop.
pub fn neighborhood_boundary_classes(
    loop_spec: &CurveSpec,
    g: usize,
) -> Result<(GF2Vector, GF2Vector), HomologyError> {
    let k = loop_spec.base().ok_or_else(|| HomologyError::NotBased(loop_spec.to_string()))?;
    if let CurveSpec::X { .. } = loop_spec {
        loop_spec.validate(g)?;
        return Err(HomologyError::OneSidedLoop(loop_spec.to_string()));
    }
    let word = based_loop_word(loop_spec, g)?;
    boundary_classes_of_word(k, &word, g)
}
