//! Coset tables: Todd–Coxeter enumeration, tables read off a permutation or
//! finite matrix action, tracing and audits.
//!
//! Columns are signed generators: column `2i` is generator `i`, column
//! `2i + 1` its inverse. Words act on cosets from the left to the right, so
//! `trace(c, uv) = trace(trace(c, u), v)`.

mod todd_coxeter;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use thiserror::Error;

use crate::mod2::GF2Matrix;
use crate::words::{Alphabet, Letter, Presentation, Word, WordError};

pub use todd_coxeter::todd_coxeter;

pub const DEFAULT_MAX_COSETS: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("coset enumeration overflow: {live} live cosets when the cap of {cap} was reached")]
    Overflow { live: usize, cap: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("coset {coset} out of range for a table with {n_cosets} cosets")]
    InvalidCoset { coset: usize, n_cosets: usize },
    #[error("max_cosets must be at least 1")]
    ZeroCap,
    #[error("{images} images supplied for {generators} generators")]
    CountMismatch { images: usize, generators: usize },
    #[error("image of generator {0} has the wrong dimension")]
    DimensionMismatch(usize),
    #[error("image of generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("permutation for generator {0} is not a bijection of the same point set")]
    NotPermutation(usize),
    #[error("table audit failed: {0}")]
    Audit(String),
}

/// The presentation and subgroup generators a table was enumerated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOrigin {
    pub presentation: Presentation,
    pub subgroup_gens: Vec<Word>,
}

/// Complete coset table with a Schreier transversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    alphabet: Alphabet,
    rows: Vec<Vec<usize>>,
    transversal: Vec<Word>,
    origin: Option<TableOrigin>,
}

pub(crate) fn column_letter(alphabet: &Alphabet, col: usize) -> Letter {
    Letter::new(alphabet.symbols()[col / 2].clone(), col % 2 == 1)
}

impl CosetTable {
    /// Builds a standardized table from complete rows by breadth-first search
    /// from coset 0 in column order. Rows not reachable from 0 are dropped.
    pub(crate) fn standardized(
        alphabet: Alphabet,
        rows: &[Vec<usize>],
        start: usize,
        origin: Option<TableOrigin>,
    ) -> Self {
        let mut number = HashMap::from([(start, 0usize)]);
        let mut order = vec![start];
        let mut transversal = vec![Word::identity()];
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            for (col, &d) in rows[c].iter().enumerate() {
                if let std::collections::hash_map::Entry::Vacant(e) = number.entry(d) {
                    e.insert(order.len());
                    order.push(d);
                    let rep = transversal[head].concat(&Word::free_reduce([column_letter(&alphabet, col)]));
                    transversal.push(rep);
                }
            }
            head += 1;
        }
        let rows = order.iter().map(|&c| rows[c].iter().map(|d| number[d]).collect()).collect();
        CosetTable { alphabet, rows, transversal, origin }
    }

    pub fn n_cosets(&self) -> usize {
        self.rows.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn origin(&self) -> Option<&TableOrigin> {
        self.origin.as_ref()
    }

    /// Coset representatives; entry 0 is the identity.
    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    pub fn representative(&self, coset: usize) -> Option<&Word> {
        self.transversal.get(coset)
    }

    /// Image of `coset` under signed generator column `col`.
    pub fn action(&self, coset: usize, col: usize) -> usize {
        self.rows[coset][col]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn trace(&self, start: usize, w: &Word) -> Result<usize, CosetError> {
        if start >= self.n_cosets() {
            return Err(CosetError::InvalidCoset { coset: start, n_cosets: self.n_cosets() });
        }
        let cols = self.alphabet.columns(w)?;
        Ok(cols.into_iter().fold(start, |c, col| self.rows[c][col]))
    }

    /// Coset whose representative is `transversal[coset]` times the letter.
    pub fn act_letter(&self, coset: usize, letter: &Letter) -> Result<usize, CosetError> {
        self.trace(coset, &Word::free_reduce([letter.clone()]))
    }

    /// Checks every table invariant against the origin presentation, if any.
    pub fn audit(&self) -> Result<(), CosetError> {
        self.audit_structure()?;
        if let Some(origin) = &self.origin {
            self.audit_with(&origin.presentation)?;
            for h in &origin.subgroup_gens {
                if self.trace(0, h)? != 0 {
                    return Err(CosetError::Audit(format!("subgroup generator {h} moves coset 0")));
                }
            }
        }
        Ok(())
    }

    /// Checks that every relator of `p` fixes every coset.
    pub fn audit_with(&self, p: &Presentation) -> Result<(), CosetError> {
        for r in p.relators() {
            for c in 0..self.n_cosets() {
                if self.trace(c, r)? != c {
                    return Err(CosetError::Audit(format!("relator {r} moves coset {c}")));
                }
            }
        }
        Ok(())
    }

    fn audit_structure(&self) -> Result<(), CosetError> {
        let n = self.n_cosets();
        let fail = |msg: String| Err(CosetError::Audit(msg));
        if n == 0 {
            return fail("empty table".into());
        }
        for col in 0..2 * self.alphabet.len() {
            let mut hit = vec![false; n];
            for c in 0..n {
                let d = self.rows[c][col];
                if d >= n || hit[d] {
                    return fail(format!("column {col} is not a permutation"));
                }
                hit[d] = true;
                if self.rows[d][col ^ 1] != c {
                    return fail(format!("column {} is not inverse to column {col}", col ^ 1));
                }
            }
        }
        if self.transversal.len() != n || !self.transversal[0].is_identity() {
            return fail("transversal must have one entry per coset, starting at the identity".into());
        }
        let reps: HashMap<&Word, usize> = self.transversal.iter().enumerate().map(|(i, w)| (w, i)).collect();
        for (i, w) in self.transversal.iter().enumerate() {
            if self.trace(0, w)? != i {
                return fail(format!("representative {w} does not reach coset {i}"));
            }
            let prefix = Word::free_reduce(w.letters()[..w.len().saturating_sub(1)].iter().cloned());
            if !reps.contains_key(&prefix) {
                return fail(format!("representative {w} has a prefix outside the transversal"));
            }
        }
        Ok(())
    }

    /// Tab-separated dump: header `coset` then one column per signed
    /// generator, one row per coset.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("coset");
        for col in 0..2 * self.alphabet.len() {
            let _ = write!(out, "\t{}", column_letter(&self.alphabet, col));
        }
        out.push('\n');
        for (c, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "{c}");
            for d in row {
                let _ = write!(out, "\t{d}");
            }
            out.push('\n');
        }
        out
    }

    /// Table of the stabilizer of point 0 under the right action given by
    /// `perms[i]` (image of each point under generator `i`). Only the orbit
    /// of 0 is kept.
    pub fn from_permutations(alphabet: Alphabet, perms: &[Vec<usize>]) -> Result<Self, CosetError> {
        if perms.len() != alphabet.len() {
            return Err(CosetError::CountMismatch { images: perms.len(), generators: alphabet.len() });
        }
        let points = perms.first().map_or(1, Vec::len);
        let mut inverses = Vec::with_capacity(perms.len());
        for (i, p) in perms.iter().enumerate() {
            let mut inv = vec![usize::MAX; points];
            if p.len() != points {
                return Err(CosetError::NotPermutation(i));
            }
            for (a, &b) in p.iter().enumerate() {
                if b >= points || inv[b] != usize::MAX {
                    return Err(CosetError::NotPermutation(i));
                }
                inv[b] = a;
            }
            inverses.push(inv);
        }
        regular_orbit(alphabet, 0usize, usize::MAX, |&pt, col| {
            if col % 2 == 0 { perms[col / 2][pt] } else { inverses[col / 2][pt] }
        })
    }
}

/// Breadth-first orbit of `start` under the signed-generator action `act`,
/// as a standardized coset table.
fn regular_orbit<S: Clone + Eq + Hash>(
    alphabet: Alphabet,
    start: S,
    cap: usize,
    act: impl Fn(&S, usize) -> S,
) -> Result<CosetTable, CosetError> {
    let cols = 2 * alphabet.len();
    let mut index = HashMap::from([(start.clone(), 0usize)]);
    let mut states = vec![start];
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let mut row = Vec::with_capacity(cols);
        for col in 0..cols {
            let next = act(&states[c], col);
            let d = match index.get(&next) {
                Some(&d) => d,
                None => {
                    if states.len() >= cap {
                        return Err(CosetError::Overflow { live: states.len(), cap });
                    }
                    index.insert(next.clone(), states.len());
                    states.push(next);
                    queue.push_back(states.len() - 1);
                    states.len() - 1
                }
            };
            row.push(d);
        }
        rows.push(row);
    }
    Ok(CosetTable::standardized(alphabet, &rows, 0, None))
}

/// Table of the kernel of the map sending generator `i` to `images[i]`:
/// cosets are the elements of the image group under right multiplication.
pub fn table_from_finite_image(
    images: &[GF2Matrix],
    alphabet: Alphabet,
    max_cosets: usize,
) -> Result<CosetTable, CosetError> {
    if max_cosets == 0 {
        return Err(CosetError::ZeroCap);
    }
    if images.len() != alphabet.len() {
        return Err(CosetError::CountMismatch { images: images.len(), generators: alphabet.len() });
    }
    let dim = images.first().map_or(1, GF2Matrix::dim);
    let mut signed = Vec::with_capacity(2 * images.len());
    for (i, m) in images.iter().enumerate() {
        if m.dim() != dim {
            return Err(CosetError::DimensionMismatch(i));
        }
        signed.push(m.clone());
        signed.push(m.inverse().ok_or(CosetError::NotInvertible(i))?);
    }
    regular_orbit(alphabet, GF2Matrix::identity(dim), max_cosets, |m, col| {
        m.mul(&signed[col]).expect("dimensions checked")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn ab() -> Alphabet {
        Alphabet::from_names(["a", "b"]).unwrap()
    }

    #[test]
    fn permutation_table_of_stabilizer() {
        // a = (0 1 2), b = (1 2) acting on three points: stabilizer of 0 has index 3.
        let t = CosetTable::from_permutations(ab(), &[vec![1, 2, 0], vec![0, 2, 1]]).unwrap();
        t.audit().unwrap();
        assert_eq!(t.n_cosets(), 3);
        assert_eq!(t.trace(0, &parse_word("a", None).unwrap()).unwrap(), 1);
        assert_eq!(t.trace(0, &parse_word("b", None).unwrap()).unwrap(), 0);
        assert_eq!(t.trace(2, &Word::identity()).unwrap(), 2);
        assert!(t.trace(3, &Word::identity()).is_err());
        assert!(CosetTable::from_permutations(ab(), &[vec![1, 1, 0], vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn orbit_keeps_only_reachable_points() {
        let a = Alphabet::from_names(["a"]).unwrap();
        let t = CosetTable::from_permutations(a, &[vec![1, 0, 3, 2]]).unwrap();
        assert_eq!(t.n_cosets(), 2);
    }

    #[test]
    fn finite_image_examples() {
        let s = GF2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
        let t = GF2Matrix::from_rows(&[&[1, 1], &[0, 1]]);
        let st = Alphabet::from_names(["S", "T"]).unwrap();
        let table = table_from_finite_image(&[s.clone(), t], st.clone(), 100).unwrap();
        table.audit().unwrap();
        assert_eq!(table.n_cosets(), 6);

        let a = Alphabet::from_names(["a"]).unwrap();
        let id = table_from_finite_image(&[GF2Matrix::identity(2)], a.clone(), 10).unwrap();
        assert_eq!(id.n_cosets(), 1);
        assert_eq!(table_from_finite_image(std::slice::from_ref(&s), a.clone(), 10).unwrap().n_cosets(), 2);

        let swap_only = table_from_finite_image(&[s.clone(), GF2Matrix::identity(2)], st.clone(), 5).unwrap();
        assert_eq!(swap_only.n_cosets(), 2);
        let singular = GF2Matrix::from_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            table_from_finite_image(&[singular], a.clone(), 10).unwrap_err(),
            CosetError::NotInvertible(0)
        );
        assert_eq!(
            table_from_finite_image(&[s.clone(), GF2Matrix::identity(3)], st.clone(), 10).unwrap_err(),
            CosetError::DimensionMismatch(1)
        );
        assert!(matches!(
            table_from_finite_image(&[s], st, 10),
            Err(CosetError::CountMismatch { .. })
        ));
    }

    #[test]
    fn finite_image_overflow() {
        let s = GF2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
        let t = GF2Matrix::from_rows(&[&[1, 1], &[0, 1]]);
        let st = Alphabet::from_names(["S", "T"]).unwrap();
        assert!(matches!(
            table_from_finite_image(&[s, t], st, 4),
            Err(CosetError::Overflow { cap: 4, .. })
        ));
    }

    #[test]
    fn tsv_dump() {
        let a = Alphabet::from_names(["a"]).unwrap();
        let t = CosetTable::from_permutations(a, &[vec![1, 0]]).unwrap();
        assert_eq!(t.to_tsv(), "coset\ta\ta^-1\n0\t1\t1\n1\t0\t0\n");
    }
}
