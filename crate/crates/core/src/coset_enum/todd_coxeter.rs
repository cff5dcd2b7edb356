use std::collections::VecDeque;

use super::{CosetError, CosetTable, TableOrigin};
use crate::words::{Presentation, Word};

const UNDEF: usize = usize::MAX;

/// HLT enumeration state. Dead cosets point at a smaller coset in `parent`.
struct Enumerator {
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
    cols: usize,
    cap: usize,
}

impl Enumerator {
    fn new(cols: usize, cap: usize) -> Self {
        Self { table: vec![vec![UNDEF; cols]], parent: vec![0], queue: VecDeque::new(), cols, cap }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn live_count(&self) -> usize {
        (0..self.parent.len()).filter(|&c| self.is_live(c)).count()
    }

    fn define(&mut self, c: usize, col: usize) -> Result<(), CosetError> {
        if self.table.len() >= self.cap {
            return Err(CosetError::Overflow { live: self.live_count(), cap: self.cap });
        }
        let n = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(n);
        self.table[c][col] = n;
        self.table[n][col ^ 1] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut c = c;
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for col in 0..self.cols {
                let d = self.table[dead][col];
                if d == UNDEF {
                    continue;
                }
                self.table[d][col ^ 1] = UNDEF;
                let mu = self.rep(dead);
                let nu = self.rep(d);
                if self.table[mu][col] != UNDEF {
                    let target = self.table[mu][col];
                    self.merge(nu, target);
                } else if self.table[nu][col ^ 1] != UNDEF {
                    let target = self.table[nu][col ^ 1];
                    self.merge(mu, target);
                } else {
                    self.table[mu][col] = nu;
                    self.table[nu][col ^ 1] = mu;
                }
            }
        }
    }

    /// Scans `word` from coset `c`, filling the gap with new cosets or a
    /// deduction and recording any coincidence.
    fn scan_and_fill(&mut self, c: usize, word: &[usize]) -> Result<(), CosetError> {
        if word.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, word.len() as isize - 1);
        let at = |k: isize| word[k as usize];
        loop {
            while i <= j && self.table[f][at(i)] != UNDEF {
                f = self.table[f][at(i)];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][at(j) ^ 1] != UNDEF {
                b = self.table[b][at(j) ^ 1];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.table[f][at(i)] = b;
                self.table[b][at(i) ^ 1] = f;
                return Ok(());
            }
            self.define(f, at(i))?;
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup_gens` in the
/// group presented by `p`, by HLT relator scanning. Fails once more than
/// `max_cosets` cosets would be allocated.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, CosetError> {
    if max_cosets == 0 {
        return Err(CosetError::ZeroCap);
    }
    let alphabet = p.alphabet();
    let relators: Vec<Vec<usize>> =
        p.relators().iter().map(|r| alphabet.columns(r)).collect::<Result<_, _>>()?;
    let subgroup: Vec<Vec<usize>> =
        subgroup_gens.iter().map(|h| alphabet.columns(h)).collect::<Result<_, _>>()?;

    let cols = 2 * alphabet.len();
    let mut e = Enumerator::new(cols, max_cosets);
    for h in &subgroup {
        let start = e.rep(0);
        e.scan_and_fill(start, h)?;
    }
    let mut c = 0;
    while c < e.table.len() {
        for r in &relators {
            if !e.is_live(c) {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.is_live(c) {
            for col in 0..cols {
                if e.table[c][col] == UNDEF {
                    e.define(c, col)?;
                }
            }
        }
        c += 1;
    }

    let origin = TableOrigin { presentation: p.clone(), subgroup_gens: subgroup_gens.to_vec() };
    Ok(CosetTable::standardized(alphabet.clone(), &e.table, 0, Some(origin)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_presentation_file, parse_word, PresentationFile};

    fn enumerate(text: &str) -> CosetTable {
        let PresentationFile { presentation, subgroup } = parse_presentation_file(text).unwrap();
        let t = todd_coxeter(&presentation, &subgroup, 1000).unwrap();
        t.audit().unwrap();
        t
    }

    #[test]
    fn cyclic_quotient() {
        let t = enumerate("gens: a\nrel: a a a a\nsub: a a\n");
        assert_eq!(t.n_cosets(), 2);
        assert_eq!(t.trace(0, &parse_word("a", None).unwrap()).unwrap(), 1);
        assert_eq!(t.transversal()[1].to_string(), "a");
    }

    #[test]
    fn klein_four_regular_table() {
        let t = enumerate("gens: a b\nrel: a a\nrel: b b\nrel: a b a b\n");
        assert_eq!(t.n_cosets(), 4);
    }

    #[test]
    fn trivial_subgroup_of_symmetric_group() {
        let t = enumerate("gens: a b\nrel: a a\nrel: b b b\nrel: a b a b\n");
        assert_eq!(t.n_cosets(), 6);
    }

    #[test]
    fn whole_group_has_index_one() {
        let t = enumerate("gens: a b\nrel: a a\nrel: b b b\nrel: a b a b\nsub: a\nsub: b\n");
        assert_eq!(t.n_cosets(), 1);
        assert_eq!(t.transversal(), &[Word::identity()]);
    }

    #[test]
    fn klein_bottle_index_two_subgroup() {
        // Words of even length in <x1, x2, x3 | x1^2 x2^2 x3^2>.
        let t = enumerate(
            "gens: x1 x2 x3\nrel: x1 x1 x2 x2 x3 x3\n\
             sub: x2 x1\nsub: x1 x2\nsub: x3 x2\nsub: x2 x3\nsub: x1 x1\n",
        );
        assert_eq!(t.n_cosets(), 2);
    }

    #[test]
    fn larger_finite_groups() {
        // A5 = <a, b | a^2, b^3, (ab)^5>.
        assert_eq!(enumerate("gens: a b\nrel: a a\nrel: b b b\nrel: a b a b a b a b a b\n").n_cosets(), 60);
        // Quaternion group.
        let q = enumerate("gens: i j\nrel: i i i i\nrel: i i j^-1 j^-1\nrel: j^-1 i j i\n");
        assert_eq!(q.n_cosets(), 8);
    }

    #[test]
    fn overflow_on_infinite_index() {
        let f = parse_presentation_file("gens: a b\n").unwrap();
        let err = todd_coxeter(&f.presentation, &[], 50).unwrap_err();
        assert!(matches!(err, CosetError::Overflow { cap: 50, .. }));
        assert_eq!(todd_coxeter(&f.presentation, &[], 0).unwrap_err(), CosetError::ZeroCap);
    }

    #[test]
    fn alphabet_mismatch() {
        let f = parse_presentation_file("gens: a\nrel: a a\n").unwrap();
        let h = parse_word("b", None).unwrap();
        assert!(matches!(todd_coxeter(&f.presentation, &[h], 10), Err(CosetError::Word(_))));
    }

    #[test]
    fn deterministic_output() {
        let text = "gens: a b\nrel: a a\nrel: b b b\nrel: a b a b a b a b a b\nsub: a b\n";
        assert_eq!(enumerate(text), enumerate(text));
        assert_eq!(enumerate(text).to_tsv(), enumerate(text).to_tsv());
    }
}
