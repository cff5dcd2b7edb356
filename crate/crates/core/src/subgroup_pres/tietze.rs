use std::collections::HashSet;

use crate::words::{Alphabet, GeneratorSymbol, Presentation, Word};

pub const DEFAULT_TIETZE_PASSES: usize = 20;
pub const DEFAULT_ELIMINATION_LENGTH: usize = 3;

/// Budget for [`tietze_simplify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TietzeEffort {
    pub passes: usize,
    /// Longest relator used to eliminate a generator.
    pub max_relator_length: usize,
}

impl Default for TietzeEffort {
    fn default() -> Self {
        Self { passes: DEFAULT_TIETZE_PASSES, max_relator_length: DEFAULT_ELIMINATION_LENGTH }
    }
}

/// Representative of `r` up to rotation and inversion.
fn canonical(r: &Word) -> Word {
    let inv = r.inverse();
    (0..r.len())
        .flat_map(|k| [r.rotate(k), inv.rotate(k)])
        .min()
        .unwrap_or_default()
}

fn normalize(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    relators
        .into_iter()
        .map(|r| r.cyclic_reduce())
        .filter(|r| !r.is_identity() && seen.insert(canonical(r)))
        .collect()
}

fn substitute(r: &Word, x: &GeneratorSymbol, value: &Word) -> Word {
    let value_inv = value.inverse();
    Word::free_reduce(r.letters().iter().flat_map(|l| {
        if &l.symbol == x {
            let v = if l.inverse { &value_inv } else { value };
            v.letters().to_vec()
        } else {
            vec![l.clone()]
        }
    }))
}

/// Finds a relator of length at most `limit` in which some generator occurs
/// exactly once. Shorter relators win; later generators are eliminated first.
fn find_elimination(relators: &[Word], alphabet: &Alphabet, limit: usize) -> Option<(usize, GeneratorSymbol, Word)> {
    let mut order: Vec<usize> = (0..relators.len()).filter(|&i| relators[i].len() <= limit).collect();
    order.sort_by_key(|&i| relators[i].len());
    for i in order {
        let r = &relators[i];
        for x in alphabet.symbols().iter().rev() {
            let positions: Vec<usize> = (0..r.len()).filter(|&k| &r.letters()[k].symbol == x).collect();
            if let [k] = positions[..] {
                // Rotate so r = x^e W; then x = W^-1 when e = +1, x = W when e = -1.
                let rotated = r.rotate(k);
                let rest = Word::free_reduce(rotated.letters()[1..].iter().cloned());
                let value = if rotated.letters()[0].inverse { rest } else { rest.inverse() };
                return Some((i, x.clone(), value));
            }
        }
    }
    None
}

/// Simplifies a presentation by removing trivial and duplicate relators and
/// eliminating generators defined by short relators. Every step is a Tietze
/// transformation, so the group is unchanged.
pub fn tietze_simplify(p: &Presentation, effort: TietzeEffort) -> Presentation {
    let mut symbols: Vec<GeneratorSymbol> = p.generators().to_vec();
    let mut relators = normalize(p.relators().to_vec());
    for _ in 0..effort.passes {
        let mut changed = false;
        loop {
            let alphabet = Alphabet::new(symbols.clone()).expect("subset of a valid alphabet");
            let Some((i, x, value)) = find_elimination(&relators, &alphabet, effort.max_relator_length) else {
                break;
            };
            relators.remove(i);
            relators = relators.iter().map(|r| substitute(r, &x, &value)).collect();
            symbols.retain(|s| s != &x);
            changed = true;
        }
        let before = relators.len();
        relators = normalize(relators);
        if !changed && relators.len() == before {
            break;
        }
    }
    let alphabet = Alphabet::new(symbols).expect("subset of a valid alphabet");
    Presentation::new(alphabet, relators).expect("relators use surviving generators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup_pres::abelianization;
    use crate::words::parse_presentation_file;

    fn simplify(text: &str) -> Presentation {
        let p = parse_presentation_file(text).unwrap().presentation;
        tietze_simplify(&p, TietzeEffort::default())
    }

    #[test]
    fn drops_dead_generator() {
        assert_eq!(simplify("gens: a b\nrel: b\nrel: a a\n").to_string(), "gens: a\nrel: a a\n");
    }

    #[test]
    fn substitutes_inverse() {
        assert_eq!(simplify("gens: a b\nrel: a b\n").to_string(), "gens: a\n");
    }

    #[test]
    fn dedupes_up_to_rotation_and_inverse() {
        let p = simplify("gens: a b\nrel: a b a b a b\nrel: b^-1 a^-1 b^-1 a^-1 b^-1 a^-1\nrel: b a b a b a\n");
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.num_generators(), 2);
    }

    #[test]
    fn long_relators_are_left_alone() {
        let p = simplify("gens: a b\nrel: a b a a a\n");
        assert_eq!(p.num_generators(), 2);
        let p = tietze_simplify(&p, TietzeEffort { passes: 20, max_relator_length: 5 });
        assert_eq!(p.num_generators(), 1);
    }

    #[test]
    fn preserves_abelianization() {
        let text = "gens: a b c d\nrel: a b c\nrel: c c d\nrel: a a a a\nrel: d b d^-1 b^-1\n";
        let p = parse_presentation_file(text).unwrap().presentation;
        let q = tietze_simplify(&p, TietzeEffort::default());
        assert!(q.num_generators() < 4);
        assert_eq!(abelianization(&p), abelianization(&q));
    }

    #[test]
    fn zero_budget_is_identity_on_generators() {
        let p = parse_presentation_file("gens: a b\nrel: a b\n").unwrap().presentation;
        assert_eq!(tietze_simplify(&p, TietzeEffort { passes: 0, max_relator_length: 3 }).num_generators(), 2);
    }
}
