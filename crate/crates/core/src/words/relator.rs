use std::collections::HashSet;

use super::{Presentation, Word, WordError};

/// One inserted conjugate of the relator: rotation `rotation` of `r` (or of
/// `r^-1` when `inverted`) spliced in at letter `position` of the current
/// word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Insertion {
    pub position: usize,
    pub rotation: usize,
    pub inverted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelatorOutcome {
    /// `w1^-1 w2` reduces to the identity after these insertions.
    Equal { certificate: Vec<Insertion> },
    /// No certificate within the insertion budget. This is not a proof of
    /// inequality.
    BudgetExhausted,
}

impl RelatorOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, RelatorOutcome::Equal { .. })
    }
}

/// Decides whether `w1 = w2` follows from at most `max_insertions` uses of the
/// single relator of `p`, by exhaustive search over insertion positions and
/// cyclic rotations of `r^{±1}`.
pub fn equal_mod_relator(
    w1: &Word,
    w2: &Word,
    p: &Presentation,
    max_insertions: usize,
) -> Result<RelatorOutcome, WordError> {
    if p.relators().len() != 1 {
        return Err(WordError::RelatorCount(p.relators().len()));
    }
    p.alphabet().check(w1)?;
    p.alphabet().check(w2)?;

    let r = &p.relators()[0];
    let mut rotations: Vec<(usize, bool, Word)> = Vec::with_capacity(2 * r.len());
    for inverted in [false, true] {
        let base = if inverted { r.inverse() } else { r.clone() };
        for k in 0..base.len() {
            rotations.push((k, inverted, base.rotate(k)));
        }
    }

    let target = w1.inverse().concat(w2);
    let mut seen = HashSet::new();
    let mut path = Vec::new();
    if search(&target, &rotations, max_insertions, &mut seen, &mut path) {
        Ok(RelatorOutcome::Equal { certificate: path })
    } else {
        Ok(RelatorOutcome::BudgetExhausted)
    }
}

fn search(
    w: &Word,
    rotations: &[(usize, bool, Word)],
    budget: usize,
    seen: &mut HashSet<(Word, usize)>,
    path: &mut Vec<Insertion>,
) -> bool {
    if w.is_identity() {
        return true;
    }
    if budget == 0 || !seen.insert((w.clone(), budget)) {
        return false;
    }
    let letters = w.letters();
    for position in 0..=letters.len() {
        for (rotation, inverted, rot) in rotations {
            let candidate = Word::free_reduce(
                letters[..position]
                    .iter()
                    .chain(rot.letters())
                    .chain(&letters[position..])
                    .cloned(),
            );
            path.push(Insertion { position, rotation: *rotation, inverted: *inverted });
            if search(&candidate, rotations, budget - 1, seen, path) {
                return true;
            }
            path.pop();
        }
    }
    false
}
