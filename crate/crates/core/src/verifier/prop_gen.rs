//! Generating sets of the two-sided subgroup of `pi_1(N_{g-1}^{(k)})` and the
//! word identities behind the second set.

use crate::words::{Alphabet, GeneratorSymbol, Letter, Presentation, Word};

use super::enumerate::wrap;
use super::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PropVariant {
    Gen1,
    Gen2,
}

fn x(i: usize) -> GeneratorSymbol {
    GeneratorSymbol::new(&format!("x{i}")).expect("valid generator name")
}

fn letter(i: usize, inverse: bool) -> Letter {
    Letter::new(x(i), inverse)
}

fn pair(a: usize, b: usize) -> Word {
    Word::free_reduce([letter(a, false), letter(b, false)])
}

fn check(g: usize, k: usize) -> Result<(), VerifyError> {
    if g < 3 {
        return Err(VerifyError::GenusTooSmall { genus: g, min: 3 });
    }
    if !(1..=g).contains(&k) {
        return Err(VerifyError::InvalidBase { k, genus: g });
    }
    Ok(())
}

/// `<x_i (i != k) | x_1^2 ... x_{k-1}^2 x_{k+1}^2 ... x_g^2>`.
pub fn pi1_presentation(g: usize, k: usize) -> Result<Presentation, VerifyError> {
    check(g, k)?;
    let indices: Vec<usize> = (1..=g).filter(|&i| i != k).collect();
    let alphabet = Alphabet::new(indices.iter().map(|&i| x(i)).collect())?;
    let relator = Word::free_reduce(indices.iter().flat_map(|&i| [letter(i, false), letter(i, false)]));
    Ok(Presentation::new(alphabet, vec![relator])?)
}

/// Consecutive pairs `x_{i+1} x_i`, `x_i x_{i+1}` for `i` up to `i_max`,
/// then the pair straddling the base crosscap.
fn consecutive_pairs(g: usize, k: usize, i_max: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 1..=i_max {
        if i == wrap(k as isize - 1, g) || i == k {
            continue;
        }
        let j = wrap(i as isize + 1, g);
        out.push(pair(j, i));
        out.push(pair(i, j));
    }
    let (prev, next) = (wrap(k as isize - 1, g), wrap(k as isize + 1, g));
    out.push(pair(next, prev));
    out.push(pair(prev, next));
    out
}

/// Base index of the square in both propositions: `x_2` when `k = 1`,
/// otherwise `x_1`.
fn square_index(k: usize) -> usize {
    if k == 1 {
        2
    } else {
        1
    }
}

/// First generating set: consecutive pairs for `i <= g - 1` and one square.
pub fn gen1(g: usize, k: usize) -> Result<Vec<Word>, VerifyError> {
    check(g, k)?;
    let mut out = consecutive_pairs(g, k, g - 1);
    let c = square_index(k);
    out.push(pair(c, c));
    Ok(out)
}

/// Extra generator of the second set for even `g - 1`, as `(c, s)` with
/// the generator `x_c x_s`. At `g = 3`, `k = 1` the index `s = 4` wraps to
/// the base crosscap; the square `x_2^2` is used in its place.
fn gen2_extra(g: usize, k: usize) -> (usize, usize) {
    let c = square_index(k);
    let s = wrap(if k <= 3 { 4 } else { 3 }, g);
    if s == k {
        (c, c)
    } else {
        (c, s)
    }
}

/// Second generating set: consecutive pairs for all `i` (mod g), plus one
/// extra pair when `g - 1` is even.
pub fn gen2(g: usize, k: usize) -> Result<Vec<Word>, VerifyError> {
    check(g, k)?;
    let mut out = consecutive_pairs(g, k, g);
    if (g - 1).is_multiple_of(2) {
        let (c, s) = gen2_extra(g, k);
        out.push(pair(c, s));
    }
    Ok(out)
}

/// Word identity `lhs = rhs` in `pi_1`, provable with at most `budget`
/// relator insertions, together with the factorization of `rhs` into
/// claimed generators or their inverses.
#[derive(Clone, Debug)]
pub struct WordIdentity {
    pub lhs: Word,
    pub rhs: Word,
    pub budget: usize,
    pub factors: Vec<Word>,
}

/// Available indices in cyclic order starting at the first one at or
/// after `start`.
fn cyclic_from(g: usize, k: usize, start: usize) -> Vec<usize> {
    (0..g).map(|d| wrap((start + d) as isize, g)).filter(|&i| i != k).collect()
}

/// Identities expressing `x_c^2` through the second generating set.
pub fn gen2_identity(g: usize, k: usize) -> Result<WordIdentity, VerifyError> {
    check(g, k)?;
    let c = square_index(k);
    let lhs = pair(c, c);
    if (g - 1) % 2 == 1 {
        // x_c^2 = x_c x_l1 . x_l1^-1 x_l2^-1 . x_l2 x_l3 ... x_l(m-1) x_c
        let list = cyclic_from(g, k, c);
        let m = list.len();
        let factors: Vec<Word> = (0..m)
            .map(|n| {
                let (a, b) = (list[n], list[(n + 1) % m]);
                if n % 2 == 0 {
                    pair(a, b)
                } else {
                    Word::free_reduce([letter(a, true), letter(b, true)])
                }
            })
            .collect();
        let rhs_letters: Vec<Letter> = factors.iter().flat_map(|f| f.letters().to_vec()).collect();
        return Ok(WordIdentity { lhs, rhs: Word::free_reduce(rhs_letters), budget: 0, factors });
    }
    // x_c^2 = x_c . (x_s^2 ... ) . x_c, where the bracket is a rotation of
    // the relator.
    let (_, s) = gen2_extra(g, k);
    let list = cyclic_from(g, k, s);
    let mut letters = vec![letter(c, false)];
    for &i in &list {
        letters.extend([letter(i, false), letter(i, false)]);
    }
    letters.push(letter(c, false));
    let factors = letters.chunks(2).map(|p| Word::free_reduce(p.iter().cloned())).collect();
    Ok(WordIdentity { lhs, rhs: Word::free_reduce(letters), budget: 1, factors })
}
