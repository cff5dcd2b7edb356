//! Generating sets of the level 2 twist subgroup, transcribed from their
//! index ranges with indices reduced mod g into `1..=g`.

use crate::mod2::{MappingClassSymbol, MappingClassWord};

use super::VerifyError;

pub(crate) fn wrap(i: isize, g: usize) -> usize {
    (i - 1).rem_euclid(g as isize) as usize + 1
}

fn require_genus(g: usize, min: usize) -> Result<(), VerifyError> {
    if g < min {
        Err(VerifyError::GenusTooSmall { genus: g, min })
    } else {
        Ok(())
    }
}

fn distinct(k: usize, i: usize, j: usize) -> bool {
    k != i && k != j && i != j
}

/// Type (i) pushing maps `a_{k;i,i+1}, b_{k;i,i+1}` for `i` in `i_max`
/// range, then `a_{k;k-1,k+1}, b_{k;k-1,k+1}`, for each `k`.
fn consecutive_pushes(g: usize, i_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 1..=g {
        for i in 1..=i_max {
            if i == wrap(k as isize - 1, g) || i == k {
                continue;
            }
            out.push((k, i, wrap(i as isize + 1, g)));
        }
        out.push((k, wrap(k as isize - 1, g), wrap(k as isize + 1, g)));
    }
    out
}

fn push_pair(out: &mut Vec<MappingClassWord>, (k, i, j): (usize, usize, usize)) {
    out.push(MappingClassWord::single(MappingClassSymbol::push_a(k, i, j), 1));
    out.push(MappingClassWord::single(MappingClassSymbol::push_b(k, i, j), 1));
}

fn twist_squares(g: usize) -> Vec<MappingClassWord> {
    let mut out = Vec::new();
    for j in 2..=g {
        for k in j + 1..=g {
            for l in k + 1..=g {
                out.push(MappingClassWord::single(MappingClassSymbol::twist(&[1, j, k, l]), 2));
            }
        }
    }
    out
}

/// At genus 3 every pushing map along a two-sided loop is `T_{i,j}^{±2}`,
/// so the list collapses to the three squared twists.
fn genus_three_set() -> Vec<MappingClassWord> {
    [(1, 2), (1, 3), (2, 3)]
        .into_iter()
        .map(|(i, j)| MappingClassWord::single(MappingClassSymbol::twist(&[i, j]), 2))
        .collect()
}

/// Squared twists `T_{i,j}^2` for the index pairs of valid pushing maps.
fn collapse_to_twists(pushes: &[(usize, usize, usize)]) -> Vec<MappingClassWord> {
    let mut pairs: Vec<(usize, usize)> =
        pushes.iter().filter(|(k, i, j)| distinct(*k, *i, *j)).map(|&(_, i, j)| (i.min(j), i.max(j))).collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
        .into_iter()
        .map(|(i, j)| MappingClassWord::single(MappingClassSymbol::twist(&[i, j]), 2))
        .collect()
}

/// Pushing maps `a_{1;2,4}`, `b_{2;1,4}`, `b_{3;1,4}`, `a_{l;1,3}` for odd
/// genus, as `(is_a, k, i, j)`.
fn odd_extras(g: usize) -> Vec<(bool, usize, usize, usize)> {
    let w = |i: usize| wrap(i as isize, g);
    let mut out = vec![(true, 1, 2, w(4)), (false, 2, 1, w(4)), (false, 3, 1, w(4))];
    out.extend((4..=g).map(|l| (true, l, 1, 3)));
    out
}

/// Generators of the first theorem: types (i), (ii) for odd `g`, (iii).
pub fn enumerate_mainthm(g: usize) -> Result<Vec<MappingClassWord>, VerifyError> {
    require_genus(g, 3)?;
    let pushes = consecutive_pushes(g, g);
    if g == 3 {
        let collapsed = collapse_to_twists(&pushes);
        debug_assert_eq!(collapsed, genus_three_set());
        return Ok(collapsed);
    }
    let mut out = Vec::new();
    for p in pushes {
        push_pair(&mut out, p);
    }
    if g % 2 == 1 {
        for (is_a, k, i, j) in odd_extras(g) {
            let s = if is_a { MappingClassSymbol::push_a(k, i, j) } else { MappingClassSymbol::push_b(k, i, j) };
            out.push(MappingClassWord::single(s, 1));
        }
    }
    out.extend(twist_squares(g));
    Ok(out)
}

/// Closed-form generator count of the first theorem.
pub fn mainthm_formula(g: usize) -> usize {
    match g {
        3 => 3,
        g if g % 2 == 1 => (g * g * g + 6 * g * g + 5 * g - 6) / 6,
        g => (g * g * g + 6 * g * g - g - 6) / 6,
    }
}

/// Literal enumeration of the second theorem with its stated count.
#[derive(Clone, Debug)]
pub struct Mainthm2Enumeration {
    pub words: Vec<MappingClassWord>,
    /// Size of the literal index ranges, before any genus-3 collapse.
    pub literal_count: usize,
    pub formula_count: usize,
}

pub fn mainthm2_formula(g: usize) -> usize {
    if g == 3 {
        3
    } else {
        (g * g * g + 6 * g * g - 7 * g - 12) / 6
    }
}

/// Generators of the second theorem: type (i) with `i <= g - 1`,
/// `Y_{1,j}^2`, and `T_{1,j,k,l}^2`.
pub fn enumerate_mainthm2(g: usize) -> Result<Mainthm2Enumeration, VerifyError> {
    require_genus(g, 3)?;
    let pushes = consecutive_pushes(g, g - 1);
    let mut literal = Vec::new();
    for &p in &pushes {
        push_pair(&mut literal, p);
    }
    for j in 2..=g {
        literal.push(MappingClassWord::single(MappingClassSymbol::Y(1, j), 2));
    }
    literal.extend(twist_squares(g));
    let literal_count = literal.len();
    let words = if g == 3 { genus_three_set() } else { literal };
    Ok(Mainthm2Enumeration { words, literal_count, formula_count: mainthm2_formula(g) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn wrap_indices() {
        assert_eq!(wrap(0, 5), 5);
        assert_eq!(wrap(6, 5), 1);
        assert_eq!(wrap(-1, 5), 4);
        assert_eq!(wrap(3, 5), 3);
    }

    #[test]
    fn mainthm_counts_match_type_tally() {
        // 2g^2 - 2g pushing maps of type (i), g more for odd g, C(g-1, 3) squared twists.
        for g in 4..=10 {
            let n = enumerate_mainthm(g).unwrap().len();
            let odd = if g % 2 == 1 { g } else { 0 };
            assert_eq!(n, 2 * g * g - 2 * g + odd + binom(g - 1, 3), "g={g}");
            assert_eq!(n, mainthm_formula(g), "g={g}");
        }
        assert_eq!(enumerate_mainthm(3).unwrap().len(), 3);
        assert_eq!(enumerate_mainthm(4).unwrap().len(), 25);
        assert_eq!(enumerate_mainthm(5).unwrap().len(), 49);
        assert!(enumerate_mainthm(2).is_err());
    }

    #[test]
    fn mainthm_has_no_duplicates() {
        for g in 4..=10 {
            let words = enumerate_mainthm(g).unwrap();
            let mut sorted = words.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), words.len(), "g={g}");
        }
    }

    #[test]
    fn mainthm_symbols_are_valid() {
        for g in 3..=9 {
            for w in enumerate_mainthm(g).unwrap() {
                w.validate(g).unwrap();
            }
        }
    }

    #[test]
    fn mainthm2_literal_count() {
        let e = enumerate_mainthm2(4).unwrap();
        assert_eq!((e.literal_count, e.formula_count), (24, 20));
        for g in 4..=10 {
            let e = enumerate_mainthm2(g).unwrap();
            assert_eq!(e.literal_count, 2 * (g - 2) * (g - 1) + 2 * g + (g - 1) + binom(g - 1, 3));
            assert_eq!(e.literal_count, e.formula_count + 4);
            for w in &e.words {
                w.validate(g).unwrap();
            }
        }
        let e3 = enumerate_mainthm2(3).unwrap();
        assert_eq!((e3.words.len(), e3.formula_count), (3, 3));
    }

    #[test]
    fn genus_three_collapse() {
        let names: Vec<String> = enumerate_mainthm(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["T1,2^2", "T1,3^2", "T2,3^2"]);
    }
}
