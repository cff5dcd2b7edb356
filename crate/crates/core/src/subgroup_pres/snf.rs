use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::words::Presentation;

/// Rectangular matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let data = rows.iter().map(|r| r.iter().cloned().map(Into::into).collect()).collect();
        Self { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.data[i][j] = v.into();
    }

    pub fn transpose(&self) -> IntMatrix {
        let data = (0..self.cols).map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect()).collect();
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }
}

/// Diagonal of the Smith normal form: `invariant_factors[..rank]` are the
/// positive diagonal entries, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let delta = &q * &a[t][j];
                        a[i][j] -= delta;
                    }
                    dirty |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    dirty |= !a[t][j].is_zero();
                }
            }
            if !dirty {
                // Pivot row and column are clear; enforce divisibility.
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            // Move the smallest entry of row/column t to the pivot.
            let (bi, bj) = smallest_in_cross(&a, t);
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..t).map(|i| a[i][i].abs()).collect();
    SmithForm { rank: invariant_factors.len(), invariant_factors }
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let cells = (t..a.len()).map(|i| (i, t)).chain((t..a[t].len()).map(|j| (t, j)));
    for (i, j) in cells {
        let v = &a[i][j];
        if !v.is_zero() && (a[best.0][best.1].is_zero() || v.abs() < a[best.0][best.1].abs()) {
            best = (i, j);
        }
    }
    best
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}`
/// with `d_1 | d_2 | ... | d_k` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupDescription {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDescription {
    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        Self { free_rank, torsion: torsion.iter().map(|&d| BigInt::from(d)).collect() }
    }

    /// Dimension of `H ⊗ Z_2` over GF(2).
    pub fn mod2_dimension(&self) -> usize {
        let two = BigInt::from(2);
        self.free_rank + self.torsion.iter().filter(|d| d.is_multiple_of(&two)).count()
    }
}

impl fmt::Display for AbelianGroupDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

struct Factors<'a>(&'a [BigInt]);

impl Serialize for Factors<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for d in self.0 {
            match d.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for AbelianGroupDescription {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AbelianGroupDescription", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.serialize_field("torsion", &Factors(&self.torsion))?;
        s.end()
    }
}

/// Relation matrix of `p`: one row per relator, one column per generator,
/// entries are exponent sums.
pub fn exponent_sum_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.relators().len(), p.num_generators());
    for (i, r) in p.relators().iter().enumerate() {
        for (j, g) in p.generators().iter().enumerate() {
            m.set(i, j, r.exponent_sum(g));
        }
    }
    m
}

pub fn abelianization(p: &Presentation) -> AbelianGroupDescription {
    let snf = smith_normal_form(&exponent_sum_matrix(p));
    let torsion = snf.invariant_factors.into_iter().filter(|d| !d.is_one()).collect();
    AbelianGroupDescription { free_rank: p.num_generators() - snf.rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_presentation_file;
    use proptest::prelude::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        let snf = smith_normal_form(&IntMatrix::from_rows(rows));
        snf.invariant_factors.iter().map(|d| d.to_i64().unwrap()).collect()
    }

    fn gcd(a: i64, b: i64) -> i64 {
        a.gcd(&b)
    }

    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }

    /// Determinantal divisors: gcd of all k x k minors, for each k.
    fn minor_gcds(m: &[Vec<i64>]) -> Vec<i64> {
        let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
        (1..=r.min(c))
            .map(|k| {
                let mut g = 0;
                for rs in subsets(r, k) {
                    for cs in subsets(c, k) {
                        let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                        g = gcd(g, det(&sub));
                    }
                }
                g
            })
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(factors(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(factors(&[vec![2, 2]]), vec![2]);
        assert_eq!(factors(&[vec![2, 4], vec![0, 6]]), vec![2, 6]);
        assert_eq!(factors(&[vec![4, 0], vec![1, 3]]), vec![1, 12]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(smith_normal_form(&IntMatrix::zeros(0, 3)).rank, 0);
    }

    #[test]
    fn oracle_on_fixed_matrices() {
        let cases = [
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
            vec![vec![6, 10], vec![10, 15], vec![4, 6]],
            vec![vec![0, 3, 0], vec![2, 0, 0]],
        ];
        for m in cases {
            let d = factors(&m);
            let minors = minor_gcds(&m);
            let mut prod = 1;
            for (k, dk) in d.iter().enumerate() {
                prod *= dk;
                assert_eq!(prod, minors[k], "{m:?}");
            }
        }
    }

    #[test]
    fn abelianization_examples() {
        let free = parse_presentation_file("gens: x y\n").unwrap().presentation;
        assert_eq!(abelianization(&free), AbelianGroupDescription::new(2, &[]));
        let n3 = parse_presentation_file("gens: x1 x2 x3\nrel: x1 x1 x2 x2 x3 x3\n").unwrap().presentation;
        let h = abelianization(&n3);
        assert_eq!(h, AbelianGroupDescription::new(2, &[2]));
        assert_eq!(h.to_string(), "Z^2 ⊕ Z_2");
        assert_eq!(h.mod2_dimension(), 3);
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"free_rank":2,"torsion":[2]}"#);
        let klein = parse_presentation_file("gens: x y\nrel: x x y y\n").unwrap().presentation;
        assert_eq!(abelianization(&klein).to_string(), "Z^1 ⊕ Z_2");
        assert_eq!(AbelianGroupDescription::new(0, &[]).to_string(), "0");
    }

    #[test]
    fn big_entries_stay_exact() {
        let big = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        let mut m = IntMatrix::zeros(1, 1);
        m.set(0, 0, big.clone());
        assert_eq!(smith_normal_form(&m).invariant_factors, vec![big.clone()]);
        let h = AbelianGroupDescription { free_rank: 0, torsion: vec![big.clone()] };
        let json = serde_json::to_value(&h).unwrap();
        assert_eq!(json["torsion"][0], serde_json::Value::String(big.to_string()));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=3, 1usize..=3)
            .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn divisibility_chain_and_minors(m in small_matrix()) {
            let d = factors(&m);
            for w in d.windows(2) {
                prop_assert!(w[0] > 0 && w[1] % w[0] == 0);
            }
            let minors = minor_gcds(&m);
            let mut prod = 1;
            for (k, g) in minors.iter().enumerate() {
                if k < d.len() {
                    prod *= d[k];
                    prop_assert_eq!(prod, *g);
                } else {
                    prop_assert_eq!(*g, 0);
                }
            }
        }

        #[test]
        fn permutation_invariance(m in small_matrix(), seed in any::<u64>()) {
            let mut rows = m.clone();
            let n = rows.len();
            rows.rotate_left((seed as usize) % n);
            let c = rows[0].len();
            let shift = (seed as usize >> 8) % c;
            for r in rows.iter_mut() {
                r.rotate_left(shift);
                if seed & 1 == 1 && c > 1 {
                    r.swap(0, c - 1);
                }
            }
            prop_assert_eq!(factors(&m), factors(&rows));
            let t = IntMatrix::from_rows(&m).transpose();
            prop_assert_eq!(smith_normal_form(&t), smith_normal_form(&IntMatrix::from_rows(&m)));
        }
    }
}
