//! Bit-packed vectors and square matrices over GF(2). Dimensions up to 64.

use std::fmt;

use serde::{Serialize, Serializer};

use super::HomologyError;

pub const MAX_DIM: usize = 64;

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Vector over GF(2); bit `i` is the coefficient of basis vector `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GF2Vector {
    bits: u64,
    len: usize,
}

impl GF2Vector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_DIM, "dimension {len} exceeds {MAX_DIM}");
        Self { bits: 0, len }
    }

    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_DIM, "dimension {len} exceeds {MAX_DIM}");
        Self { bits: bits & mask(len), len }
    }

    /// Basis vector `e_i` (0-based).
    pub fn unit(i: usize, len: usize) -> Self {
        assert!(i < len);
        Self::from_bits(1 << i, len)
    }

    pub fn from_slice(entries: &[u8]) -> Self {
        let bits = entries
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (u64::from(b & 1) << i));
        Self::from_bits(bits, entries.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn add(&self, other: &GF2Vector) -> Result<GF2Vector, HomologyError> {
        self.same_len(other)?;
        Ok(Self { bits: self.bits ^ other.bits, len: self.len })
    }

    /// Standard dot product mod 2.
    pub fn dot(&self, other: &GF2Vector) -> Result<bool, HomologyError> {
        self.same_len(other)?;
        Ok((self.bits & other.bits).count_ones() % 2 == 1)
    }

    fn same_len(&self, other: &GF2Vector) -> Result<(), HomologyError> {
        if self.len != other.len {
            return Err(HomologyError::LengthMismatch { left: self.len, right: other.len });
        }
        Ok(())
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    /// All vectors of length `len`, in increasing bit order.
    pub fn all(len: usize) -> impl Iterator<Item = GF2Vector> {
        assert!(len < MAX_DIM);
        (0..1u64 << len).map(move |b| GF2Vector::from_bits(b, len))
    }
}

impl fmt::Display for GF2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Square matrix over GF(2) acting on column vectors. Row `i` stores the
/// entries `M[i][j]` in bit `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GF2Matrix {
    dim: usize,
    rows: Vec<u64>,
}

impl GF2Matrix {
    pub fn identity(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Self { dim, rows: (0..dim).map(|i| 1u64 << i).collect() }
    }

    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Self { dim, rows: vec![0; dim] }
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self { dim, rows: rows.iter().map(|r| GF2Vector::from_slice(r).bits()).collect() }
    }

    pub fn from_row_bits(dim: usize, rows: Vec<u64>) -> Self {
        assert_eq!(rows.len(), dim);
        let m = mask(dim);
        Self { dim, rows: rows.into_iter().map(|r| r & m).collect() }
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[GF2Vector]) -> Self {
        let dim = columns.len();
        let mut rows = vec![0u64; dim];
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), dim);
            for (i, row) in rows.iter_mut().enumerate() {
                if c.get(i) {
                    *row |= 1 << j;
                }
            }
        }
        Self { dim, rows }
    }

    /// Permutation matrix sending `e_i` to `e_{perm[i]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let dim = perm.len();
        Self::from_columns(&perm.iter().map(|&p| GF2Vector::unit(p, dim)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn row_bits(&self) -> &[u64] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> GF2Vector {
        let bits = self
            .rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, r)| acc | ((r >> j & 1) << i));
        GF2Vector::from_bits(bits, self.dim)
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == 1 << i)
    }

    pub fn mul(&self, other: &GF2Matrix) -> Result<GF2Matrix, HomologyError> {
        if self.dim != other.dim {
            return Err(HomologyError::LengthMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &GF2Matrix) -> GF2Matrix {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u64;
                let mut bits = r;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    acc ^= other.rows[j];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        GF2Matrix { dim: self.dim, rows }
    }

    pub fn apply(&self, v: &GF2Vector) -> Result<GF2Vector, HomologyError> {
        if self.dim != v.len() {
            return Err(HomologyError::LengthMismatch { left: self.dim, right: v.len() });
        }
        let bits = self
            .rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, r)| acc | (u64::from((r & v.bits()).count_ones() % 2) << i));
        Ok(GF2Vector::from_bits(bits, self.dim))
    }

    pub fn transpose(&self) -> GF2Matrix {
        GF2Matrix::from_columns(
            &self.rows.iter().map(|&r| GF2Vector::from_bits(r, self.dim)).collect::<Vec<_>>(),
        )
    }

    /// `M^T M = I`: the columns are orthonormal for the standard dot product.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul_unchecked(self).is_identity()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.dim {
            let Some(p) = (rank..self.dim).find(|&r| rows[r] >> col & 1 == 1) else { continue };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> col & 1 == 1 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Option<GF2Matrix> {
        let mut a = self.rows.clone();
        let mut inv = GF2Matrix::identity(self.dim).rows;
        for col in 0..self.dim {
            let p = (col..self.dim).find(|&r| a[r] >> col & 1 == 1)?;
            a.swap(col, p);
            inv.swap(col, p);
            for r in 0..self.dim {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(GF2Matrix { dim: self.dim, rows: inv })
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, exponent: i64) -> Option<GF2Matrix> {
        let base = if exponent < 0 { self.inverse()? } else { self.clone() };
        let mut result = GF2Matrix::identity(self.dim);
        let mut sq = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&sq);
            }
            sq = sq.mul_unchecked(&sq);
            e >>= 1;
        }
        Some(result)
    }

    /// Rows rendered as `0`/`1` strings.
    pub fn to_row_strings(&self) -> Vec<String> {
        self.rows.iter().map(|&r| GF2Vector::from_bits(r, self.dim).to_string()).collect()
    }
}

impl Serialize for GF2Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_row_strings().serialize(serializer)
    }
}

impl fmt::Display for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_row_strings().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str(row)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_add() {
        let e1 = GF2Vector::unit(0, 3);
        let e2 = GF2Vector::unit(1, 3);
        assert!(e1.dot(&e1).unwrap());
        assert!(!e1.dot(&e2).unwrap());
        let s = e1.add(&e2).unwrap();
        assert!(!s.dot(&s).unwrap());
        assert!(e1.dot(&GF2Vector::unit(0, 4)).is_err());
    }

    #[test]
    fn matrix_vector_products() {
        let m = GF2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let v = GF2Vector::from_slice(&[0, 1, 0]);
        assert_eq!(m.apply(&v).unwrap(), GF2Vector::from_slice(&[1, 1, 0]));
        assert_eq!(m.mul(&m).unwrap(), GF2Matrix::identity(3));
        assert_eq!(m.column(1), GF2Vector::from_slice(&[1, 1, 0]));
        assert!(m.transpose().get(1, 0));
    }

    #[test]
    fn inverse_and_rank() {
        let t = GF2Matrix::from_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(t.inverse().unwrap(), t);
        let singular = GF2Matrix::from_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(singular.rank(), 1);
        assert!(singular.inverse().is_none());
        let st = GF2Matrix::from_rows(&[&[0, 1], &[1, 1]]);
        assert!(st.pow(3).unwrap().is_identity());
        assert_eq!(st.pow(-1).unwrap().mul(&st).unwrap(), GF2Matrix::identity(2));
    }

    #[test]
    fn permutation_matrix() {
        let p = GF2Matrix::permutation(&[1, 2, 0]);
        assert_eq!(p.apply(&GF2Vector::unit(0, 3)).unwrap(), GF2Vector::unit(1, 3));
        assert!(p.is_orthogonal());
        assert!(p.pow(3).unwrap().is_identity());
    }

    #[test]
    fn row_strings() {
        let m = GF2Matrix::from_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.to_row_strings(), vec!["01", "10"]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"["01","10"]"#);
    }
}
