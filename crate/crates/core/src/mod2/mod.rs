//! Mod-2 homology model of the closed non-orientable surface `N_g`.
//!
//! `H_1(N_g; Z_2)` has basis `mu_1, ..., mu_g`, the cores of the crosscaps.
//! The intersection form is the identity Gram matrix in this basis, so a class
//! is two-sided exactly when it has even weight. Mapping classes act on
//! column vectors; a word `f g` acts as the matrix product `M(f) M(g)`, i.e.
//! the rightmost symbol acts first.

mod curves;
mod gf2;
mod mapping_class;
mod orthogonal;

use thiserror::Error;

pub use curves::{
    based_loop_word, boundary_classes_of_word, curve_class, neighborhood_boundary_classes,
    CurveSpec,
};
pub use gf2::{GF2Matrix, GF2Vector, MAX_DIM};
pub use mapping_class::{mod2_action, MappingClassSymbol, MappingClassWord};
pub use orthogonal::{group_closure, orthogonal_group_order, Closure, DEFAULT_CLOSURE_CAP, DEFAULT_GENUS_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("class {0} has odd self-intersection; Dehn twists need a two-sided curve")]
    OneSidedClass(GF2Vector),
    #[error("invalid indices in {symbol} for genus {genus}")]
    InvalidIndices { symbol: String, genus: usize },
    #[error("loop {0} is one-sided; its crosscap pushing map is a Y-homeomorphism, not a twist pair")]
    OneSidedLoop(String),
    #[error("curve {0} is not a loop based at a crosscap")]
    NotBased(String),
    #[error("genus {genus} exceeds the configured cap {cap}")]
    GenusCap { genus: usize, cap: usize },
    #[error("group closure exceeded {cap} elements")]
    ClosureCap { cap: usize },
    #[error("generator {0} is not orthogonal")]
    NotOrthogonal(usize),
    #[error("cannot parse mapping class token {0:?}")]
    Parse(String),
}

/// Intersection pairing `u . v` (identity Gram matrix).
pub fn intersection(u: &GF2Vector, v: &GF2Vector) -> Result<bool, HomologyError> {
    u.dot(v)
}

/// Mod-2 action `x -> x + (x.v) v` of the Dehn twist about a curve of class
/// `v`. Rejects classes with `v.v = 1`.
pub fn transvection(v: &GF2Vector) -> Result<GF2Matrix, HomologyError> {
    if v.dot(v)? {
        return Err(HomologyError::OneSidedClass(*v));
    }
    let g = v.len();
    // Row i of I + v v^T is e_i, plus v whenever v_i = 1.
    let rows = (0..g)
        .map(|i| {
            let e = 1u64 << i;
            if v.get(i) {
                e ^ v.bits()
            } else {
                e
            }
        })
        .collect();
    Ok(GF2Matrix::from_row_bits(g, rows))
}

/// All nonzero even-weight vectors of length `g`, in increasing bit order.
pub fn even_weight_classes(g: usize) -> Vec<GF2Vector> {
    GF2Vector::all(g).filter(|v| !v.is_zero() && v.weight() % 2 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_examples() {
        let mu1 = GF2Vector::unit(0, 3);
        let mu2 = GF2Vector::unit(1, 3);
        assert!(intersection(&mu1, &mu1).unwrap());
        assert!(!intersection(&mu1, &mu2).unwrap());
        let s = mu1.add(&mu2).unwrap();
        assert!(!intersection(&s, &s).unwrap());
    }

    #[test]
    fn transvection_of_e1_plus_e2_swaps() {
        let v = GF2Vector::from_slice(&[1, 1, 0]);
        let t = transvection(&v).unwrap();
        // Oracle: x -> x + (x.v) v on each basis vector.
        let expected_columns: Vec<GF2Vector> = (0..3)
            .map(|i| {
                let e = GF2Vector::unit(i, 3);
                if e.dot(&v).unwrap() {
                    e.add(&v).unwrap()
                } else {
                    e
                }
            })
            .collect();
        assert_eq!(t, GF2Matrix::from_columns(&expected_columns));
        assert_eq!(t, GF2Matrix::permutation(&[1, 0, 2]));
    }

    #[test]
    fn transvection_edge_cases() {
        assert!(transvection(&GF2Vector::zero(4)).unwrap().is_identity());
        assert!(matches!(
            transvection(&GF2Vector::unit(0, 3)),
            Err(HomologyError::OneSidedClass(_))
        ));
    }

    #[test]
    fn transvections_are_orthogonal_involutions() {
        for g in 1..=6 {
            for v in GF2Vector::all(g).filter(|v| v.weight() % 2 == 0) {
                let t = transvection(&v).unwrap();
                assert!(t.is_orthogonal(), "g={g} v={v}");
                assert!(t.mul(&t).unwrap().is_identity(), "g={g} v={v}");
            }
        }
    }
}
