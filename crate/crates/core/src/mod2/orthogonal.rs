use std::collections::{HashMap, VecDeque};

use super::{GF2Matrix, GF2Vector, HomologyError};

pub const DEFAULT_GENUS_CAP: usize = 6;
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 24;

/// Order of the group of `g x g` matrices over GF(2) preserving the identity
/// Gram form, counted as the number of ordered orthonormal bases.
pub fn orthogonal_group_order(g: usize, cap: usize) -> Result<u64, HomologyError> {
    if g > cap {
        return Err(HomologyError::GenusCap { genus: g, cap });
    }
    let units: Vec<GF2Vector> = GF2Vector::all(g).filter(|v| v.weight() % 2 == 1).collect();
    let mut chosen = Vec::with_capacity(g);
    Ok(count_extensions(g, &units, &mut chosen))
}

fn count_extensions(g: usize, units: &[GF2Vector], chosen: &mut Vec<GF2Vector>) -> u64 {
    if chosen.len() == g {
        return 1;
    }
    let mut total = 0;
    for v in units {
        if chosen.iter().all(|c| !c.dot(v).expect("same length")) {
            chosen.push(*v);
            total += count_extensions(g, units, chosen);
            chosen.pop();
        }
    }
    total
}

/// Finite matrix group generated by a list of orthogonal matrices.
#[derive(Clone, Debug)]
pub struct Closure {
    elements: Vec<GF2Matrix>,
    index: HashMap<GF2Matrix, usize>,
}

impl Closure {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in breadth-first discovery order, identity first.
    pub fn elements(&self) -> &[GF2Matrix] {
        &self.elements
    }

    pub fn contains(&self, m: &GF2Matrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn position(&self, m: &GF2Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Breadth-first closure under right multiplication by the generators.
pub fn group_closure(dim: usize, gens: &[GF2Matrix], cap: usize) -> Result<Closure, HomologyError> {
    for (i, m) in gens.iter().enumerate() {
        if m.dim() != dim {
            return Err(HomologyError::LengthMismatch { left: dim, right: m.dim() });
        }
        if !m.is_orthogonal() {
            return Err(HomologyError::NotOrthogonal(i));
        }
    }
    let identity = GF2Matrix::identity(dim);
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(n) = queue.pop_front() {
        for s in gens {
            let next = elements[n].mul_unchecked(s);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() >= cap {
                return Err(HomologyError::ClosureCap { cap });
            }
            index.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
        }
    }
    Ok(Closure { elements, index })
}
