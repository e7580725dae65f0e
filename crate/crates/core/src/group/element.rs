use std::fmt;
use std::sync::Arc;

use super::field::SmallField;
use crate::error::{Error, Result};

/// A permutation (image list, 0-based) or a row-major matrix of field
/// element codes. Which one is determined by the owning [`Domain`].
///
/// The derived ordering is the canonical element order: permutations by image
/// tuple, matrices by row-major coefficient codes, both lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Box<[u16]>);

impl GroupElement {
    pub fn from_raw(data: Vec<u16>) -> Self {
        GroupElement(data.into_boxed_slice())
    }

    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Where elements live and how they multiply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Permutations of `{0, .., degree-1}`; the product `a·b` applies `a` first.
    Permutation { degree: usize },
    /// Invertible `dim × dim` matrices over a small field.
    Matrix { field: Arc<SmallField>, dim: usize },
}

impl Domain {
    pub fn permutations(degree: usize) -> Self {
        Domain::Permutation { degree }
    }

    pub fn matrices(field: Arc<SmallField>, dim: usize) -> Self {
        Domain::Matrix { field, dim }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn permutation(&self, images: &[usize]) -> Result<GroupElement> {
        let Domain::Permutation { degree } = self else {
            return Err(Error::InvalidGenerator("permutation given for a matrix domain".into()));
        };
        if images.len() != *degree {
            return Err(Error::InvalidGenerator(format!(
                "permutation has {} images, expected {degree}",
                images.len()
            )));
        }
        let mut seen = vec![false; *degree];
        for &x in images {
            if x >= *degree || seen[x] {
                return Err(Error::InvalidGenerator(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(GroupElement::from_raw(images.iter().map(|&x| x as u16).collect()))
    }

    /// Permutation from disjoint cycles in 1-based points, e.g. `[[1, 2, 3], [4, 5]]`.
    pub fn permutation_from_cycles(&self, cycles: &[&[usize]]) -> Result<GroupElement> {
        let Domain::Permutation { degree } = self else {
            return Err(Error::InvalidGenerator("permutation given for a matrix domain".into()));
        };
        let mut images: Vec<usize> = (0..*degree).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || y == 0 || x > *degree || y > *degree {
                    return Err(Error::InvalidGenerator(format!("point out of range in {cycle:?}")));
                }
                images[x - 1] = y - 1;
            }
        }
        self.permutation(&images)
    }

    /// Builds a matrix from row-major field element codes, checking invertibility.
    pub fn matrix(&self, entries: &[u16]) -> Result<GroupElement> {
        let Domain::Matrix { field, dim } = self else {
            return Err(Error::InvalidGenerator("matrix given for a permutation domain".into()));
        };
        if entries.len() != dim * dim {
            return Err(Error::InvalidGenerator(format!(
                "matrix has {} entries, expected {}",
                entries.len(),
                dim * dim
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&c| c >= field.order()) {
            return Err(Error::InvalidGenerator(format!("entry {bad} outside F_{}", field.order())));
        }
        let m = GroupElement::from_raw(entries.to_vec());
        if self.determinant(&m) == Some(0) {
            return Err(Error::InvalidGenerator("singular matrix".into()));
        }
        Ok(m)
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            Domain::Permutation { degree } => {
                GroupElement::from_raw((0..*degree as u16).collect())
            }
            Domain::Matrix { dim, .. } => {
                let mut data = vec![0u16; dim * dim];
                for i in 0..*dim {
                    data[i * dim + i] = 1;
                }
                GroupElement::from_raw(data)
            }
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match self {
            Domain::Permutation { .. } => {
                let bs = b.as_slice();
                GroupElement::from_raw(a.as_slice().iter().map(|&x| bs[x as usize]).collect())
            }
            Domain::Matrix { field, dim } => {
                let n = *dim;
                let (x, y) = (a.as_slice(), b.as_slice());
                let mut out = vec![0u16; n * n];
                for i in 0..n {
                    for k in 0..n {
                        let xik = x[i * n + k];
                        if xik == 0 {
                            continue;
                        }
                        for j in 0..n {
                            let t = field.mul(xik, y[k * n + j]);
                            out[i * n + j] = field.add(out[i * n + j], t);
                        }
                    }
                }
                GroupElement::from_raw(out)
            }
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        match self {
            Domain::Permutation { .. } => {
                let s = a.as_slice();
                let mut out = vec![0u16; s.len()];
                for (i, &x) in s.iter().enumerate() {
                    out[x as usize] = i as u16;
                }
                GroupElement::from_raw(out)
            }
            Domain::Matrix { field, dim } => {
                let n = *dim;
                let w = 2 * n;
                let mut rows: Vec<u16> = vec![0; n * w];
                for i in 0..n {
                    rows[i * w..i * w + n].copy_from_slice(&a.as_slice()[i * n..(i + 1) * n]);
                    rows[i * w + n + i] = 1;
                }
                for col in 0..n {
                    let pivot = (col..n)
                        .find(|&r| rows[r * w + col] != 0)
                        .expect("matrix in a group is invertible");
                    if pivot != col {
                        for j in 0..w {
                            rows.swap(pivot * w + j, col * w + j);
                        }
                    }
                    let inv = field.inv(rows[col * w + col]).unwrap();
                    for j in 0..w {
                        rows[col * w + j] = field.mul(rows[col * w + j], inv);
                    }
                    for r in 0..n {
                        if r == col || rows[r * w + col] == 0 {
                            continue;
                        }
                        let factor = field.neg(rows[r * w + col]);
                        for j in 0..w {
                            let t = field.mul(factor, rows[col * w + j]);
                            rows[r * w + j] = field.add(rows[r * w + j], t);
                        }
                    }
                }
                let mut out = vec![0u16; n * n];
                for i in 0..n {
                    out[i * n..(i + 1) * n].copy_from_slice(&rows[i * w + n..(i + 1) * w]);
                }
                GroupElement::from_raw(out)
            }
        }
    }

    /// Determinant of a matrix element; `None` in permutation domains.
    pub fn determinant(&self, a: &GroupElement) -> Option<u16> {
        let Domain::Matrix { field, dim } = self else {
            return None;
        };
        let n = *dim;
        let mut m = a.as_slice().to_vec();
        let mut det = 1u16;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return Some(0);
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = field.neg(det);
            }
            let piv = m[col * n + col];
            det = field.mul(det, piv);
            let inv = field.inv(piv).unwrap();
            for r in col + 1..n {
                if m[r * n + col] == 0 {
                    continue;
                }
                let factor = field.neg(field.mul(m[r * n + col], inv));
                for j in col..n {
                    let t = field.mul(factor, m[col * n + j]);
                    m[r * n + j] = field.add(m[r * n + j], t);
                }
            }
        }
        Some(det)
    }

    pub fn pow(&self, a: &GroupElement, mut k: u64) -> GroupElement {
        let mut acc = self.identity();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Least `m ≥ 1` with `a^m = 1`.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        let id = self.identity();
        let mut x = a.clone();
        let mut m = 1;
        while x != id {
            x = self.mul(&x, a);
            m += 1;
        }
        m
    }

    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let ai = self.inverse(a);
        let bi = self.inverse(b);
        self.mul(&self.mul(&ai, &bi), &self.mul(a, b))
    }

    /// `b^{-1} a b`.
    pub fn conjugate(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.mul(&self.mul(&self.inverse(b), a), b)
    }

    /// Cycle type of a permutation, parts in decreasing order (fixed points
    /// included as parts of size 1).
    pub fn cycle_type(&self, a: &GroupElement) -> Option<Vec<usize>> {
        let Domain::Permutation { degree } = self else {
            return None;
        };
        let s = a.as_slice();
        let mut seen = vec![false; *degree];
        let mut parts = Vec::new();
        for start in 0..*degree {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = s[x] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_product_applies_left_factor_first() {
        let d = Domain::permutations(3);
        let a = d.permutation_from_cycles(&[&[1, 2]]).unwrap();
        let b = d.permutation_from_cycles(&[&[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(d.mul(&a, &b).as_slice()[0], 2);
        assert_eq!(d.element_order(&d.mul(&a, &b)), 3);
        assert_eq!(d.cycle_type(&d.mul(&a, &b)), Some(vec![3]));
    }

    #[test]
    fn malformed_permutations_are_rejected() {
        let d = Domain::permutations(3);
        assert!(d.permutation(&[0, 0, 1]).is_err());
        assert!(d.permutation(&[0, 1]).is_err());
        assert!(d.permutation(&[0, 1, 3]).is_err());
    }

    #[test]
    fn matrix_inverse_and_singularity() {
        let f = SmallField::standard(3).unwrap();
        let d = Domain::matrices(f, 2);
        assert!(d.matrix(&[1, 2, 2, 1]).is_err());
        let g = d.matrix(&[0, 1, 1, 2]).unwrap();
        let gi = d.inverse(&g);
        assert_eq!(d.mul(&g, &gi), d.identity());
        // companion matrix of a primitive quadratic: a Singer cycle of order 8
        assert_eq!(d.element_order(&g), 8);
        assert_ne!(d.pow(&g, 4), d.identity());
        assert_eq!(d.pow(&g, 8), d.identity());
    }
}
