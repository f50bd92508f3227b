//! Shaped tensors: elements of tensor products of coordinate spaces.
//!
//! A [`Tensor`] is a [`Vector`] together with the extents of its legs, using
//! the row-major flattening of [`flat_index`]. Leg operations (flip, general
//! permutation, embedding with unit legs, contraction) act on that flattening.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::linear::{flat_index, permute_legs, unflatten, Vector};
use crate::scalar::Scalar;

/// Errors raised by leg manipulations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// Leg indices or extents do not fit the tensor.
    ShapeMismatch(String),
    /// A leg index is out of range.
    LegOutOfRange(usize),
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            TensorError::LegOutOfRange(i) => write!(f, "leg {i} out of range"),
        }
    }
}

/// An element of `V₁ ⊗ … ⊗ Vₖ` with `dim Vᵢ = shape[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vector,
}

impl Tensor {
    /// Wraps a flat vector; its dimension must equal the product of the extents.
    pub fn new(shape: Vec<usize>, data: Vector) -> Result<Self, TensorError> {
        let total: usize = shape.iter().product();
        if shape.contains(&0) || total != data.dim() {
            return Err(TensorError::ShapeMismatch(alloc::format!(
                "extents {shape:?} do not match vector of dimension {}",
                data.dim()
            )));
        }
        Ok(Tensor { shape, data })
    }

    /// Builds a tensor from its dense row-major entries.
    pub fn from_dense(shape: Vec<usize>, entries: Vec<Scalar>) -> Result<Self, TensorError> {
        Tensor::new(shape, Vector::from_dense(entries))
    }

    /// The zero tensor of the given shape.
    pub fn zero(shape: Vec<usize>) -> Self {
        let total = shape.iter().product();
        Tensor { shape, data: Vector::zero(total) }
    }

    /// Leg extents.
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// The flattened coordinates.
    pub fn data(&self) -> &Vector {
        &self.data
    }

    /// Consumes the tensor, returning the flattened coordinates.
    pub fn into_data(self) -> Vector {
        self.data
    }

    /// Entry at a multi-index.
    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.data.get(flat_index(&self.shape, idx))
    }

    /// Dense row-major entries, zeros included.
    pub fn entries(&self) -> Vec<Scalar> {
        self.data.to_dense()
    }

    /// The tensor product `self ⊗ other`; the shape is the concatenation.
    pub fn tensor_product(&self, other: &Tensor) -> Tensor {
        let mut shape = self.shape.clone();
        shape.extend_from_slice(&other.shape);
        Tensor { shape, data: self.data.kron(&other.data) }
    }

    /// Reorders the legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<Tensor, TensorError> {
        let n = self.shape.len();
        let mut seen = alloc::vec![false; n];
        if perm.len() != n {
            return Err(TensorError::ShapeMismatch(alloc::format!("permutation of length {} for {n} legs", perm.len())));
        }
        for &p in perm {
            if p >= n {
                return Err(TensorError::LegOutOfRange(p));
            }
            if seen[p] {
                return Err(TensorError::ShapeMismatch(alloc::format!("leg {p} repeated")));
            }
            seen[p] = true;
        }
        let shape = perm.iter().map(|&p| self.shape[p]).collect();
        Ok(Tensor { shape, data: permute_legs(&self.shape, perm).apply(&self.data) })
    }

    /// Transposes legs `i` and `j`.
    pub fn flip(&self, i: usize, j: usize) -> Result<Tensor, TensorError> {
        let n = self.shape.len();
        for l in [i, j] {
            if l >= n {
                return Err(TensorError::LegOutOfRange(l));
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    /// Places `self` on the legs `legs` of a space with leg extents `ambient`,
    /// filling every other leg `k` with `fill[k]` (usually the unit of the
    /// algebra living on that leg). `legs` must be strictly increasing.
    pub fn leg_embed(&self, legs: &[usize], ambient: &[usize], fill: &[Vector]) -> Result<Tensor, TensorError> {
        if legs.len() != self.shape.len() || fill.len() != ambient.len() {
            return Err(TensorError::ShapeMismatch(String::from("leg list or fill list has the wrong length")));
        }
        if legs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TensorError::ShapeMismatch(String::from("legs must be strictly increasing")));
        }
        for (k, &l) in legs.iter().enumerate() {
            if l >= ambient.len() {
                return Err(TensorError::LegOutOfRange(l));
            }
            if ambient[l] != self.shape[k] {
                return Err(TensorError::ShapeMismatch(alloc::format!("leg {l} has extent {} not {}", ambient[l], self.shape[k])));
            }
        }
        // build (self ⊗ fills on the remaining legs), then move legs into place
        let others: Vec<usize> = (0..ambient.len()).filter(|l| !legs.contains(l)).collect();
        let mut t = self.clone();
        for &o in &others {
            if fill[o].dim() != ambient[o] {
                return Err(TensorError::ShapeMismatch(alloc::format!("fill for leg {o} has the wrong dimension")));
            }
            t = t.tensor_product(&Tensor { shape: alloc::vec![ambient[o]], data: fill[o].clone() });
        }
        // position of each ambient leg inside t
        let mut perm = alloc::vec![0; ambient.len()];
        for (k, &l) in legs.iter().enumerate() {
            perm[l] = k;
        }
        for (k, &o) in others.iter().enumerate() {
            perm[o] = legs.len() + k;
        }
        t.permute(&perm)
    }

    /// Contracts legs `i < j` of equal extent: `Σₖ t[…k…k…]`.
    pub fn contract(&self, i: usize, j: usize) -> Result<Tensor, TensorError> {
        let n = self.shape.len();
        if i >= j || j >= n {
            return Err(TensorError::LegOutOfRange(j));
        }
        if self.shape[i] != self.shape[j] {
            return Err(TensorError::ShapeMismatch(String::from("contracted legs differ in extent")));
        }
        let shape: Vec<usize> = (0..n).filter(|&l| l != i && l != j).map(|l| self.shape[l]).collect();
        let out_shape = if shape.is_empty() { alloc::vec![1] } else { shape.clone() };
        let mut data = Vector::zero(out_shape.iter().product());
        for (flat, c) in self.data.iter() {
            let idx = unflatten(&self.shape, flat);
            if idx[i] == idx[j] {
                let rest: Vec<usize> = (0..n).filter(|&l| l != i && l != j).map(|l| idx[l]).collect();
                let pos = if rest.is_empty() { 0 } else { flat_index(&shape, &rest) };
                data.add_term(pos, c);
            }
        }
        Ok(Tensor { shape: out_shape, data })
    }

    /// Canonical text form: a shape header followed by all entries.
    pub fn to_text(&self) -> String {
        let mut s = String::from("shape");
        for d in &self.shape {
            let _ = write!(s, " {d}");
        }
        s.push('\n');
        for (k, x) in self.entries().iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{x}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_tensor_product() {
        let a = Tensor::from_dense(alloc::vec![2], alloc::vec![Scalar::one(), Scalar::zero()]).unwrap();
        let b = Tensor::from_dense(alloc::vec![2], alloc::vec![Scalar::zero(), Scalar::one()]).unwrap();
        let t = a.tensor_product(&b);
        assert_eq!(t.shape(), &[2, 2]);
        assert_eq!(t.entries(), alloc::vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()]);
    }

    #[test]
    fn embedding_on_outer_legs_matches_flip_of_first_two() {
        // E₁₃ = (id ⊗ Σ)(E₁₂) for E ∈ V⊗W and a third leg carrying the unit
        let e = Tensor::from_dense(alloc::vec![2, 3], (0..6).map(Scalar::from_int).collect()).unwrap();
        let unit2 = Vector::from_dense(alloc::vec![Scalar::one(), Scalar::one()]);
        let unit3 = Vector::from_dense(alloc::vec![Scalar::one(); 3]);
        let fills = [Vector::zero(2), unit2.clone(), Vector::zero(3)];
        let e13 = e.leg_embed(&[0, 2], &[2, 2, 3], &fills).unwrap();
        let e12 = e.leg_embed(&[0, 1], &[2, 3, 2], &[Vector::zero(2), Vector::zero(3), unit2]).unwrap();
        assert_eq!(e13, e12.flip(1, 2).unwrap());
        assert_eq!(e.leg_embed(&[0, 1], &[2, 3], &[unit3.clone(), unit3]).unwrap(), e);
    }

    #[test]
    fn flip_is_involutive_and_checks_range() {
        let t = Tensor::from_dense(alloc::vec![2, 3], (0..6).map(Scalar::from_int).collect()).unwrap();
        assert_eq!(t.flip(0, 1).unwrap().flip(0, 1).unwrap(), t);
        assert_eq!(t.flip(0, 2), Err(TensorError::LegOutOfRange(2)));
    }
}
