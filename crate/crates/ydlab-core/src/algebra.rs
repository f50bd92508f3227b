//! Finite-dimensional unital algebras with optional involution, given by
//! structure constants, and their tensor products.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::linear::{flat_index, unflatten, LinearMap, Vector};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// A conjugate-linear map `x ↦ x*`, stored by the images of basis vectors:
/// `(Σ cᵢ eᵢ)* = Σ conj(cᵢ) eᵢ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Star {
    images: Vec<Vector>,
}

impl Star {
    /// A star given by the images of the basis vectors.
    pub fn new(images: Vec<Vector>) -> Self {
        Star { images }
    }

    /// A star given by a linear map on basis vectors (conjugation of coefficients is implicit).
    pub fn from_map(map: &LinearMap) -> Self {
        Star { images: map.columns().to_vec() }
    }

    /// The linear map on basis vectors underlying the star.
    pub fn matrix(&self) -> LinearMap {
        let n = self.images.len();
        LinearMap::from_columns(n, self.images.clone())
    }

    /// Applies the star.
    pub fn apply(&self, x: &Vector) -> Vector {
        let mut out = Vector::zero(self.images.len());
        for (i, c) in x.iter() {
            out.add_scaled(&c.conj(), &self.images[i]);
        }
        out
    }

    /// The star of basis vector `i`.
    pub fn image(&self, i: usize) -> &Vector {
        &self.images[i]
    }
}

/// Operations shared by concrete algebras and lazily evaluated tensor products.
pub trait AlgebraOps {
    /// Dimension.
    fn dim(&self) -> usize;
    /// Product `xy`.
    fn mul(&self, x: &Vector, y: &Vector) -> Vector;
    /// Unit element.
    fn unit(&self) -> Vector;
    /// Involution, when the algebra carries one.
    fn star_of(&self, x: &Vector) -> Option<Vector>;

    /// Product of several elements, left to right.
    fn mul_all(&self, xs: &[&Vector]) -> Vector {
        let mut acc = self.unit();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Two-sided inverse of `u`, when it exists.
    fn inverse(&self, u: &Vector) -> Option<Vector> {
        let n = self.dim();
        let left = LinearMap::from_fn(n, n, |j| self.mul(u, &Vector::basis(n, j)));
        let z = crate::linear::sparse_solve_many(&left, &[self.unit()]).ok()?.pop()?;
        (self.mul(&z, u) == self.unit()).then_some(z)
    }

    /// The conjugation `x ↦ w x w⁻¹` as a linear map, given `w` and `w⁻¹`.
    fn conjugation(&self, w: &Vector, w_inv: &Vector) -> LinearMap {
        let n = self.dim();
        LinearMap::from_fn(n, n, |j| self.mul(&self.mul(w, &Vector::basis(n, j)), w_inv))
    }
}

/// A unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    table: Vec<Vector>,
    unit: Vector,
    star: Option<Star>,
}

impl Algebra {
    /// Builds an algebra from basis labels, the products of basis pairs
    /// (`table[i * dim + j] = eᵢ eⱼ`) and the unit element.
    pub fn new(labels: Vec<String>, table: Vec<Vector>, unit: Vector) -> Self {
        let n = labels.len();
        assert!(n >= 1, "an algebra needs a nonempty basis");
        assert_eq!(table.len(), n * n, "multiplication table has the wrong size");
        assert!(table.iter().all(|v| v.dim() == n) && unit.dim() == n, "element dimension mismatch");
        Algebra { labels, table, unit, star: None }
    }

    /// Builds an algebra from a closure giving `eᵢ eⱼ`.
    pub fn from_fn<F: FnMut(usize, usize) -> Vector>(labels: Vec<String>, mut f: F, unit: Vector) -> Self {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        Algebra::new(labels, table, unit)
    }

    /// Builds an algebra from a dense structure tensor `m[k][i][j]` (coefficient of
    /// `e_k` in `eᵢ eⱼ`) and a unit vector.
    pub fn from_structure_tensor(labels: Vec<String>, mult: &Tensor, unit: Vector) -> Self {
        let n = labels.len();
        assert_eq!(mult.shape(), &[n, n, n], "structure tensor shape");
        Algebra::from_fn(labels, |i, j| Vector::from_pairs(n, (0..n).map(|k| (k, mult.get(&[k, i, j])))), unit)
    }

    /// Attaches an involution.
    pub fn with_star(mut self, star: Star) -> Self {
        assert_eq!(star.images.len(), self.dim(), "star dimension mismatch");
        self.star = Some(star);
        self
    }

    /// Removes the involution.
    pub fn without_star(mut self) -> Self {
        self.star = None;
        self
    }

    /// Basis labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of basis vector `i`.
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The product `eᵢ eⱼ` of two basis vectors.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.labels.len() + j]
    }

    /// The involution, if any.
    pub fn star(&self) -> Option<&Star> {
        self.star.as_ref()
    }

    /// The structure tensor `m[k][i][j]`.
    pub fn mult_tensor(&self) -> Tensor {
        let n = self.dim();
        let mut data = Vector::zero(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j).iter() {
                    data.add_term(flat_index(&[n, n, n], &[k, i, j]), c);
                }
            }
        }
        Tensor::new(alloc::vec![n, n, n], data).expect("consistent shape")
    }

    /// The multiplication map `A⊗A → A`.
    pub fn mult_map(&self) -> LinearMap {
        let n = self.dim();
        LinearMap::from_columns(n, self.table.clone())
    }

    /// Left multiplication by `x`.
    pub fn left_mult(&self, x: &Vector) -> LinearMap {
        let n = self.dim();
        LinearMap::from_fn(n, n, |j| self.mul(x, &Vector::basis(n, j)))
    }

    /// The opposite algebra: same basis, reversed products, same involution.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mut a = Algebra::from_fn(self.labels.clone(), |i, j| self.table[j * n + i].clone(), self.unit.clone());
        a.star = self.star.clone();
        a
    }

    /// Relabels the basis.
    pub fn relabeled(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    /// True when all basis products commute.
    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i * n + j] == self.table[j * n + i]))
    }

    /// Verifies associativity, the two-sided unit, non-degeneracy and, when an
    /// involution is present, that it is an anti-multiplicative involution.
    pub fn check(&self, subject: &str) -> Report {
        let mut r = Report::new(subject);
        let n = self.dim();
        let mut assoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                for k in 0..n {
                    let lhs = self.mul(ij, &Vector::basis(n, k));
                    let rhs = self.mul(&Vector::basis(n, i), self.mul_basis(j, k));
                    if lhs != rhs {
                        assoc = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        match assoc {
            None => r.pass("associativity"),
            Some((i, j, k)) => r.fail(
                "associativity",
                format!("({} {}) {} differs from {} ({} {})", self.label(i), self.label(j), self.label(k), self.label(i), self.label(j), self.label(k)),
            ),
        }
        let bad_unit = (0..n).find(|&i| {
            let e = Vector::basis(n, i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        });
        match bad_unit {
            None => r.pass("unit"),
            Some(i) => r.fail("unit", format!("unit fails on {}", self.label(i))),
        }
        // with a two-sided unit, x ↦ (y ↦ xy) is injective, which is non-degeneracy
        r.record("non-degeneracy", bad_unit.is_none(), "no two-sided unit");
        if let Some(st) = &self.star {
            let bad = (0..n).find(|&i| st.apply(st.image(i)) != Vector::basis(n, i));
            match bad {
                None => r.pass("star involutive"),
                Some(i) => r.fail("star involutive", format!("(x*)* differs from x for {}", self.label(i))),
            }
            let mut anti = None;
            'anti: for i in 0..n {
                for j in 0..n {
                    let lhs = st.apply(self.mul_basis(i, j));
                    let rhs = self.mul(st.image(j), st.image(i));
                    if lhs != rhs {
                        anti = Some((i, j));
                        break 'anti;
                    }
                }
            }
            match anti {
                None => r.pass("star anti-multiplicative"),
                Some((i, j)) => r.fail(
                    "star anti-multiplicative",
                    format!("(xy)* differs from y*x* for x={}, y={}", self.label(i), self.label(j)),
                ),
            }
        }
        r
    }
}

impl AlgebraOps for Algebra {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        assert!(x.dim() == n && y.dim() == n, "multiplying elements of the wrong dimension");
        let mut out = Vector::zero(n);
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&(a * b), &self.table[i * n + j]);
            }
        }
        out
    }

    fn unit(&self) -> Vector {
        self.unit.clone()
    }

    fn star_of(&self, x: &Vector) -> Option<Vector> {
        self.star.as_ref().map(|s| s.apply(x))
    }
}

/// The tensor product of several algebras, evaluated factorwise without
/// materializing its structure constants.
#[derive(Clone, Debug)]
pub struct TensorAlgebra<'a> {
    factors: Vec<&'a Algebra>,
    dims: Vec<usize>,
}

impl<'a> TensorAlgebra<'a> {
    /// The tensor product `A₁ ⊗ … ⊗ Aₖ`.
    pub fn new(factors: Vec<&'a Algebra>) -> Self {
        let dims = factors.iter().map(|a| a.dim()).collect();
        TensorAlgebra { factors, dims }
    }

    /// Leg extents.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The pure tensor `x₁ ⊗ … ⊗ xₖ`.
    pub fn pure(&self, parts: &[&Vector]) -> Vector {
        let mut acc = Vector::basis(1, 0);
        for p in parts {
            acc = acc.kron(p);
        }
        acc
    }

    /// Places an element of the tensor product of the factors listed in `legs`
    /// (strictly increasing) into the full product, with units elsewhere.
    pub fn embed(&self, x: &Vector, legs: &[usize]) -> Vector {
        let sub_dims: Vec<usize> = legs.iter().map(|&l| self.dims[l]).collect();
        let t = Tensor::new(sub_dims, x.clone()).expect("element matches the listed legs");
        let fills: Vec<Vector> = self.factors.iter().map(|a| a.unit()).collect();
        t.leg_embed(legs, &self.dims, &fills).expect("valid legs").into_data()
    }
}

impl AlgebraOps for TensorAlgebra<'_> {
    fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim());
        let xs: Vec<(Vec<usize>, &Scalar)> = x.iter().map(|(i, c)| (unflatten(&self.dims, i), c)).collect();
        let ys: Vec<(Vec<usize>, &Scalar)> = y.iter().map(|(i, c)| (unflatten(&self.dims, i), c)).collect();
        for (ix, a) in &xs {
            for (iy, b) in &ys {
                let mut prod = Vector::basis(1, 0);
                for (k, alg) in self.factors.iter().enumerate() {
                    prod = prod.kron(alg.mul_basis(ix[k], iy[k]));
                    if prod.is_zero() {
                        break;
                    }
                }
                if !prod.is_zero() {
                    out.add_scaled(&(*a * *b), &prod);
                }
            }
        }
        out
    }

    fn unit(&self) -> Vector {
        let units: Vec<Vector> = self.factors.iter().map(|a| a.unit()).collect();
        let refs: Vec<&Vector> = units.iter().collect();
        self.pure(&refs)
    }

    fn star_of(&self, x: &Vector) -> Option<Vector> {
        let stars: Option<Vec<&Star>> = self.factors.iter().map(|a| a.star()).collect();
        let stars = stars?;
        let mut out = Vector::zero(self.dim());
        for (i, c) in x.iter() {
            let idx = unflatten(&self.dims, i);
            let mut img = Vector::basis(1, 0);
            for (k, s) in stars.iter().enumerate() {
                img = img.kron(s.image(idx[k]));
            }
            out.add_scaled(&c.conj(), &img);
        }
        Some(out)
    }
}

/// Materializes the tensor product of two algebras (stars are combined factorwise).
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Algebra {
    let (n, m) = (a.dim(), b.dim());
    let mut labels = Vec::with_capacity(n * m);
    for i in 0..n {
        for j in 0..m {
            labels.push(format!("{}(x){}", a.label(i), b.label(j)));
        }
    }
    let t = TensorAlgebra::new(alloc::vec![a, b]);
    let alg = Algebra::from_fn(
        labels,
        |p, q| t.mul(&Vector::basis(n * m, p), &Vector::basis(n * m, q)),
        a.unit().kron(&b.unit()),
    );
    match (a.star(), b.star()) {
        (Some(sa), Some(sb)) => {
            let mut images = Vec::with_capacity(n * m);
            for i in 0..n {
                for j in 0..m {
                    images.push(sa.image(i).kron(sb.image(j)));
                }
            }
            alg.with_star(Star::new(images))
        }
        _ => alg,
    }
}

/// Applies a (linear) algebra map given as a matrix to check multiplicativity:
/// returns the first basis pair `(i, j)` with `f(eᵢeⱼ) ≠ f(eᵢ)f(eⱼ)`.
pub fn first_non_multiplicative(
    f: &LinearMap,
    dom: &dyn AlgebraOps,
    cod: &dyn AlgebraOps,
) -> Option<(usize, usize)> {
    let n = dom.dim();
    for i in 0..n {
        for j in 0..n {
            let ei = Vector::basis(n, i);
            let ej = Vector::basis(n, j);
            let lhs = f.apply(&dom.mul(&ei, &ej));
            let rhs = cod.mul(f.column(i), f.column(j));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// First basis pair where `f` fails to reverse products.
pub fn first_non_antimultiplicative(
    f: &LinearMap,
    dom: &dyn AlgebraOps,
    cod: &dyn AlgebraOps,
) -> Option<(usize, usize)> {
    let n = dom.dim();
    for i in 0..n {
        for j in 0..n {
            let ei = Vector::basis(n, i);
            let ej = Vector::basis(n, j);
            let lhs = f.apply(&dom.mul(&ei, &ej));
            let rhs = cod.mul(f.column(j), f.column(i));
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// First basis vector where a linear map fails to intertwine the involutions:
/// `f(x*) = f(x)*`.
pub fn first_non_star(f: &LinearMap, dom: &dyn AlgebraOps, cod: &dyn AlgebraOps) -> Option<usize> {
    let n = dom.dim();
    (0..n).find(|&i| {
        let e = Vector::basis(n, i);
        match (dom.star_of(&e), cod.star_of(f.column(i))) {
            (Some(se), Some(sf)) => f.apply(&se) != sf,
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn functions_on_two_points() -> Algebra {
        let labels = vec!["d0".to_string(), "d1".to_string()];
        let unit = Vector::from_dense(vec![Scalar::one(), Scalar::one()]);
        Algebra::from_fn(labels, |i, j| if i == j { Vector::basis(2, i) } else { Vector::zero(2) }, unit)
            .with_star(Star::new(vec![Vector::basis(2, 0), Vector::basis(2, 1)]))
    }

    #[test]
    fn function_algebra_passes() {
        assert!(functions_on_two_points().check("K2").passed());
    }

    #[test]
    fn one_dimensional_field_passes() {
        let k = Algebra::new(vec!["1".to_string()], vec![Vector::basis(1, 0)], Vector::basis(1, 0));
        assert!(k.check("k").passed());
    }

    #[test]
    fn algebra_without_unit_fails_unit_check() {
        // e₁e₁ = e₂, e₂e₂ = e₁, mixed products zero; no element acts as a unit
        let labels = vec!["e1".to_string(), "e2".to_string()];
        let a = Algebra::from_fn(
            labels,
            |i, j| match (i, j) {
                (0, 0) => Vector::basis(2, 1),
                (1, 1) => Vector::basis(2, 0),
                _ => Vector::zero(2),
            },
            Vector::from_dense(vec![Scalar::one(), Scalar::one()]),
        );
        let r = a.check("bad");
        assert!(!r.find("unit").unwrap().passed);
    }

    #[test]
    fn tensor_product_multiplies_factorwise() {
        let a = functions_on_two_points();
        let t = TensorAlgebra::new(vec![&a, &a]);
        let x = t.pure(&[&Vector::basis(2, 0), &a.unit()]);
        let y = t.pure(&[&a.unit(), &Vector::basis(2, 1)]);
        assert_eq!(t.mul(&x, &y), Vector::basis(4, 1));
        assert_eq!(t.embed(&Vector::basis(2, 0), &[0]), x);
        assert!(tensor_algebra(&a, &a).check("K2xK2").passed());
    }
}
