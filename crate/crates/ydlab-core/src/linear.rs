//! Sparse exact vectors, linear maps and exact linear solvers.
//!
//! Vectors store only their nonzero coordinates. The structure constants of
//! group-type Hopf algebras are monomial, so composite maps on triple tensor
//! powers stay small even when the ambient dimension reaches the hundreds of
//! thousands.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A vector of a finite-dimensional ℚ(i)-space in a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector {
    dim: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl Vector {
    /// The zero vector of dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        Vector { dim, entries: BTreeMap::new() }
    }

    /// The `i`-th basis vector.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut v = Vector::zero(dim);
        v.entries.insert(i, Scalar::one());
        v
    }

    /// Builds a vector from all of its coordinates.
    pub fn from_dense(coords: Vec<Scalar>) -> Self {
        let dim = coords.len();
        let entries = coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        Vector { dim, entries }
    }

    /// Builds a vector from `(index, coefficient)` pairs; repeated indices accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(dim: usize, pairs: I) -> Self {
        let mut v = Vector::zero(dim);
        for (i, c) in pairs {
            v.add_term(i, &c);
        }
        v
    }

    /// Dimension of the ambient space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of nonzero coordinates.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// True when every coordinate vanishes.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinate `i`.
    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(&i).cloned().unwrap_or_default()
    }

    /// Nonzero coordinates in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    /// Adds `c` to coordinate `i`.
    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&i) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.entries.remove(&i);
                }
            }
            None => {
                self.entries.insert(i, c.clone());
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.dim, other.dim, "dimension mismatch in vector sum");
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_term(i, &(c * x));
        }
    }

    /// `c · self`.
    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero(self.dim);
        }
        Vector { dim: self.dim, entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + other`.
    pub fn add(&self, other: &Vector) -> Vector {
        let mut v = self.clone();
        v.add_scaled(&Scalar::one(), other);
        v
    }

    /// `self − other`.
    pub fn sub(&self, other: &Vector) -> Vector {
        let mut v = self.clone();
        v.add_scaled(&-Scalar::one(), other);
        v
    }

    /// Coordinatewise complex conjugate.
    pub fn conj(&self) -> Vector {
        Vector { dim: self.dim, entries: self.entries.iter().map(|(i, x)| (*i, x.conj())).collect() }
    }

    /// Tensor product in the row-major flattening of `dim(self) × dim(other)`.
    pub fn kron(&self, other: &Vector) -> Vector {
        let mut v = Vector::zero(self.dim * other.dim);
        for (i, x) in self.iter() {
            for (j, y) in other.iter() {
                v.entries.insert(i * other.dim + j, x * y);
            }
        }
        v
    }

    /// Bilinear form `Σ selfᵢ otherᵢ` (no conjugation).
    pub fn dot(&self, other: &Vector) -> Scalar {
        let mut s = Scalar::zero();
        for (i, x) in self.iter() {
            if let Some(y) = other.entries.get(&i) {
                s += &(x * y);
            }
        }
        s
    }

    /// All coordinates, zeros included.
    pub fn to_dense(&self) -> Vec<Scalar> {
        (0..self.dim).map(|i| self.get(i)).collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, c)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {c}")?;
        }
        write!(f, "]")
    }
}

/// Row-major flat index of the multi-index `idx` in a space with leg extents `dims`.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

/// A linear map between coordinate spaces, stored by the images of basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    dom: usize,
    cod: usize,
    cols: Vec<Vector>,
}

impl LinearMap {
    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(cod: usize, cols: Vec<Vector>) -> Self {
        for c in &cols {
            assert_eq!(c.dim(), cod, "column dimension mismatch");
        }
        LinearMap { dom: cols.len(), cod, cols }
    }

    /// Builds a map from a closure giving the image of each basis vector.
    pub fn from_fn<F: FnMut(usize) -> Vector>(dom: usize, cod: usize, f: F) -> Self {
        LinearMap::from_columns(cod, (0..dom).map(f).collect())
    }

    /// Builds a map from a dense row-major matrix with `rows.len()` rows.
    pub fn from_rows(dom: usize, rows: &[Vec<Scalar>]) -> Self {
        let cod = rows.len();
        LinearMap::from_fn(dom, cod, |j| {
            Vector::from_pairs(cod, rows.iter().enumerate().map(|(i, r)| (i, r[j].clone())))
        })
    }

    /// Identity on an `n`-dimensional space.
    pub fn identity(n: usize) -> Self {
        LinearMap::from_fn(n, n, |i| Vector::basis(n, i))
    }

    /// Zero map.
    pub fn zero(dom: usize, cod: usize) -> Self {
        LinearMap::from_fn(dom, cod, |_| Vector::zero(cod))
    }

    /// A linear functional given by its values on the basis.
    pub fn functional(values: &[Scalar]) -> Self {
        LinearMap::from_fn(values.len(), 1, |i| Vector::from_pairs(1, [(0, values[i].clone())]))
    }

    /// Domain dimension.
    pub fn dom(&self) -> usize {
        self.dom
    }

    /// Codomain dimension.
    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Image of basis vector `j`.
    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    /// All columns.
    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    /// Matrix entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    /// Applies the map to a vector.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.dom, "applying a map to a vector of the wrong dimension");
        let mut out = Vector::zero(self.cod);
        for (j, c) in v.iter() {
            out.add_scaled(c, &self.cols[j]);
        }
        out
    }

    /// The composite `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        assert_eq!(inner.cod, self.dom, "composing maps with mismatched dimensions");
        LinearMap::from_columns(self.cod, inner.cols.iter().map(|c| self.apply(c)).collect())
    }

    /// The tensor product map `self ⊗ other`.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let mut cols = Vec::with_capacity(self.dom * other.dom);
        for a in &self.cols {
            for b in &other.cols {
                cols.push(a.kron(b));
            }
        }
        LinearMap::from_columns(self.cod * other.cod, cols)
    }

    /// `self + other`.
    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.dom, self.cod), (other.dom, other.cod));
        LinearMap::from_columns(self.cod, self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect())
    }

    /// `c · self`.
    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap::from_columns(self.cod, self.cols.iter().map(|a| a.scale(c)).collect())
    }

    /// The transposed matrix.
    pub fn transpose(&self) -> LinearMap {
        let mut cols = vec![Vector::zero(self.dom); self.cod];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                cols[i].add_term(j, x);
            }
        }
        LinearMap::from_columns(self.dom, cols)
    }

    /// Rows as sparse vectors over the domain.
    pub fn rows(&self) -> Vec<Vector> {
        self.transpose().cols
    }

    /// Index of the first column where `self` and `other` differ.
    pub fn first_difference(&self, other: &LinearMap) -> Option<usize> {
        assert_eq!((self.dom, self.cod), (other.dom, other.cod), "comparing maps of different shapes");
        (0..self.dom).find(|&j| self.cols[j] != other.cols[j])
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.dom);
        for r in self.rows() {
            e.insert(r);
        }
        e.rank()
    }

    /// Exact inverse of a square map, or `None` when it is singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        if self.dom != self.cod {
            return None;
        }
        let rhs: Vec<Vector> = (0..self.cod).map(|i| Vector::basis(self.cod, i)).collect();
        let sols = sparse_solve_many(self, &rhs).ok()?;
        Some(LinearMap::from_columns(self.dom, sols))
    }
}

/// The map permuting tensor legs: output leg `k` is input leg `perm[k]`.
pub fn permute_legs(dims: &[usize], perm: &[usize]) -> LinearMap {
    assert_eq!(dims.len(), perm.len(), "permutation length mismatch");
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let total: usize = dims.iter().product();
    LinearMap::from_fn(total, total, |flat| {
        let idx = unflatten(dims, flat);
        let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        Vector::basis(total, flat_index(&out_dims, &out))
    })
}

/// The flip `x ⊗ y ↦ y ⊗ x` from `V⊗W` (dimensions `m`, `n`) to `W⊗V`.
pub fn flip(m: usize, n: usize) -> LinearMap {
    permute_legs(&[m, n], &[1, 0])
}

/// Kronecker product of a list of maps.
pub fn kron_all(maps: &[&LinearMap]) -> LinearMap {
    let mut acc = LinearMap::identity(1);
    for m in maps {
        acc = acc.kron(m);
    }
    acc
}

/// Applies `f₁ ⊗ … ⊗ fₖ` to a vector of `V₁ ⊗ … ⊗ Vₖ` without materializing the
/// Kronecker product.
pub fn apply_kron(maps: &[&LinearMap], v: &Vector) -> Vector {
    let dims: Vec<usize> = maps.iter().map(|m| m.dom).collect();
    let cod: usize = maps.iter().map(|m| m.cod).product();
    assert_eq!(v.dim(), dims.iter().product::<usize>(), "vector does not match the tensor legs");
    let mut out = Vector::zero(cod);
    for (flat, c) in v.iter() {
        let idx = unflatten(&dims, flat);
        let mut img = Vector::basis(1, 0);
        for (m, &i) in maps.iter().zip(&idx) {
            img = img.kron(&m.cols[i]);
        }
        out.add_scaled(c, &img);
    }
    out
}

/// The map `f₁ ⊗ … ⊗ fₖ ∘ g`, materialized column by column.
pub fn kron_after(maps: &[&LinearMap], g: &LinearMap) -> LinearMap {
    let cod: usize = maps.iter().map(|m| m.cod).product();
    LinearMap::from_columns(cod, g.cols.iter().map(|c| apply_kron(maps, c)).collect())
}

/// Contracts leg `leg` of a vector of `V₁ ⊗ … ⊗ Vₖ` against the functional with
/// coefficients `w`, returning a vector of the remaining legs (dimension 1 when
/// no leg remains).
pub fn contract_leg(v: &Vector, dims: &[usize], leg: usize, w: &Vector) -> Vector {
    assert_eq!(w.dim(), dims[leg], "functional does not match the contracted leg");
    let rest: Vec<usize> = dims.iter().enumerate().filter(|&(l, _)| l != leg).map(|(_, &d)| d).collect();
    let total: usize = rest.iter().product();
    let mut out = Vector::zero(total);
    for (flat, c) in v.iter() {
        let idx = unflatten(dims, flat);
        let x = w.get(idx[leg]);
        if x.is_zero() {
            continue;
        }
        let rest_idx: Vec<usize> = idx.iter().enumerate().filter(|&(l, _)| l != leg).map(|(_, &i)| i).collect();
        out.add_term(flat_index(&rest, &rest_idx), &(c * &x));
    }
    out
}

/// Failure modes of the exact solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// The system is inconsistent.
    NoSolution,
    /// The system has more than one solution: a particular one plus a kernel basis.
    NonUnique {
        /// One solution of the system.
        particular: Vector,
        /// A basis of the kernel of the coefficient matrix.
        kernel: Vec<Vector>,
    },
    /// Operand dimensions do not match.
    ShapeMismatch,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NoSolution => write!(f, "the linear system has no solution"),
            SolveError::NonUnique { kernel, .. } => {
                write!(f, "the linear system has a {}-dimensional solution space", kernel.len())
            }
            SolveError::ShapeMismatch => write!(f, "operand shapes do not match"),
        }
    }
}

/// Gaussian integer used by the fraction-free elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn zero() -> Self {
        GInt { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn one() -> Self {
        GInt { re: BigInt::one(), im: BigInt::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn mul(&self, o: &GInt) -> GInt {
        GInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn sub(&self, o: &GInt) -> GInt {
        GInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, d: &GInt) -> GInt {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero(), "inexact Bareiss division");
        GInt { re: re / &n, im: im / n }
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }
}

/// Clears denominators of a row of scalars, returning Gaussian integers.
fn integer_row(row: &[Scalar]) -> Vec<GInt> {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.re().denom()).lcm(x.im().denom());
    }
    row.iter()
        .map(|x| {
            let re = x.re() * BigRational::from_integer(l.clone());
            let im = x.im() * BigRational::from_integer(l.clone());
            GInt { re: re.to_integer(), im: im.to_integer() }
        })
        .collect()
}

/// Solves `a · x = b` exactly by fraction-free (Bareiss) elimination over ℤ[i].
///
/// Returns the unique solution, [`SolveError::NoSolution`] for an inconsistent
/// system, or [`SolveError::NonUnique`] with a particular solution and a kernel
/// basis when the solution space is larger than a point.
pub fn solve_exact(a: &LinearMap, b: &Vector) -> Result<Vector, SolveError> {
    if b.dim() != a.cod() {
        return Err(SolveError::ShapeMismatch);
    }
    let (m, n) = (a.cod(), a.dom());
    let dense_rows: Vec<Vec<Scalar>> = {
        let mut rows = vec![vec![Scalar::zero(); n + 1]; m];
        for (j, col) in a.columns().iter().enumerate() {
            for (i, x) in col.iter() {
                rows[i][j] = x.clone();
            }
        }
        for (i, x) in b.iter() {
            rows[i][n] = x.clone();
        }
        rows
    };
    let mut mat: Vec<Vec<GInt>> = dense_rows.iter().map(|r| integer_row(r)).collect();
    let mut prev = GInt::one();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, p);
        for i in (r + 1)..m {
            let factor = mat[i][c].clone();
            for j in (c + 1)..=n {
                let v = mat[r][c].mul(&mat[i][j]).sub(&factor.mul(&mat[r][j]));
                mat[i][j] = v.div_exact(&prev);
            }
            mat[i][c] = GInt::zero();
        }
        // rows above the pivot row keep their entries; only later rows are scaled
        prev = mat[r][c].clone();
        pivots.push((r, c));
        r += 1;
    }
    if (r..m).any(|i| !mat[i][n].is_zero()) {
        return Err(SolveError::NoSolution);
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let back_solve = |rhs: &dyn Fn(usize) -> Scalar, free: &BTreeMap<usize, Scalar>| -> Vector {
        let mut x: Vec<Scalar> = vec![Scalar::zero(); n];
        for (f, v) in free {
            x[*f] = v.clone();
        }
        for &(row, col) in pivots.iter().rev() {
            let mut s = rhs(row);
            for j in (col + 1)..n {
                if !mat[row][j].is_zero() && !x[j].is_zero() {
                    s -= &(&mat[row][j].to_scalar() * &x[j]);
                }
            }
            x[col] = s.checked_div(&mat[row][col].to_scalar()).expect("nonzero pivot");
        }
        Vector::from_dense(x)
    };
    let particular = back_solve(&|row| mat[row][n].to_scalar(), &BTreeMap::new());
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    if free_cols.is_empty() {
        return Ok(particular);
    }
    let kernel = free_cols
        .iter()
        .map(|&f| {
            let mut free = BTreeMap::new();
            free.insert(f, Scalar::one());
            back_solve(&|_| Scalar::zero(), &free)
        })
        .collect();
    Err(SolveError::NonUnique { particular, kernel })
}

/// Incremental sparse row echelon form over ℚ(i).
///
/// Each stored row is normalized so that its smallest column index carries
/// coefficient one, and no two rows share that leading column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, Vector>,
}

impl Echelon {
    /// An empty echelon form for rows of length `ncols`.
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: Vector) -> Vector {
        assert_eq!(row.dim(), self.ncols, "row length mismatch");
        let mut floor = 0;
        loop {
            let next = row.iter().map(|(i, _)| i).find(|&i| i >= floor && self.rows.contains_key(&i));
            let Some(c) = next else { return row };
            let coeff = row.get(c);
            row.add_scaled(&-coeff, &self.rows[&c]);
            floor = c + 1;
        }
    }

    /// Inserts a row; returns its leading column when it was independent.
    pub fn insert(&mut self, row: Vector) -> Option<usize> {
        let row = self.reduce(row);
        let (lead, c) = row.iter().next().map(|(i, c)| (i, c.clone()))?;
        let row = row.scale(&c.inverse().expect("nonzero leading entry"));
        self.rows.insert(lead, row);
        Some(lead)
    }

    /// Number of independent rows inserted so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading columns of the stored rows.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rewrites the stored rows into reduced row echelon form.
    pub fn reduce_fully(&mut self) {
        let keys: Vec<usize> = self.rows.keys().copied().rev().collect();
        for (k, &c) in keys.iter().enumerate() {
            let mut row = self.rows[&c].clone();
            for &later in keys[..k].iter() {
                let coeff = row.get(later);
                if !coeff.is_zero() {
                    row.add_scaled(&-coeff, &self.rows[&later]);
                }
            }
            self.rows.insert(c, row);
        }
    }

    /// The stored row with leading column `c`.
    pub fn row(&self, c: usize) -> Option<&Vector> {
        self.rows.get(&c)
    }
}

/// Solves `a · x = bₖ` for several right-hand sides by sparse elimination.
///
/// Fails with [`SolveError::NoSolution`] when some system is inconsistent and
/// with [`SolveError::NonUnique`] (for the first right-hand side) when `a` has a
/// nontrivial kernel.
pub fn sparse_solve_many(a: &LinearMap, rhs: &[Vector]) -> Result<Vec<Vector>, SolveError> {
    let (m, n, k) = (a.cod(), a.dom(), rhs.len());
    if rhs.iter().any(|b| b.dim() != m) {
        return Err(SolveError::ShapeMismatch);
    }
    let mut aug_rows: Vec<Vector> = a.rows().into_iter().map(|r| {
        let mut v = Vector::zero(n + k);
        for (j, x) in r.iter() {
            v.add_term(j, x);
        }
        v
    }).collect();
    for (t, b) in rhs.iter().enumerate() {
        for (i, x) in b.iter() {
            aug_rows[i].add_term(n + t, x);
        }
    }
    let mut e = Echelon::new(n + k);
    for r in aug_rows {
        e.insert(r);
    }
    if e.pivot_columns().any(|c| c >= n) {
        return Err(SolveError::NoSolution);
    }
    e.reduce_fully();
    let read = |t: usize, free: Option<usize>| -> Vector {
        let mut x = Vector::zero(n);
        if let Some(f) = free {
            x.add_term(f, &Scalar::one());
        }
        for c in e.pivot_columns() {
            let row = e.row(c).expect("pivot row");
            let mut val = if free.is_some() { Scalar::zero() } else { row.get(n + t) };
            if let Some(f) = free {
                val = -row.get(f);
            }
            x.add_term(c, &val);
        }
        x
    };
    if e.rank() < n {
        let pivots: Vec<usize> = e.pivot_columns().collect();
        let kernel = (0..n).filter(|c| !pivots.contains(c)).map(|f| read(0, Some(f))).collect();
        let particular = if k > 0 { read(0, None) } else { Vector::zero(n) };
        return Err(SolveError::NonUnique { particular, kernel });
    }
    Ok((0..k).map(|t| read(t, None)).collect())
}

/// Kernel basis of a linear map.
pub fn kernel(a: &LinearMap) -> Vec<Vector> {
    match sparse_solve_many(a, &[]) {
        Ok(_) => Vec::new(),
        Err(SolveError::NonUnique { kernel, .. }) => kernel,
        Err(_) => unreachable!("homogeneous systems are consistent"),
    }
}
