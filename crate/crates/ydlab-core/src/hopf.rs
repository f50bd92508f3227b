//! Finite-dimensional Hopf *-algebras given by structure constants.
//!
//! A [`Hopf`] couples an [`Algebra`] (with optional involution) to a
//! comultiplication, counit and antipode, all stored as [`LinearMap`]s in the
//! chosen basis. [`Hopf::check_axioms`] evaluates every axiom on basis elements
//! in a fixed order; the derived objects (opposite, co-opposite, linear dual)
//! are built from the same data.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{first_non_antimultiplicative, first_non_multiplicative, first_non_star, Algebra, AlgebraOps, Star, TensorAlgebra};
use crate::linear::{apply_kron, flip, kron_after, unflatten, LinearMap, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

/// A finite-dimensional Hopf (*-)algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hopf {
    name: String,
    alg: Algebra,
    delta: LinearMap,
    counit: LinearMap,
    antipode: LinearMap,
    antipode_inv: Option<LinearMap>,
}

/// The Galois maps `T₁(a⊗b) = Δ(a)(1⊗b)`, `T₂(a⊗b) = (a⊗1)Δ(b)` and their inverses.
#[derive(Clone, Debug)]
pub struct GaloisMaps {
    /// `T₁`.
    pub t1: LinearMap,
    /// `T₂`.
    pub t2: LinearMap,
    /// `R₁(a⊗b) = a₁ ⊗ S(a₂)b`.
    pub r1: LinearMap,
    /// `R₂(a⊗b) = aS(b₁) ⊗ b₂`.
    pub r2: LinearMap,
}

impl Hopf {
    /// Assembles a Hopf algebra from its structure maps. The star, if any, is
    /// carried by `alg`. The inverse antipode is computed when it exists.
    pub fn new(name: impl Into<String>, alg: Algebra, delta: LinearMap, counit: LinearMap, antipode: LinearMap) -> Self {
        let n = alg.dim();
        assert_eq!((delta.dom(), delta.cod()), (n, n * n), "comultiplication shape");
        assert_eq!((counit.dom(), counit.cod()), (n, 1), "counit shape");
        assert_eq!((antipode.dom(), antipode.cod()), (n, n), "antipode shape");
        let antipode_inv = antipode.inverse();
        Hopf { name: name.into(), alg, delta, counit, antipode, antipode_inv }
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Renames.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The underlying algebra.
    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// Basis label.
    pub fn label(&self, i: usize) -> &str {
        self.alg.label(i)
    }

    /// Label of a basis tensor of `A^{⊗k}` given by its flat index.
    pub fn tensor_label(&self, legs: usize, flat: usize) -> String {
        let dims = alloc::vec![self.dim(); legs];
        let idx = unflatten(&dims, flat);
        let parts: Vec<&str> = idx.iter().map(|&i| self.label(i)).collect();
        parts.join("(x)")
    }

    /// Comultiplication `A → A⊗A`.
    pub fn delta(&self) -> &LinearMap {
        &self.delta
    }

    /// Counit as a `1 × dim` map.
    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    /// Antipode.
    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    /// Inverse antipode, when the antipode is invertible.
    pub fn try_antipode_inv(&self) -> Option<&LinearMap> {
        self.antipode_inv.as_ref()
    }

    /// Inverse antipode.
    ///
    /// # Panics
    /// When the antipode is singular, which never happens for a Hopf algebra
    /// passing [`Hopf::check_axioms`].
    pub fn antipode_inv(&self) -> &LinearMap {
        self.antipode_inv.as_ref().expect("antipode is not invertible")
    }

    /// The involution, if any.
    pub fn star(&self) -> Option<&Star> {
        self.alg.star()
    }

    /// `ε(x)`.
    pub fn eps(&self, x: &Vector) -> Scalar {
        self.counit.apply(x).get(0)
    }

    /// `Δ(x)`.
    pub fn comul(&self, x: &Vector) -> Vector {
        self.delta.apply(x)
    }

    /// `S(x)`.
    pub fn s(&self, x: &Vector) -> Vector {
        self.antipode.apply(x)
    }

    /// `S⁻¹(x)`.
    pub fn s_inv(&self, x: &Vector) -> Vector {
        self.antipode_inv().apply(x)
    }

    /// `(Δ⊗id)Δ`, the iterated comultiplication `A → A^{⊗3}`.
    pub fn delta2(&self) -> LinearMap {
        let id = LinearMap::identity(self.dim());
        kron_after(&[&self.delta, &id], &self.delta)
    }

    /// `Δ^co = Σ∘Δ`.
    pub fn delta_co(&self) -> LinearMap {
        let n = self.dim();
        flip(n, n).compose(&self.delta)
    }

    /// Basis vector `i`.
    pub fn e(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// The unit.
    pub fn one(&self) -> Vector {
        self.alg.unit()
    }

    /// Product in the algebra.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.alg.mul(x, y)
    }

    /// Star of an element.
    ///
    /// # Panics
    /// When the algebra carries no involution.
    pub fn star_of(&self, x: &Vector) -> Vector {
        self.alg.star_of(x).expect("algebra has no involution")
    }

    /// Verifies every Hopf (*-)algebra axiom on basis elements, in a fixed order:
    /// algebra axioms, comultiplication, counit, antipode, then the involution.
    pub fn check_axioms(&self) -> Report {
        let mut r = Report::new(self.name.clone());
        let n = self.dim();
        let alg_report = self.alg.check("");
        for c in alg_report.checks {
            r.record(c.name, c.passed, c.detail);
        }
        let aa = TensorAlgebra::new(alloc::vec![&self.alg, &self.alg]);
        let lbl = |i: usize| String::from(self.label(i));

        let unit = self.one();
        r.vectors_equal("comultiplication unital", &self.comul(&unit), &aa.unit());
        match first_non_multiplicative(&self.delta, &self.alg, &aa) {
            None => r.pass("comultiplication multiplicative"),
            Some((i, j)) => r.fail(
                "comultiplication multiplicative",
                format!("Δ({} {}) differs from Δ({})Δ({})", self.label(i), self.label(j), self.label(i), self.label(j)),
            ),
        }
        let id = LinearMap::identity(n);
        let left = kron_after(&[&self.delta, &id], &self.delta);
        let right = kron_after(&[&id, &self.delta], &self.delta);
        r.maps_equal("coassociativity", &left, &right, &lbl);

        let el = kron_after(&[&self.counit, &id], &self.delta);
        let er = kron_after(&[&id, &self.counit], &self.delta);
        match (el.first_difference(&id), er.first_difference(&id)) {
            (None, None) => r.pass("counit law"),
            (Some(j), _) | (None, Some(j)) => r.fail("counit law", format!("(ε⊗id)Δ or (id⊗ε)Δ differs from id on {}", self.label(j))),
        }
        let k = Algebra::new(alloc::vec![String::from("1")], alloc::vec![Vector::basis(1, 0)], Vector::basis(1, 0));
        let eps_mult = first_non_multiplicative(&self.counit, &self.alg, &k);
        let eps_unit = self.eps(&unit).is_one();
        match (eps_mult, eps_unit) {
            (None, true) => r.pass("counit multiplicative"),
            (Some((i, j)), _) => r.fail("counit multiplicative", format!("ε({} {}) differs from ε({})ε({})", self.label(i), self.label(j), self.label(i), self.label(j))),
            (None, false) => r.fail("counit multiplicative", "ε(1) differs from 1"),
        }

        let m = self.alg.mult_map();
        let s_id = m.compose(&kron_after(&[&self.antipode, &id], &self.delta));
        let id_s = m.compose(&kron_after(&[&id, &self.antipode], &self.delta));
        let eps_one = LinearMap::from_fn(n, n, |j| unit.scale(&self.eps(&self.e(j))));
        match (s_id.first_difference(&eps_one), id_s.first_difference(&eps_one)) {
            (None, None) => r.pass("antipode law"),
            (Some(j), _) => r.fail("antipode law", format!("S(x₁)x₂ = {} differs from ε(x)1 for x = {}", s_id.column(j), self.label(j))),
            (None, Some(j)) => r.fail("antipode law", format!("x₁S(x₂) = {} differs from ε(x)1 for x = {}", id_s.column(j), self.label(j))),
        }
        match first_non_antimultiplicative(&self.antipode, &self.alg, &self.alg) {
            None => r.pass("antipode anti-multiplicative"),
            Some((i, j)) => r.fail("antipode anti-multiplicative", format!("S({} {}) differs from S({})S({})", self.label(i), self.label(j), self.label(j), self.label(i))),
        }
        r.record("antipode invertible", self.antipode_inv.is_some(), "S is singular");
        r.maps_equal("counit of antipode", &self.counit.compose(&self.antipode), &self.counit, &lbl);
        let lhs = self.delta.compose(&self.antipode);
        let rhs = kron_after(&[&self.antipode, &self.antipode], &self.delta_co());
        r.maps_equal("antipode anti-comultiplicative", &lhs, &rhs, &lbl);

        if let Some(st) = self.alg.star() {
            let bad = (0..n).find(|&i| {
                let lhs = self.comul(st.image(i));
                let rhs = aa.star_of(&self.comul(&self.e(i))).expect("star on both legs");
                lhs != rhs
            });
            match bad {
                None => r.pass("star and comultiplication"),
                Some(i) => r.fail("star and comultiplication", format!("Δ(x*) differs from Δ(x)* for x = {}", self.label(i))),
            }
            let bad = (0..n).find(|&i| self.eps(st.image(i)) != self.eps(&self.e(i)).conj());
            match bad {
                None => r.pass("star and counit"),
                Some(i) => r.fail("star and counit", format!("ε(x*) differs from conj ε(x) for x = {}", self.label(i))),
            }
            let bad = (0..n).find(|&i| {
                let x = self.e(i);
                let y = self.s(&st.apply(&self.s(&st.apply(&x))));
                y != x
            });
            match bad {
                None => r.pass("antipode star involution"),
                Some(i) => r.fail("antipode star involution", format!("S∘*∘S∘* differs from id on {}", self.label(i))),
            }
        }
        r
    }

    /// Builds the Galois maps and their explicit inverses and verifies
    /// bijectivity (exact rank) and the inverse identities.
    pub fn check_galois_maps(&self) -> (Report, GaloisMaps) {
        let n = self.dim();
        let aa = TensorAlgebra::new(alloc::vec![&self.alg, &self.alg]);
        let one = self.one();
        let pair = |f: &dyn Fn(&Vector, &Vector) -> Vector| {
            LinearMap::from_fn(n * n, n * n, |flat| f(&self.e(flat / n), &self.e(flat % n)))
        };
        let t1 = pair(&|a, b| aa.mul(&self.comul(a), &one.kron(b)));
        let t2 = pair(&|a, b| aa.mul(&a.kron(&one), &self.comul(b)));
        let id = LinearMap::identity(n);
                let r1 = pair(&|a, b| {
            // a₁ ⊗ S(a₂) b
            let d = apply_kron(&[&id, &self.antipode], &self.comul(a));
            aa.mul(&d, &one.kron(b))
        });
        let r2 = pair(&|a, b| {
            // a S(b₁) ⊗ b₂
            let d = apply_kron(&[&self.antipode, &id], &self.comul(b));
            aa.mul(&a.kron(&one), &d)
        });
        let mut r = Report::new(format!("{}/galois", self.name));
        let nn = n * n;
        r.record("T1 bijective", t1.rank() == nn, format!("rank {} of {nn}", t1.rank()));
        r.record("T2 bijective", t2.rank() == nn, format!("rank {} of {nn}", t2.rank()));
        let lbl = |j: usize| self.tensor_label(2, j);
        let idnn = LinearMap::identity(nn);
        r.maps_equal("R1 inverts T1", &t1.compose(&r1), &idnn, &lbl);
        r.maps_equal("T1 inverts R1", &r1.compose(&t1), &idnn, &lbl);
        r.maps_equal("R2 inverts T2", &t2.compose(&r2), &idnn, &lbl);
        r.maps_equal("T2 inverts R2", &r2.compose(&t2), &idnn, &lbl);
        (r, GaloisMaps { t1, t2, r1, r2 })
    }

    /// The opposite Hopf *-algebra `A^op`: reversed product, the same
    /// comultiplication matrix and counit, antipode `S⁻¹` and involution
    /// `x ↦ S⁻²(x*)`.
    pub fn opposite(&self) -> Hopf {
        let s_inv = self.antipode_inv().clone();
        let mut alg = self.alg.opposite().without_star();
        if let Some(st) = self.alg.star() {
            let s2 = s_inv.compose(&s_inv);
            let images = (0..self.dim()).map(|i| s2.apply(st.image(i))).collect();
            alg = alg.with_star(Star::new(images));
        }
        Hopf::new(format!("{}^op", self.name), alg, self.delta.clone(), self.counit.clone(), s_inv)
    }

    /// The co-opposite Hopf *-algebra `A^co`: same algebra, flipped
    /// comultiplication, antipode `S⁻¹`.
    pub fn coopposite(&self) -> Hopf {
        Hopf::new(format!("{}^co", self.name), self.alg.clone(), self.delta_co(), self.counit.clone(), self.antipode_inv().clone())
    }

    /// The linear dual in the dual basis: the product is the transpose of `Δ`,
    /// the comultiplication the transpose of the product, the counit is
    /// evaluation at `1`, the antipode is `Sᵀ` and `ω*(a) = conj ω(S(a)*)`.
    pub fn dual(&self) -> Hopf {
        let n = self.dim();
        let labels: Vec<String> = (0..n).map(|i| format!("ev[{}]", self.label(i))).collect();
        let rows_delta = self.delta.rows();
        let alg = Algebra::from_fn(labels, |i, j| rows_delta[i * n + j].clone(), Vector::from_pairs(n, (0..n).map(|k| (k, self.eps(&self.e(k))))));
        let alg = match self.alg.star() {
            Some(st) => {
                // (eⁱ)*(e_k) = conj(eⁱ(S(e_k)*)) = conj of coordinate i of S(e_k)*
                let sk: Vec<Vector> = (0..n).map(|k| st.apply(&self.s(&self.e(k)))).collect();
                let images = (0..n).map(|i| Vector::from_pairs(n, (0..n).map(|k| (k, sk[k].get(i).conj())))).collect();
                alg.with_star(Star::new(images))
            }
            None => alg,
        };
        let mult_t = self.alg.mult_map().transpose();
        let counit = LinearMap::functional(&self.one().to_dense());
        Hopf::new(format!("{}^dual", self.name), alg, mult_t, counit, self.antipode.transpose())
    }
}

/// Verifies that `f: A → B` is an isomorphism of Hopf (*-)algebras.
pub fn check_hopf_iso(f: &LinearMap, a: &Hopf, b: &Hopf, subject: &str) -> Report {
    let mut r = Report::new(subject);
    let n = a.dim();
    r.record("bijective", f.dom() == n && f.cod() == b.dim() && f.rank() == n, format!("rank {} for dimensions {} and {}", f.rank(), n, b.dim()));
    if f.dom() != n || f.cod() != b.dim() {
        return r;
    }
    match first_non_multiplicative(f, a.alg(), b.alg()) {
        None => r.pass("multiplicative"),
        Some((i, j)) => r.fail("multiplicative", format!("f({} {}) differs from f({})f({})", a.label(i), a.label(j), a.label(i), a.label(j))),
    }
    r.vectors_equal("unital", &f.apply(&a.one()), &b.one());
    let lbl = |i: usize| String::from(a.label(i));
    r.maps_equal("comultiplicative", &b.delta().compose(f), &kron_after(&[f, f], a.delta()), &lbl);
    r.maps_equal("counit", &b.counit().compose(f), a.counit(), &lbl);
    r.maps_equal("antipode", &b.antipode().compose(f), &f.compose(a.antipode()), &lbl);
    if a.star().is_some() && b.star().is_some() {
        match first_non_star(f, a.alg(), b.alg()) {
            None => r.pass("star"),
            Some(i) => r.fail("star", format!("f(x*) differs from f(x)* for x = {}", a.label(i))),
        }
    }
    r
}

/// The tensor product Hopf algebra `A⊗B` with factorwise structure.
pub fn tensor_hopf(a: &Hopf, b: &Hopf) -> Hopf {
    let alg = crate::algebra::tensor_algebra(a.alg(), b.alg());
    let (n, m) = (a.dim(), b.dim());
    // (a₁⊗a₂)⊗(b₁⊗b₂) reordered to (a₁⊗b₁)⊗(a₂⊗b₂)
    let mid = crate::linear::permute_legs(&[n, n, m, m], &[0, 2, 1, 3]);
    let delta = mid.compose(&a.delta().kron(b.delta()));
    Hopf::new(
        format!("{}(x){}", a.name(), b.name()),
        alg,
        delta,
        a.counit().kron(b.counit()),
        a.antipode().kron(b.antipode()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn k_z2() -> Hopf {
        // δ_0, δ_1 on ℤ/2
        let labels = vec!["d0".to_string(), "d1".to_string()];
        let alg = Algebra::from_fn(labels, |i, j| if i == j { Vector::basis(2, i) } else { Vector::zero(2) }, Vector::from_dense(vec![Scalar::one(), Scalar::one()]))
            .with_star(Star::new(vec![Vector::basis(2, 0), Vector::basis(2, 1)]));
        let delta = LinearMap::from_fn(2, 4, |x| {
            Vector::from_pairs(4, (0..2).map(|u| (u * 2 + ((x + u) % 2), Scalar::one())))
        });
        Hopf::new("K(z2)", alg, delta, LinearMap::functional(&[Scalar::one(), Scalar::zero()]), LinearMap::identity(2))
    }

    #[test]
    fn function_algebra_of_z2_is_hopf() {
        let h = k_z2();
        let r = h.check_axioms();
        assert!(r.passed(), "{r}");
        let (g, _) = h.check_galois_maps();
        assert!(g.passed(), "{g}");
    }

    #[test]
    fn swapped_antipode_fails_antipode_law_first() {
        let h = k_z2();
        let broken = Hopf::new("broken", h.alg().clone(), h.delta().clone(), h.counit().clone(), LinearMap::from_fn(2, 2, |i| Vector::basis(2, 1 - i)));
        let r = broken.check_axioms();
        assert_eq!(r.first_failure().unwrap().name, "antipode law");
    }

    #[test]
    fn derived_algebras_pass() {
        let h = k_z2();
        for d in [h.opposite(), h.coopposite(), h.dual(), h.dual().dual(), tensor_hopf(&h, &h)] {
            let r = d.check_axioms();
            assert!(r.passed(), "{r}");
        }
    }
}
