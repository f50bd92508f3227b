//! Module algebras and comodule algebras over a finite-dimensional Hopf algebra,
//! and the correspondence between coactions of `A` and actions of a paired `B`.
//!
//! An [`Action`] stores its module map `H⊗X → X` (left) or `X⊗H → X` (right)
//! and a [`Coaction`] stores `X → H⊗X` (left) or `X → X⊗H` (right), always
//! with the row-major flattening of the tensor legs in the written order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{first_non_multiplicative, first_non_star, Algebra, AlgebraOps, Star, TensorAlgebra};
use crate::hopf::Hopf;
use crate::linear::{apply_kron, kron_after, LinearMap, Vector};
use crate::pairing::Pairing;
use crate::report::Report;

/// Which side the Hopf algebra acts or coacts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `h ▷ x` or `x ↦ x₋₁ ⊗ x₀`.
    Left,
    /// `x ◁ h` or `x ↦ x₀ ⊗ x₁`.
    Right,
}

/// An action of a Hopf algebra on an algebra.
#[derive(Clone, Debug)]
pub struct Action {
    hopf: Hopf,
    alg: Algebra,
    map: LinearMap,
    side: Side,
}

impl Action {
    /// Wraps a module map. For a left action the domain is `H⊗X`, for a right
    /// action `X⊗H`.
    pub fn new(hopf: Hopf, alg: Algebra, map: LinearMap, side: Side) -> Self {
        assert_eq!((map.dom(), map.cod()), (hopf.dim() * alg.dim(), alg.dim()), "action map shape");
        Action { hopf, alg, map, side }
    }

    /// Builds the module map from `f(h, x)`, the action of basis element `h`
    /// on basis element `x`.
    pub fn from_fn(hopf: Hopf, alg: Algebra, side: Side, f: impl Fn(usize, usize) -> Vector) -> Self {
        let (nh, nx) = (hopf.dim(), alg.dim());
        let map = LinearMap::from_fn(nh * nx, nx, |flat| match side {
            Side::Left => f(flat / nx, flat % nx),
            Side::Right => f(flat % nh, flat / nh),
        });
        Action::new(hopf, alg, map, side)
    }

    /// The trivial action `h ▷ x = ε(h) x`.
    pub fn trivial(hopf: Hopf, alg: Algebra, side: Side) -> Self {
        let nx = alg.dim();
        let eps: Vec<_> = (0..hopf.dim()).map(|h| hopf.eps(&hopf.e(h))).collect();
        Action::from_fn(hopf, alg, side, |h, x| Vector::basis(nx, x).scale(&eps[h]))
    }

    /// The left adjoint action `a ▶ a′ = a₁ a′ S(a₂)` of a Hopf algebra on itself.
    pub fn left_adjoint(hopf: Hopf) -> Self {
        let n = hopf.dim();
        let alg = hopf.alg().clone();
        let images: Vec<Vector> = (0..n * n)
            .map(|flat| {
                let (a, x) = (flat / n, flat % n);
                let mut out = Vector::zero(n);
                for (f, c) in hopf.comul(&hopf.e(a)).iter() {
                    let t = hopf.mul(&hopf.mul(&hopf.e(f / n), &hopf.e(x)), &hopf.s(&hopf.e(f % n)));
                    out.add_scaled(c, &t);
                }
                out
            })
            .collect();
        Action::new(hopf, alg, LinearMap::from_columns(n, images), Side::Left)
    }

    /// The right adjoint action `a′ ◀ a = S(a₁) a′ a₂`.
    pub fn right_adjoint(hopf: Hopf) -> Self {
        let n = hopf.dim();
        let alg = hopf.alg().clone();
        let images: Vec<Vector> = (0..n * n)
            .map(|flat| {
                let (x, a) = (flat / n, flat % n);
                let mut out = Vector::zero(n);
                for (f, c) in hopf.comul(&hopf.e(a)).iter() {
                    let t = hopf.mul(&hopf.mul(&hopf.s(&hopf.e(f / n)), &hopf.e(x)), &hopf.e(f % n));
                    out.add_scaled(c, &t);
                }
                out
            })
            .collect();
        Action::new(hopf, alg, LinearMap::from_columns(n, images), Side::Right)
    }

    /// The acting Hopf algebra.
    pub fn hopf(&self) -> &Hopf {
        &self.hopf
    }

    /// The module algebra.
    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    /// The module map.
    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// Left or right.
    pub fn side(&self) -> Side {
        self.side
    }

    /// The action of `h` on `x`: `h ▷ x` for a left action and `x ◁ h` for a right one.
    pub fn act(&self, h: &Vector, x: &Vector) -> Vector {
        let t = match self.side {
            Side::Left => h.kron(x),
            Side::Right => x.kron(h),
        };
        self.map.apply(&t)
    }

    /// Verifies unitality, the module law, the module-algebra law and, when both
    /// algebras carry an involution, `(h ▷ x)* = S(h)* ▷ x*` (mirrored for right actions).
    pub fn check(&self) -> Report {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let mut r = Report::new(format!("{side} action of {}", self.hopf.name()));
        let h = &self.hopf;
        let x = &self.alg;
        let (nh, nx) = (h.dim(), x.dim());
        let ex = |i: usize| Vector::basis(nx, i);
        let one = h.one();
        let bad = (0..nx).find(|&i| self.act(&one, &ex(i)) != ex(i));
        match bad {
            None => r.pass("unital"),
            Some(i) => r.fail("unital", format!("1 does not fix {}", x.label(i))),
        }
        let mut bad = None;
        'm: for a in 0..nh {
            for b in 0..nh {
                let ab = h.mul(&h.e(a), &h.e(b));
                for i in 0..nx {
                    let (lhs, rhs) = match self.side {
                        Side::Left => (self.act(&ab, &ex(i)), self.act(&h.e(a), &self.act(&h.e(b), &ex(i)))),
                        Side::Right => (self.act(&ab, &ex(i)), self.act(&h.e(b), &self.act(&h.e(a), &ex(i)))),
                    };
                    if lhs != rhs {
                        bad = Some((a, b, i));
                        break 'm;
                    }
                }
            }
        }
        match bad {
            None => r.pass("module law"),
            Some((a, b, i)) => r.fail("module law", format!("h = {}, h′ = {}, x = {}", h.label(a), h.label(b), x.label(i))),
        }
        let mut bad = None;
        'alg: for a in 0..nh {
            let d = h.comul(&h.e(a));
            if self.act(&h.e(a), &x.unit()) != x.unit().scale(&h.eps(&h.e(a))) {
                bad = Some((a, 0, 0));
                break;
            }
            for i in 0..nx {
                for j in 0..nx {
                    let lhs = self.act(&h.e(a), x.mul_basis(i, j));
                    let mut rhs = Vector::zero(nx);
                    for (f, c) in d.iter() {
                        let t = x.mul(&self.act(&h.e(f / nh), &ex(i)), &self.act(&h.e(f % nh), &ex(j)));
                        rhs.add_scaled(c, &t);
                    }
                    if lhs != rhs {
                        bad = Some((a, i, j));
                        break 'alg;
                    }
                }
            }
        }
        match bad {
            None => r.pass("module algebra"),
            Some((a, i, j)) => r.fail("module algebra", format!("h = {}, x = {}, y = {}", h.label(a), x.label(i), x.label(j))),
        }
        if let (Some(_), Some(_)) = (h.star(), x.star()) {
            let bad = (0..nh).flat_map(|a| (0..nx).map(move |i| (a, i))).find(|&(a, i)| {
                let lhs = x.star_of(&self.act(&h.e(a), &ex(i))).expect("star");
                let rhs = self.act(&h.star_of(&h.s(&h.e(a))), &x.star_of(&ex(i)).expect("star"));
                lhs != rhs
            });
            match bad {
                None => r.pass("star compatibility"),
                Some((a, i)) => r.fail("star compatibility", format!("h = {}, x = {}", h.label(a), x.label(i))),
            }
        }
        r
    }
}

/// A coaction of a Hopf algebra on an algebra.
#[derive(Clone, Debug)]
pub struct Coaction {
    hopf: Hopf,
    alg: Algebra,
    map: LinearMap,
    side: Side,
}

impl Coaction {
    /// Wraps a coaction map `X → H⊗X` (left) or `X → X⊗H` (right).
    pub fn new(hopf: Hopf, alg: Algebra, map: LinearMap, side: Side) -> Self {
        assert_eq!((map.dom(), map.cod()), (alg.dim(), hopf.dim() * alg.dim()), "coaction map shape");
        Coaction { hopf, alg, map, side }
    }

    /// The trivial coaction `x ↦ 1⊗x` (or `x⊗1`).
    pub fn trivial(hopf: Hopf, alg: Algebra, side: Side) -> Self {
        let nx = alg.dim();
        let one = hopf.one();
        let map = LinearMap::from_fn(nx, hopf.dim() * nx, |i| match side {
            Side::Left => one.kron(&Vector::basis(nx, i)),
            Side::Right => Vector::basis(nx, i).kron(&one),
        });
        Coaction::new(hopf, alg, map, side)
    }

    /// The comultiplication as a left or right coaction of a Hopf algebra on itself.
    pub fn regular(hopf: Hopf, side: Side) -> Self {
        let alg = hopf.alg().clone();
        let map = hopf.delta().clone();
        Coaction::new(hopf, alg, map, side)
    }

    /// The coacting Hopf algebra.
    pub fn hopf(&self) -> &Hopf {
        &self.hopf
    }

    /// The comodule algebra.
    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    /// The coaction map.
    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// Left or right.
    pub fn side(&self) -> Side {
        self.side
    }

    /// `Γ(x)`.
    pub fn coact(&self, x: &Vector) -> Vector {
        self.map.apply(x)
    }

    /// The algebra `H⊗X` (left) or `X⊗H` (right) receiving the coaction.
    pub fn target(&self) -> TensorAlgebra<'_> {
        match self.side {
            Side::Left => TensorAlgebra::new(alloc::vec![self.hopf.alg(), &self.alg]),
            Side::Right => TensorAlgebra::new(alloc::vec![&self.alg, self.hopf.alg()]),
        }
    }

    /// Replaces the comodule algebra by one with the same basis, for example
    /// the opposite algebra.
    pub fn with_alg(mut self, alg: Algebra) -> Self {
        assert_eq!(alg.dim(), self.alg.dim(), "same carrier dimension");
        self.alg = alg;
        self
    }

    /// Replaces the Hopf algebra by one with the same basis, for example `A^op`.
    pub fn with_hopf(mut self, hopf: Hopf) -> Self {
        assert_eq!(hopf.dim(), self.hopf.dim(), "same Hopf dimension");
        self.hopf = hopf;
        self
    }

    /// Verifies, in order: the counit law, coassociativity, unitality,
    /// multiplicativity and, when involutions are present, that `Γ` is a
    /// *-homomorphism.
    pub fn check(&self) -> Report {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let mut r = Report::new(format!("{side} coaction of {}", self.hopf.name()));
        let h = &self.hopf;
        let nx = self.alg.dim();
        let idx = LinearMap::identity(nx);
        let idh = LinearMap::identity(h.dim());
        let lbl = |i: usize| String::from(self.alg.label(i));
        match self.side {
            Side::Left => {
                r.maps_equal("counit", &kron_after(&[h.counit(), &idx], &self.map), &idx, &lbl);
                let lhs = kron_after(&[h.delta(), &idx], &self.map);
                let rhs = kron_after(&[&idh, &self.map], &self.map);
                r.maps_equal("coassociativity", &lhs, &rhs, &lbl);
            }
            Side::Right => {
                r.maps_equal("counit", &kron_after(&[&idx, h.counit()], &self.map), &idx, &lbl);
                let lhs = kron_after(&[&self.map, &idh], &self.map);
                let rhs = kron_after(&[&idx, h.delta()], &self.map);
                r.maps_equal("coassociativity", &lhs, &rhs, &lbl);
            }
        }
        let target = self.target();
        r.vectors_equal("unital", &self.coact(&self.alg.unit()), &target.unit());
        match first_non_multiplicative(&self.map, &self.alg, &target) {
            None => r.pass("multiplicative"),
            Some((i, j)) => r.fail("multiplicative", format!("Γ({} {}) differs from Γ({})Γ({})", self.alg.label(i), self.alg.label(j), self.alg.label(i), self.alg.label(j))),
        }
        if self.alg.star().is_some() && h.star().is_some() {
            match first_non_star(&self.map, &self.alg, &target) {
                None => r.pass("star"),
                Some(i) => r.fail("star", format!("Γ(x*) differs from Γ(x)* for x = {}", self.alg.label(i))),
            }
        }
        r
    }

    /// The opposite and co-opposite coactions of a left coaction: `Γ^op` over
    /// `A^op` and `Γ^co = (S⊗id)Γ` over `A^co`, both on `X^op` whose involution
    /// is `x ↦ γ(x*)`. Also checks the compatibility `Γγ = (S⁻²⊗γ)Γ` (when
    /// involutions are present) and the intertwining `(S⊗id)Γ^op = Γ^co`.
    pub fn op_coop(&self, gamma: Option<&LinearMap>) -> (Coaction, Coaction, Report) {
        assert_eq!(self.side, Side::Left, "defined for left coactions");
        let h = &self.hopf;
        let nx = self.alg.dim();
        let id = LinearMap::identity(nx);
        let gamma = gamma.cloned().unwrap_or_else(|| id.clone());
        let mut r = Report::new(format!("op/co-op coactions of {}", h.name()));
        let x_op = opposite_algebra(&self.alg, &gamma);
        if self.alg.star().is_some() {
            let s2 = h.antipode_inv().compose(h.antipode_inv());
            let lhs = self.map.compose(&gamma);
            let rhs = kron_after(&[&s2, &gamma], &self.map);
            r.maps_equal("compatibility with γ", &lhs, &rhs, &|i| String::from(self.alg.label(i)));
        }
        let op = Coaction::new(h.opposite(), x_op.clone(), self.map.clone(), Side::Left);
        let co_map = kron_after(&[h.antipode(), &id], &self.map);
        let co = Coaction::new(h.coopposite(), x_op, co_map, Side::Left);
        let inter = kron_after(&[h.antipode(), &id], op.map());
        r.maps_equal("intertwining", &inter, co.map(), &|i| String::from(self.alg.label(i)));
        (op, co, r)
    }
}

/// The opposite algebra with involution `x ↦ γ(x*)`, for an automorphism `γ`
/// with `γ∘*∘γ∘* = id`.
pub fn opposite_algebra(x: &Algebra, gamma: &LinearMap) -> Algebra {
    let op = x.opposite().without_star();
    match x.star() {
        Some(st) => {
            let images = (0..x.dim()).map(|i| gamma.apply(st.image(i))).collect();
            op.with_star(Star::new(images))
        }
        None => op,
    }
}

/// Builds `α_W(x) = W(1⊗x)W⁻¹` (left) or `W(x⊗1)W⁻¹` (right). Rejects `W`
/// unless it is invertible and satisfies `(Δ⊗id)W = W₂₃W₁₃` (left) or
/// `(id⊗Δ)W = W₁₂W₁₃` (right), and unitary in the *-case.
pub fn coaction_from_multiplier(w: &Vector, hopf: &Hopf, alg: &Algebra, side: Side) -> Result<Coaction, Report> {
    let mut r = Report::new(format!("multiplier coaction of {}", hopf.name()));
    let nx = alg.dim();
    let pair = match side {
        Side::Left => TensorAlgebra::new(alloc::vec![hopf.alg(), alg]),
        Side::Right => TensorAlgebra::new(alloc::vec![alg, hopf.alg()]),
    };
    let Some(w_inv) = pair.inverse(w) else {
        r.fail("invertible", "W has no inverse");
        return Err(r);
    };
    r.pass("invertible");
    let idx = LinearMap::identity(nx);
    match side {
        Side::Left => {
            let t = TensorAlgebra::new(alloc::vec![hopf.alg(), hopf.alg(), alg]);
            let lhs = apply_kron(&[hopf.delta(), &idx], w);
            let rhs = t.mul(&t.embed(w, &[1, 2]), &t.embed(w, &[0, 2]));
            r.vectors_equal("(Δ⊗id)W = W23W13", &lhs, &rhs);
        }
        Side::Right => {
            let t = TensorAlgebra::new(alloc::vec![alg, hopf.alg(), hopf.alg()]);
            let lhs = apply_kron(&[&idx, hopf.delta()], w);
            let rhs = t.mul(&t.embed(w, &[0, 1]), &t.embed(w, &[0, 2]));
            r.vectors_equal("(id⊗Δ)W = W12W13", &lhs, &rhs);
        }
    }
    if let Some(ws) = pair.star_of(w) {
        r.vectors_equal("unitary", &ws, &w_inv);
    }
    if !r.passed() {
        return Err(r);
    }
    let one = hopf.one();
    let map = LinearMap::from_fn(nx, pair.dim(), |i| {
        let x = match side {
            Side::Left => one.kron(&Vector::basis(nx, i)),
            Side::Right => Vector::basis(nx, i).kron(&one),
        };
        pair.mul(&pair.mul(w, &x), &w_inv)
    });
    Ok(Coaction::new(hopf.clone(), alg.clone(), map, side))
}

/// The right action `x ◁ b = p(x₋₁, b) x₀` of `B` induced by a left coaction of `A`.
pub fn duality_functor(c: &Coaction, p: &Pairing) -> Action {
    assert_eq!(c.side(), Side::Left, "left coaction expected");
    assert_eq!(c.hopf().dim(), p.dim(), "coacting algebra must be the left factor of the pairing");
    let nx = c.alg().dim();
    let n = p.dim();
    let images: Vec<Vector> = (0..nx).map(|i| c.coact(&Vector::basis(nx, i))).collect();
    Action::from_fn(p.b().clone(), c.alg().clone(), Side::Right, |b, x| {
        let f = p.right_functional(&Vector::basis(n, b));
        crate::linear::contract_leg(&images[x], &[n, nx], 0, &f)
    })
}

/// The left coaction `Γ(x) = Σᵢ aᵢ ⊗ (x ◁ bᵢ)` of `A` induced by a right action of
/// `B`, where `U = Σᵢ aᵢ⊗bᵢ`.
pub fn duality_inverse(act: &Action, p: &Pairing) -> Coaction {
    assert_eq!(act.side(), Side::Right, "right action expected");
    let nx = act.alg().dim();
    let n = p.dim();
    let u = p.u();
    let map = LinearMap::from_fn(nx, n * nx, |i| {
        let x = Vector::basis(nx, i);
        let mut out = Vector::zero(n * nx);
        for (flat, c) in u.iter() {
            let (a, b) = (flat / n, flat % n);
            out.add_scaled(c, &Vector::basis(n, a).kron(&act.act(&Vector::basis(n, b), &x)));
        }
        out
    });
    Coaction::new(p.a().clone(), act.alg().clone(), map, Side::Left)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{function_hopf, group_hopf, set_functions, FiniteGroup};
    use crate::pairing::canonical_group_pairing;
    use crate::scalar::Scalar;

    #[test]
    fn adjoint_actions_pass() {
        let g = FiniteGroup::cyclic(3);
        for h in [function_hopf(&g), group_hopf(&FiniteGroup::s3())] {
            let l = Action::left_adjoint(h.clone());
            assert!(l.check().passed(), "{}", l.check());
            let r = Action::right_adjoint(h);
            assert!(r.check().passed(), "{}", r.check());
        }
    }

    #[test]
    fn trivial_coaction_passes_and_scaled_one_fails_counit() {
        let h = function_hopf(&FiniteGroup::cyclic(2));
        let x = set_functions(2);
        let c = Coaction::trivial(h.clone(), x.clone(), Side::Left);
        assert!(c.check().passed());
        let mut cols = c.map().columns().to_vec();
        cols[1] = cols[1].scale(&Scalar::from_int(2));
        let bad = Coaction::new(h, x, LinearMap::from_columns(4, cols), Side::Left);
        let r = bad.check();
        assert_eq!(r.first_failure().unwrap().name, "counit");
    }

    #[test]
    fn duality_round_trip_on_regular_coaction() {
        let g = FiniteGroup::s3();
        let p = canonical_group_pairing(&g);
        let c = Coaction::regular(p.a().clone(), Side::Left);
        let act = duality_functor(&c, &p);
        assert!(act.check().passed(), "{}", act.check());
        let back = duality_inverse(&act, &p);
        assert_eq!(back.map(), c.map());
    }
}
