//! Yetter–Drinfeld algebras over a pairing `p: A × B → 𝕜`, in the "only
//! coaction" form (two coactions) and in the standard form (an action and a
//! coaction of one Hopf algebra), for all four chiralities.
//!
//! Normalization dictionary. A [`YdPair`] of chirality
//!
//! * `Ll` has `α: X → A^op⊗X` and `β: X → B⊗X`, and
//!   `(id⊗α)β = Σ₁₂ Ad(U°₁₂)(id⊗β)α` in `B⊗A^op⊗X`;
//! * `Lr` has `α: X → A⊗X` and `β: X → X⊗B`, and
//!   `(α⊗id)β = Ad(U₁₃)(id⊗β)α` in `A⊗X⊗B`;
//! * `Rl` has `α: X → X⊗A` and `β: X → B⊗X`, and
//!   `(id⊗α)β = Ad(Σ(U⁻¹)₁₃)(β⊗id)α` in `B⊗X⊗A`;
//! * `Rr` has `α: X → X⊗A^op` and `β: X → X⊗B`, and
//!   `(α⊗id)β = Ad(U°₂₃)⁻¹ Σ₂₃(β⊗id)α` in `X⊗A^op⊗B`.
//!
//! The standard variants are named by (action side, coaction side): `Rl` is a
//! right `A`-action with a left `A^op`-coaction, `Ll` a left action with a left
//! `A`-coaction, `Lr` a left action with a right `A^op`-coaction and `Rr` a
//! right action with a right `A`-coaction. All products in the standard
//! identities are taken in `A`. The conversions match only-coaction `Ll`, `Lr`,
//! `Rl`, `Rr` with standard `Rl`, `Ll`, `Rr`, `Lr` respectively, the action
//! being induced from `β` through `p`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::{opposite_algebra, Action, Coaction, Side};
use crate::algebra::{Algebra, AlgebraOps, TensorAlgebra};
use crate::constructions::{double_codouble_pairing, drinfeld_codouble, drinfeld_double, heisenberg};
use crate::hopf::{check_hopf_iso, Hopf};
use crate::linear::{contract_leg, flip, kron_after, permute_legs, LinearMap, Vector};
use crate::pairing::Pairing;
use crate::report::Report;
use crate::scalar::Scalar;

/// Sides of the two coactions of a [`YdPair`], or of the action and the
/// coaction of standard Yetter–Drinfeld data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    /// Left and left.
    Ll,
    /// Left and right.
    Lr,
    /// Right and left.
    Rl,
    /// Right and right.
    Rr,
}

impl Chirality {
    /// Lower-case name such as `"ll"`.
    pub fn name(self) -> &'static str {
        match self {
            Chirality::Ll => "ll",
            Chirality::Lr => "lr",
            Chirality::Rl => "rl",
            Chirality::Rr => "rr",
        }
    }

    /// Sides of `(α, β)` for only-coaction data.
    pub fn sides(self) -> (Side, Side) {
        match self {
            Chirality::Ll => (Side::Left, Side::Left),
            Chirality::Lr => (Side::Left, Side::Right),
            Chirality::Rl => (Side::Right, Side::Left),
            Chirality::Rr => (Side::Right, Side::Right),
        }
    }

    /// Whether `α` coacts through `A^op` rather than `A`.
    pub fn alpha_is_opposite(self) -> bool {
        matches!(self, Chirality::Ll | Chirality::Rr)
    }

    /// The standard variant matching only-coaction data of this chirality.
    pub fn standard(self) -> Chirality {
        match self {
            Chirality::Ll => Chirality::Rl,
            Chirality::Lr => Chirality::Ll,
            Chirality::Rl => Chirality::Rr,
            Chirality::Rr => Chirality::Lr,
        }
    }

    /// Inverse of [`Chirality::standard`].
    pub fn from_standard(variant: Chirality) -> Chirality {
        match variant {
            Chirality::Rl => Chirality::Ll,
            Chirality::Ll => Chirality::Lr,
            Chirality::Rr => Chirality::Rl,
            Chirality::Lr => Chirality::Rr,
        }
    }
}

/// A pair of coactions `(α, β)` on one algebra `X`, of the two halves of a
/// pairing.
#[derive(Clone, Debug)]
pub struct YdPair {
    /// The carrier algebra.
    pub x: Algebra,
    /// Coaction of `A` or `A^op`.
    pub alpha: Coaction,
    /// Coaction of `B`.
    pub beta: Coaction,
    /// Sides of the two coactions.
    pub chirality: Chirality,
    /// The pairing between `A` and `B`.
    pub pairing: Pairing,
    /// Which construction produced the data.
    pub provenance: String,
}

impl YdPair {
    /// Assembles a pair, checking that the shapes fit the chirality.
    pub fn new(pairing: Pairing, alpha: Coaction, beta: Coaction, chirality: Chirality, provenance: impl Into<String>) -> Self {
        let (sa, sb) = chirality.sides();
        assert_eq!(alpha.side(), sa, "side of α");
        assert_eq!(beta.side(), sb, "side of β");
        assert_eq!(alpha.hopf().dim(), pairing.dim(), "α coacts through A");
        assert_eq!(beta.hopf().dim(), pairing.dim(), "β coacts through B");
        assert_eq!(alpha.alg().dim(), beta.alg().dim(), "common carrier");
        let x = beta.alg().clone();
        YdPair { x, alpha, beta, chirality, pairing, provenance: provenance.into() }
    }

    /// Both coactions trivial on `x`.
    pub fn trivial(pairing: Pairing, x: Algebra, chirality: Chirality) -> Self {
        let (sa, sb) = chirality.sides();
        let ha = alpha_hopf(&pairing, chirality);
        let alpha = Coaction::trivial(ha, x.clone(), sa);
        let beta = Coaction::trivial(pairing.b().clone(), x, sb);
        YdPair::new(pairing, alpha, beta, chirality, "trivial")
    }

    /// Dimension of the carrier.
    pub fn dim(&self) -> usize {
        self.x.dim()
    }
}

fn alpha_hopf(p: &Pairing, chirality: Chirality) -> Hopf {
    if chirality.alpha_is_opposite() {
        p.a().opposite()
    } else {
        p.a().clone()
    }
}

fn lbl(x: &Algebra) -> impl Fn(usize) -> String + '_ {
    move |i| String::from(x.label(i))
}

/// Applies `Ad(w)` on every column of `m` inside the tensor algebra `t`.
fn conjugate_columns(t: &TensorAlgebra<'_>, w: &Vector, w_inv: &Vector, m: &LinearMap) -> LinearMap {
    LinearMap::from_fn(m.dom(), m.cod(), |i| t.mul(&t.mul(w, m.column(i)), w_inv))
}

/// Verifies that `α` and `β` are coactions and evaluates the Yetter–Drinfeld
/// identity of the pair's chirality as an equality of maps out of `X`.
pub fn check_yd_only_coaction(yd: &YdPair) -> Report {
    let ch = yd.chirality;
    let mut r = Report::new(format!("{}-YD over {}|{}", ch.name(), yd.pairing.a().name(), yd.pairing.b().name()));
    r.summarize("alpha coaction", &yd.alpha.check());
    r.summarize("beta coaction", &yd.beta.check());
    let p = &yd.pairing;
    let n = p.dim();
    let nx = yd.dim();
    let id_a = LinearMap::identity(n);
    let (alpha, beta) = (yd.alpha.map(), yd.beta.map());
    let a = p.a().alg();
    let a_op = a.opposite();
    let b = p.b().alg();
    let x = &yd.x;
    let name = format!("{}-YD", ch.name());
    let (lhs, rhs) = match ch {
        Chirality::Ll => {
            let lhs = kron_after(&[&id_a, alpha], beta);
            let inner = kron_after(&[&id_a, beta], alpha);
            let t = TensorAlgebra::new(alloc::vec![&a_op, b, x]);
            let pair = TensorAlgebra::new(alloc::vec![&a_op, b]);
            let u = p.u();
            let u_inv = pair.inverse(u).expect("U is invertible in A^op⊗B");
            let conj = conjugate_columns(&t, &t.embed(u, &[0, 1]), &t.embed(&u_inv, &[0, 1]), &inner);
            (lhs, permute_legs(&[n, n, nx], &[1, 0, 2]).compose(&conj))
        }
        Chirality::Lr => {
            let lhs = kron_after(&[alpha, &id_a], beta);
            let inner = kron_after(&[&id_a, beta], alpha);
            let t = TensorAlgebra::new(alloc::vec![a, x, b]);
            (lhs, conjugate_columns(&t, &t.embed(p.u(), &[0, 2]), &t.embed(p.u_inv(), &[0, 2]), &inner))
        }
        Chirality::Rl => {
            let lhs = kron_after(&[&id_a, alpha], beta);
            let inner = kron_after(&[beta, &id_a], alpha);
            let t = TensorAlgebra::new(alloc::vec![b, x, a]);
            let sw = flip(n, n);
            let w = sw.apply(p.u_inv());
            let w_inv = sw.apply(p.u());
            (lhs, conjugate_columns(&t, &t.embed(&w, &[0, 2]), &t.embed(&w_inv, &[0, 2]), &inner))
        }
        Chirality::Rr => {
            let lhs = kron_after(&[alpha, &id_a], beta);
            let inner = permute_legs(&[nx, n, n], &[0, 2, 1]).compose(&kron_after(&[beta, &id_a], alpha));
            let t = TensorAlgebra::new(alloc::vec![x, &a_op, b]);
            let pair = TensorAlgebra::new(alloc::vec![&a_op, b]);
            let u = p.u();
            let u_inv = pair.inverse(u).expect("U is invertible in A^op⊗B");
            (lhs, conjugate_columns(&t, &t.embed(&u_inv, &[1, 2]), &t.embed(u, &[1, 2]), &inner))
        }
    };
    r.maps_equal(&name, &lhs, &rhs, &lbl(x));
    r
}

/// `a ↦ a⊗1` from a factor of dimension `n` into `n·m` dimensions.
fn lift_first(n: usize, unit: &Vector) -> LinearMap {
    LinearMap::from_fn(n, n * unit.dim(), |i| Vector::basis(n, i).kron(unit))
}

/// `b ↦ 1⊗b`.
fn lift_second(unit: &Vector, m: usize) -> LinearMap {
    LinearMap::from_fn(m, unit.dim() * m, |i| unit.kron(&Vector::basis(m, i)))
}

fn commutation(r: &mut Report, name: &str, t: &dyn AlgebraOps, left: &LinearMap, right: &LinearMap, x: &Algebra) {
    for i in 0..left.dom() {
        for j in 0..right.dom() {
            let (u, v) = (left.column(i), right.column(j));
            if t.mul(u, v) != t.mul(v, u) {
                r.fail(name, format!("images of x = {} and y = {} do not commute", x.label(i), x.label(j)));
                return;
            }
        }
    }
    r.pass(name);
}

/// Evaluates braided commutativity of a pair inside the Heisenberg algebra
/// tensored with `X` or `X^op`, and for `Ll` and `Rr` also the dual criterion.
pub fn check_braided_commutative(yd: &YdPair) -> Report {
    let ch = yd.chirality;
    let mut r = Report::new(format!("{}-BC over {}|{}", ch.name(), yd.pairing.a().name(), yd.pairing.b().name()));
    let p = &yd.pairing;
    let (pa, pb) = (p.a(), p.b());
    let n = p.dim();
    let nx = yd.dim();
    let id_x = LinearMap::identity(nx);
    let x = &yd.x;
    let x_op = x.opposite();
    let (alpha, beta) = (yd.alpha.map(), yd.beta.map());
    // ℋ(p) = A#B and ℋ(p̄) = B#A
    let h = heisenberg(p);
    let h_bar = heisenberg(&p.flip());
    let a_in_h = lift_first(n, &pb.one());
    let b_in_h = lift_second(&pa.one(), n);
    let b_in_hbar = lift_first(n, &pa.one());
    let a_in_hbar = lift_second(&pb.one(), n);
    match ch {
        Chirality::Ll => {
            let t = TensorAlgebra::new(alloc::vec![&h, &x_op]);
            let left = kron_after(&[&a_in_h, &id_x], alpha);
            let right = kron_after(&[&b_in_h.compose(pb.antipode()), &id_x], beta);
            commutation(&mut r, "BC", &t, &left, &right, x);
            let t = TensorAlgebra::new(alloc::vec![&h_bar, x]);
            let left = kron_after(&[&a_in_hbar.compose(pa.antipode()), &id_x], alpha);
            let right = kron_after(&[&b_in_hbar, &id_x], beta);
            commutation(&mut r, "dual BC", &t, &left, &right, x);
        }
        Chirality::Lr => {
            let t = TensorAlgebra::new(alloc::vec![&h, x]);
            let left = kron_after(&[&a_in_h, &id_x], alpha);
            let right = kron_after(&[&b_in_h, &id_x], &flip(nx, n).compose(beta));
            commutation(&mut r, "BC", &t, &left, &right, x);
        }
        Chirality::Rl => {
            let t = TensorAlgebra::new(alloc::vec![x, &h_bar]);
            let left = kron_after(&[&id_x, &a_in_hbar], alpha);
            let right = kron_after(&[&id_x, &b_in_hbar], &flip(n, nx).compose(beta));
            commutation(&mut r, "BC", &t, &left, &right, x);
        }
        Chirality::Rr => {
            let t = TensorAlgebra::new(alloc::vec![&x_op, &h_bar]);
            let left = kron_after(&[&id_x, &a_in_hbar], alpha);
            let right = kron_after(&[&id_x, &b_in_hbar.compose(pb.antipode())], beta);
            commutation(&mut r, "BC", &t, &left, &right, x);
            let t = TensorAlgebra::new(alloc::vec![x, &h]);
            let left = kron_after(&[&id_x, &a_in_h.compose(pa.antipode())], alpha);
            let right = kron_after(&[&id_x, &b_in_h], beta);
            commutation(&mut r, "dual BC", &t, &left, &right, x);
        }
    }
    r
}

/// Standard Yetter–Drinfeld data: an action and a coaction of one Hopf algebra
/// `A` on `X`, with sides given by `variant`. The coaction may be declared over
/// `A^op`; its matrix is read in the basis of `A`.
#[derive(Clone, Debug)]
pub struct StandardYd {
    /// The action of `A`.
    pub action: Action,
    /// The coaction of `A` or `A^op`.
    pub coaction: Coaction,
    /// (action side, coaction side).
    pub variant: Chirality,
}

impl StandardYd {
    /// Assembles standard data, checking the sides against the variant.
    pub fn new(action: Action, coaction: Coaction, variant: Chirality) -> Self {
        let (sa, sc) = variant.sides();
        assert_eq!(action.side(), sa, "side of the action");
        assert_eq!(coaction.side(), sc, "side of the coaction");
        assert_eq!(action.hopf().dim(), coaction.hopf().dim(), "one Hopf algebra");
        assert_eq!(action.alg().dim(), coaction.alg().dim(), "common carrier");
        StandardYd { action, coaction, variant }
    }

    /// The carrier algebra.
    pub fn x(&self) -> &Algebra {
        self.action.alg()
    }

    /// `Γ(x)` as terms `(a, x₀, c)` with the coacting leg first.
    fn terms(&self, v: &Vector) -> Vec<(usize, usize, Scalar)> {
        let n = self.action.hopf().dim();
        let nx = self.x().dim();
        let img = self.coaction.coact(v);
        img.iter()
            .map(|(flat, c)| match self.coaction.side() {
                Side::Left => (flat / nx, flat % nx, c.clone()),
                Side::Right => (flat % n, flat / n, c.clone()),
            })
            .collect()
    }

    fn act(&self, a: &Vector, x: &Vector) -> Vector {
        self.action.act(a, x)
    }
}

/// Comultiplication of a basis element as `(i, j, c)` terms.
fn coproduct_terms(h: &Hopf, a: usize) -> Vec<(usize, usize, Scalar)> {
    let n = h.dim();
    h.comul(&h.e(a)).iter().map(|(f, c)| (f / n, f % n, c.clone())).collect()
}

fn coproduct2_terms(h: &Hopf, d2: &LinearMap, a: usize) -> Vec<(usize, usize, usize, Scalar)> {
    let n = h.dim();
    d2.column(a).iter().map(|(f, c)| (f / (n * n), (f / n) % n, f % n, c.clone())).collect()
}

fn product(h: &Hopf, parts: &[&Vector]) -> Vector {
    let mut acc = h.one();
    for p in parts {
        acc = h.mul(&acc, p);
    }
    acc
}

/// Both sides of the YD identity and of its primed form for basis `a`, `a′`,
/// `x`, as vectors of `A⊗X`.
fn standard_sides(d: &StandardYd, d2: &LinearMap, a: usize, ap: usize, xi: usize) -> [(Vector, Vector); 2] {
    let h = d.action.hopf();
    let n = h.dim();
    let nx = d.x().dim();
    let e = |i: usize| h.e(i);
    let ex = |i: usize| Vector::basis(nx, i);
    let a_vec = e(a);
    let app = e(ap);
    let x = ex(xi);
    let mut yd = (Vector::zero(n * nx), Vector::zero(n * nx));
    let mut ydp = (Vector::zero(n * nx), Vector::zero(n * nx));
    let emit = |out: &mut Vector, c: &Scalar, av: &Vector, xv: &Vector| out.add_scaled(c, &av.kron(xv));
    let gx = d.terms(&x);
    let d1 = coproduct_terms(h, a);
    let d3 = coproduct2_terms(h, d2, a);
    match d.variant {
        Chirality::Rl => {
            for (t, x0, c) in &gx {
                for (a1, a2, k) in &d1 {
                    emit(&mut yd.0, &(c * k), &product(h, &[&app, &e(*t), &e(*a1)]), &d.act(&e(*a2), &ex(*x0)));
                }
            }
            for (a1, a2, k) in &d1 {
                for (t, y0, c) in d.terms(&d.act(&e(*a1), &x)) {
                    emit(&mut yd.1, &(&c * k), &product(h, &[&app, &e(*a2), &e(t)]), &ex(y0));
                }
            }
            for (t, y0, c) in d.terms(&d.act(&a_vec, &x)) {
                emit(&mut ydp.0, &c, &h.mul(&app, &e(t)), &ex(y0));
            }
            for (a1, a2, a3, k) in &d3 {
                for (t, x0, c) in &gx {
                    let av = product(h, &[&app, &h.s_inv(&e(*a3)), &e(*t), &e(*a1)]);
                    emit(&mut ydp.1, &(c * k), &av, &d.act(&e(*a2), &ex(*x0)));
                }
            }
        }
        Chirality::Ll => {
            for (t, x0, c) in &gx {
                for (a1, a2, k) in &d1 {
                    emit(&mut yd.0, &(c * k), &product(h, &[&e(*a1), &e(*t), &app]), &d.act(&e(*a2), &ex(*x0)));
                }
            }
            for (a1, a2, k) in &d1 {
                for (t, y0, c) in d.terms(&d.act(&e(*a1), &x)) {
                    emit(&mut yd.1, &(&c * k), &product(h, &[&e(t), &e(*a2), &app]), &ex(y0));
                }
            }
            for (t, y0, c) in d.terms(&d.act(&a_vec, &x)) {
                emit(&mut ydp.0, &c, &h.mul(&e(t), &app), &ex(y0));
            }
            for (a1, a2, a3, k) in &d3 {
                for (t, x0, c) in &gx {
                    let av = product(h, &[&e(*a1), &e(*t), &h.s(&e(*a3)), &app]);
                    emit(&mut ydp.1, &(c * k), &av, &d.act(&e(*a2), &ex(*x0)));
                }
            }
        }
        Chirality::Lr => {
            for (t, x0, c) in &gx {
                for (a1, a2, k) in &d1 {
                    emit(&mut yd.0, &(c * k), &product(h, &[&e(*a2), &e(*t), &app]), &d.act(&e(*a1), &ex(*x0)));
                }
            }
            for (a1, a2, k) in &d1 {
                for (t, y0, c) in d.terms(&d.act(&e(*a2), &x)) {
                    emit(&mut yd.1, &(&c * k), &product(h, &[&e(t), &e(*a1), &app]), &ex(y0));
                }
            }
            for (t, y0, c) in d.terms(&d.act(&a_vec, &x)) {
                emit(&mut ydp.0, &c, &h.mul(&app, &e(t)), &ex(y0));
            }
            for (a1, a2, a3, k) in &d3 {
                for (t, x0, c) in &gx {
                    let av = product(h, &[&app, &e(*a3), &e(*t), &h.s_inv(&e(*a1))]);
                    emit(&mut ydp.1, &(c * k), &av, &d.act(&e(*a2), &ex(*x0)));
                }
            }
        }
        Chirality::Rr => {
            for (t, x0, c) in &gx {
                for (a1, a2, k) in &d1 {
                    emit(&mut yd.0, &(c * k), &product(h, &[&app, &e(*t), &e(*a2)]), &d.act(&e(*a1), &ex(*x0)));
                }
            }
            for (a1, a2, k) in &d1 {
                for (t, y0, c) in d.terms(&d.act(&e(*a2), &x)) {
                    emit(&mut yd.1, &(&c * k), &product(h, &[&app, &e(*a1), &e(t)]), &ex(y0));
                }
            }
            for (t, y0, c) in d.terms(&d.act(&a_vec, &x)) {
                emit(&mut ydp.0, &c, &h.mul(&app, &e(t)), &ex(y0));
            }
            for (a1, a2, a3, k) in &d3 {
                for (t, x0, c) in &gx {
                    let av = product(h, &[&app, &h.s(&e(*a1)), &e(*t), &e(*a3)]);
                    emit(&mut ydp.1, &(c * k), &av, &d.act(&e(*a2), &ex(*x0)));
                }
            }
        }
    }
    [yd, ydp]
}

/// Verifies the action and the coaction, then both forms of the standard
/// Yetter–Drinfeld identity of the variant over all basis triples
/// `(a, a′, x)`, and whether the two forms agree.
pub fn check_yd_standard(d: &StandardYd) -> Report {
    let v = d.variant.name();
    let h = d.action.hopf();
    let mut r = Report::new(format!("s-{v}-YD over {}", h.name()));
    r.summarize("action", &d.action.check());
    r.summarize("coaction", &d.coaction.check());
    let d2 = h.delta2();
    let (n, nx) = (h.dim(), d.x().dim());
    let mut fails: [Option<String>; 2] = [None, None];
    'outer: for a in 0..n {
        for ap in 0..n {
            for xi in 0..nx {
                let sides = standard_sides(d, &d2, a, ap, xi);
                for (k, (l, rr)) in sides.iter().enumerate() {
                    if fails[k].is_none() && l != rr {
                        fails[k] = Some(format!("a = {}, a' = {}, x = {}", h.label(a), h.label(ap), d.x().label(xi)));
                    }
                }
                if fails.iter().all(Option::is_some) {
                    break 'outer;
                }
            }
        }
    }
    let names = [format!("s-{v}-YD"), format!("s-{v}-YD'")];
    for (name, f) in names.iter().zip(fails.iter()) {
        match f {
            None => r.pass(name.clone()),
            Some(at) => r.fail(name.clone(), at.clone()),
        }
    }
    r.record("forms agree", fails[0].is_none() == fails[1].is_none(), "one form holds and the other fails");
    r
}

/// Both forms of standard braided commutativity over all basis pairs.
pub fn check_bc_standard(d: &StandardYd) -> Report {
    let v = d.variant.name();
    let h = d.action.hopf();
    let x = d.x();
    let nx = x.dim();
    let mut r = Report::new(format!("s-{v}-BC over {}", h.name()));
    let e = |i: usize| h.e(i);
    let ex = |i: usize| Vector::basis(nx, i);
    let mut fails: [Option<String>; 2] = [None, None];
    for i in 0..nx {
        for j in 0..nx {
            let (xv, yv) = (ex(i), ex(j));
            let xy = x.mul(&xv, &yv);
            let mut first = Vector::zero(nx);
            let mut second = Vector::zero(nx);
            match d.variant {
                Chirality::Rl => {
                    for (t, x0, c) in d.terms(&xv) {
                        first.add_scaled(&c, &x.mul(&d.act(&e(t), &yv), &ex(x0)));
                    }
                    for (t, y0, c) in d.terms(&yv) {
                        second.add_scaled(&c, &x.mul(&ex(y0), &d.act(&h.s(&e(t)), &xv)));
                    }
                }
                Chirality::Ll => {
                    for (t, x0, c) in d.terms(&xv) {
                        first.add_scaled(&c, &x.mul(&d.act(&e(t), &yv), &ex(x0)));
                    }
                    for (t, y0, c) in d.terms(&yv) {
                        second.add_scaled(&c, &x.mul(&ex(y0), &d.act(&h.s_inv(&e(t)), &xv)));
                    }
                }
                Chirality::Lr => {
                    for (t, x0, c) in d.terms(&xv) {
                        first.add_scaled(&c, &x.mul(&d.act(&h.s(&e(t)), &yv), &ex(x0)));
                    }
                    for (t, y0, c) in d.terms(&yv) {
                        second.add_scaled(&c, &x.mul(&ex(y0), &d.act(&e(t), &xv)));
                    }
                }
                Chirality::Rr => {
                    for (t, x0, c) in d.terms(&xv) {
                        first.add_scaled(&c, &x.mul(&d.act(&h.s_inv(&e(t)), &yv), &ex(x0)));
                    }
                    for (t, y0, c) in d.terms(&yv) {
                        second.add_scaled(&c, &x.mul(&ex(y0), &d.act(&e(t), &xv)));
                    }
                }
            }
            for (k, side) in [first, second].iter().enumerate() {
                if fails[k].is_none() && *side != xy {
                    fails[k] = Some(format!("x = {}, y = {}", x.label(i), x.label(j)));
                }
            }
        }
    }
    let names = [format!("s-{v}-BC"), format!("s-{v}-BC'")];
    for (name, f) in names.iter().zip(fails.iter()) {
        match f {
            None => r.pass(name.clone()),
            Some(at) => r.fail(name.clone(), at.clone()),
        }
    }
    r.record("forms agree", fails[0].is_none() == fails[1].is_none(), "one form holds and the other fails");
    r
}

/// The standard data of an only-coaction pair: `α` is kept and `β` becomes
/// the action `x ◁ a = (p(a, ·)⊗id)β(x)` or `a ▷ x = (id⊗p(a, ·))β(x)`.
pub fn convert_oc_to_standard(yd: &YdPair) -> StandardYd {
    let p = &yd.pairing;
    let n = p.dim();
    let nx = yd.dim();
    let variant = yd.chirality.standard();
    let (action_side, _) = variant.sides();
    let images: Vec<Vector> = (0..nx).map(|i| yd.beta.coact(&Vector::basis(nx, i))).collect();
    let (dims, leg) = match yd.beta.side() {
        Side::Left => ([n, nx], 0),
        Side::Right => ([nx, n], 1),
    };
    let action = Action::from_fn(p.a().clone(), yd.x.clone(), action_side, |a, x| {
        contract_leg(&images[x], &dims, leg, &p.left_functional(&Vector::basis(n, a)))
    });
    StandardYd::new(action, yd.alpha.clone(), variant)
}

/// Inverse of [`convert_oc_to_standard`]: `β(x) = Σᵢ bᵢ ⊗ (x ◁ aᵢ)` for a
/// right action and `β(x) = Σᵢ (aᵢ ▷ x) ⊗ bᵢ` for a left one, with
/// `U = Σᵢ aᵢ⊗bᵢ`.
pub fn convert_standard_to_oc(d: &StandardYd, p: &Pairing) -> YdPair {
    let n = p.dim();
    let nx = d.x().dim();
    let chirality = Chirality::from_standard(d.variant);
    let (_, beta_side) = chirality.sides();
    let map = LinearMap::from_fn(nx, n * nx, |i| {
        let x = Vector::basis(nx, i);
        let mut out = Vector::zero(n * nx);
        for (flat, c) in p.u().iter() {
            let (a, b) = (Vector::basis(n, flat / n), Vector::basis(n, flat % n));
            let acted = d.action.act(&a, &x);
            let term = match beta_side {
                Side::Left => b.kron(&acted),
                Side::Right => acted.kron(&b),
            };
            out.add_scaled(c, &term);
        }
        out
    });
    let beta = Coaction::new(p.b().clone(), d.x().clone(), map, beta_side);
    YdPair::new(p.clone(), d.coaction.clone(), beta, chirality, "standard data")
}

/// The coaction `γ = (id⊗β)α: X → A^op⊗B⊗X` of the codouble `𝒯(p)` for an
/// `Ll` pair.
pub fn codouble_coaction(yd: &YdPair) -> Result<Coaction, Report> {
    assert_eq!(yd.chirality, Chirality::Ll, "defined for ll pairs");
    let (t, r) = drinfeld_codouble(&yd.pairing)?;
    if !r.passed() {
        return Err(r);
    }
    let id_a = LinearMap::identity(yd.pairing.dim());
    let gamma = kron_after(&[&id_a, yd.beta.map()], yd.alpha.map());
    Ok(Coaction::new(t, yd.x.clone(), gamma, Side::Left))
}

/// The right action `x ◁ (b⋈a) = (x ◁_α b) ◁_β a` of `𝒟(p̂) = B^co⋈A` on
/// `X` for an `Ll` pair, where `x ◁_α b = p(x₋₁, b) x₀` and
/// `x ◁_β a = (p(a, ·)⊗id)β(x)`.
pub fn double_action(yd: &YdPair) -> Action {
    assert_eq!(yd.chirality, Chirality::Ll, "defined for ll pairs");
    let p = &yd.pairing;
    let n = p.dim();
    let nx = yd.dim();
    let d = drinfeld_double(&p.flip_coop());
    let by_alpha: Vec<Vector> = (0..nx).map(|i| yd.alpha.coact(&Vector::basis(nx, i))).collect();
    let dims = [n, nx];
    Action::from_fn(d, yd.x.clone(), Side::Right, |ba, x| {
        let (b, a) = (ba / n, ba % n);
        let y = contract_leg(&by_alpha[x], &dims, 0, &p.right_functional(&Vector::basis(n, b)));
        let by_beta = yd.beta.map().apply(&y);
        contract_leg(&by_beta, &dims, 0, &p.left_functional(&Vector::basis(n, a)))
    })
}

/// Splits a left `𝒯(p)`-coaction on `X` into `α = (id⊗ε_B⊗id)γ` and
/// `β = (ε_A⊗id⊗id)γ`.
pub fn split_codouble_coaction(gamma: &Coaction, p: &Pairing) -> YdPair {
    let n = p.dim();
    let nx = gamma.alg().dim();
    let id_x = LinearMap::identity(nx);
    let id_n = LinearMap::identity(n);
    let alpha_map = kron_after(&[&id_n, p.b().counit(), &id_x], gamma.map());
    let beta_map = kron_after(&[p.a().counit(), &id_n, &id_x], gamma.map());
    let alpha = Coaction::new(p.a().opposite(), gamma.alg().clone(), alpha_map, Side::Left);
    let beta = Coaction::new(p.b().clone(), gamma.alg().clone(), beta_map, Side::Left);
    YdPair::new(p.clone(), alpha, beta, Chirality::Ll, "split codouble coaction")
}

/// For an `Ll` pair: builds `γ`, checks it is a `𝒯(p)`-coaction, builds the
/// `𝒟(p̂)`-action from the composite formula, compares it with the action
/// dual to `γ` under the double–codouble pairing, rebuilds `γ` from the
/// action and that pairing's multiplier, and splits `γ` back into `(α, β)`.
pub fn check_double_codouble_functor(yd: &YdPair) -> Report {
    let p = &yd.pairing;
    let mut r = Report::new(format!("double/codouble functor over {}|{}", p.a().name(), p.b().name()));
    let gamma = match codouble_coaction(yd) {
        Ok(g) => g,
        Err(e) => {
            r.summarize("codouble", &e);
            return r;
        }
    };
    r.summarize("gamma coaction", &gamma.check());
    let act = double_action(yd);
    r.summarize("double action", &act.check());
    let (big, br) = match double_codouble_pairing(p) {
        Ok(v) => v,
        Err(e) => {
            r.summarize("double/codouble pairing", &e);
            return r;
        }
    };
    r.summarize("double/codouble pairing", &br);
    let nx = yd.dim();
    let m = big.dim();
    let gx: Vec<Vector> = (0..nx).map(|i| gamma.coact(&Vector::basis(nx, i))).collect();
    let dual = LinearMap::from_fn(nx * m, nx, |flat| {
        let (x, d) = (flat / m, flat % m);
        contract_leg(&gx[x], &[m, nx], 0, &big.left_functional(&Vector::basis(m, d)))
    });
    r.maps_equal("composite action = dual of gamma", act.map(), &dual, &|i| format!("basis {i}"));
    let rebuilt = LinearMap::from_fn(nx, m * nx, |i| {
        let x = Vector::basis(nx, i);
        let mut out = Vector::zero(m * nx);
        for (flat, c) in big.u().iter() {
            let (d, t) = (flat / m, flat % m);
            out.add_scaled(c, &Vector::basis(m, t).kron(&act.act(&Vector::basis(m, d), &x)));
        }
        out
    });
    r.maps_equal("gamma rebuilt from the action", &rebuilt, gamma.map(), &lbl(&yd.x));
    let split = split_codouble_coaction(&gamma, p);
    r.maps_equal("split recovers alpha", split.alpha.map(), yd.alpha.map(), &lbl(&yd.x));
    r.maps_equal("split recovers beta", split.beta.map(), yd.beta.map(), &lbl(&yd.x));
    r
}

/// The dual pair `(X^op, β^op, α^op)` over `p̄` of an `Ll` pair, where `X^op`
/// carries the involution `x ↦ γ(x*)`. With involutions present, `γ` must
/// satisfy `α∘γ = (S⁻²⊗γ)α` and `β∘γ = (S⁻²⊗γ)β`.
pub fn dualize_yd(yd: &YdPair, gamma: Option<&LinearMap>) -> Result<YdPair, Report> {
    assert_eq!(yd.chirality, Chirality::Ll, "defined for ll pairs");
    let p = &yd.pairing;
    let nx = yd.dim();
    let id = LinearMap::identity(nx);
    let gamma = gamma.cloned().unwrap_or_else(|| id.clone());
    let mut r = Report::new("dualization");
    if yd.x.star().is_some() {
        for (name, c) in [("alpha compatible with gamma", &yd.alpha), ("beta compatible with gamma", &yd.beta)] {
            let s = c.hopf().antipode_inv();
            let s2 = s.compose(s);
            r.maps_equal(name, &c.map().compose(&gamma), &kron_after(&[&s2, &gamma], c.map()), &lbl(&yd.x));
        }
    }
    if !r.passed() {
        return Err(r);
    }
    let x_op = opposite_algebra(&yd.x, &gamma);
    let q = p.flip();
    let alpha = Coaction::new(p.b().opposite(), x_op.clone(), yd.beta.map().clone(), Side::Left);
    let beta = Coaction::new(p.a().clone(), x_op, yd.alpha.map().clone(), Side::Left);
    Ok(YdPair::new(q, alpha, beta, Chirality::Ll, format!("dual of {}", yd.provenance)))
}

/// Transports an `Ll` pair along Hopf isomorphisms `f: A → A′` and
/// `g: B → B′`: the new coactions are `(f⊗id)α` and `(g⊗id)β` and the new
/// pairing is `(a′, b′) ↦ p(f⁻¹a′, g⁻¹b′)`.
pub fn transport_yd(yd: &YdPair, f: &LinearMap, a2: &Hopf, g: &LinearMap, b2: &Hopf) -> Result<YdPair, Report> {
    assert_eq!(yd.chirality, Chirality::Ll, "defined for ll pairs");
    let p = &yd.pairing;
    let mut r = Report::new("transport");
    r.summarize("f Hopf isomorphism", &check_hopf_iso(f, p.a(), a2, "f"));
    r.summarize("g Hopf isomorphism", &check_hopf_iso(g, p.b(), b2, "g"));
    if !r.passed() {
        return Err(r);
    }
    let f_inv = f.inverse().expect("checked bijective");
    let g_inv = g.inverse().expect("checked bijective");
    let matrix = f_inv.transpose().compose(p.matrix()).compose(&g_inv);
    let q = match Pairing::new(a2.clone(), b2.clone(), matrix) {
        Ok(q) => q,
        Err(_) => {
            r.fail("transported pairing", "not a pairing of the given dimensions");
            return Err(r);
        }
    };
    let id = LinearMap::identity(yd.dim());
    let alpha = Coaction::new(a2.opposite(), yd.x.clone(), kron_after(&[f, &id], yd.alpha.map()), Side::Left);
    let beta = Coaction::new(b2.clone(), yd.x.clone(), kron_after(&[g, &id], yd.beta.map()), Side::Left);
    Ok(YdPair::new(q, alpha, beta, Chirality::Ll, format!("transport of {}", yd.provenance)))
}

/// The four corners built from an `Rl` pair over `p`: itself, `(X, β, α)` of
/// chirality `Lr` over `p̄`, `(X, (S_A⁻¹⊗id)Σα, β)` of chirality `Ll` over
/// `p`, and `(X, (id⊗S_B⁻¹)Σβ, α)` of chirality `Rr` over `p̄`.
pub fn equivalence_square(yd: &YdPair) -> [YdPair; 4] {
    assert_eq!(yd.chirality, Chirality::Rl, "defined for rl pairs");
    let p = &yd.pairing;
    let q = p.flip();
    let n = p.dim();
    let nx = yd.dim();
    let id = LinearMap::identity(nx);
    let x = yd.x.clone();
    let lr = YdPair::new(q.clone(), yd.beta.clone(), yd.alpha.clone(), Chirality::Lr, "square lr corner");
    let ll_alpha_map = kron_after(&[p.a().antipode_inv(), &id], &flip(nx, n).compose(yd.alpha.map()));
    let ll_alpha = Coaction::new(p.a().opposite(), x.clone(), ll_alpha_map, Side::Left);
    let ll = YdPair::new(p.clone(), ll_alpha, yd.beta.clone(), Chirality::Ll, "square ll corner");
    let rr_alpha_map = kron_after(&[&id, p.b().antipode_inv()], &flip(n, nx).compose(yd.beta.map()));
    let rr_alpha = Coaction::new(p.b().opposite(), x, rr_alpha_map, Side::Right);
    let rr = YdPair::new(q, rr_alpha, yd.alpha.clone(), Chirality::Rr, "square rr corner");
    [yd.clone(), lr, ll, rr]
}

/// Evaluates the four corners of [`equivalence_square`] and compares their
/// Yetter–Drinfeld and braided commutativity verdicts.
pub fn check_equivalence_square(yd: &YdPair) -> Report {
    let mut r = Report::new("equivalence square");
    let corners = equivalence_square(yd);
    let mut yd_verdicts = Vec::new();
    let mut bc_verdicts = Vec::new();
    for c in &corners {
        let y = check_yd_only_coaction(c);
        let b = check_braided_commutative(c);
        r.summarize(format!("{} corner YD", c.chirality.name()), &y);
        yd_verdicts.push(y.passed());
        bc_verdicts.push(b.passed());
    }
    r.record("YD verdicts agree", yd_verdicts.iter().all(|&v| v == yd_verdicts[0]), format!("{yd_verdicts:?}"));
    r.record("BC verdicts agree", bc_verdicts.iter().all(|&v| v == bc_verdicts[0]), format!("{bc_verdicts:?}"));
    r
}
