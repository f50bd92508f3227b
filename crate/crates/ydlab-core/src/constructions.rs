//! Algebras and Hopf algebras built from pairings, actions and coactions:
//! smash products, Heisenberg algebras and their Lu anti-isomorphisms, crossed
//! products, twisted tensor (co)products, the Drinfeld double and codouble and
//! the pairing between them.
//!
//! Leg conventions: a pair `x ⊗ y` of algebras of dimensions `m`, `n` is stored
//! at the flat index `i·n + j`. The smash product `X # H` lives on `X⊗H`, the
//! right smash product `B # X` on `B⊗X`, the Heisenberg algebra `ℋ(p)` on `A⊗B`,
//! the double `A ⋈ B^op` on `A⊗B` and the codouble on `A^op⊗B`. A twisted
//! comultiplication is `Δ_T = (id⊗T⊗id)(Δ_A⊗Δ_B)` with the legs of `Δ_A⊗Δ_B`
//! written in the order `A, A, B, B`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::{duality_functor, Action, Coaction, Side};
use crate::algebra::{first_non_antimultiplicative, first_non_multiplicative, first_non_star, tensor_algebra, Algebra, AlgebraOps, Star, TensorAlgebra};
use crate::hopf::{check_hopf_iso, Hopf};
use crate::linear::{apply_kron, contract_leg, flip, kron_after, permute_legs, sparse_solve_many, LinearMap, Vector};
use crate::pairing::Pairing;
use crate::report::Report;

fn pair_labels(a: &Algebra, b: &Algebra, sep: &str) -> Vec<String> {
    let mut out = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            out.push(format!("{}{sep}{}", a.label(i), b.label(j)));
        }
    }
    out
}

/// Gives `alg`, built on `X⊗Y` from two subalgebras `x⊗1` and `1⊗y`, the
/// involution `(x⊗y)* = (1⊗y*)(x*⊗1)` when both factors carry one.
fn with_reversed_star(alg: Algebra, x: &Algebra, y: &Algebra) -> Algebra {
    let (Some(sx), Some(sy)) = (x.star(), y.star()) else {
        return alg;
    };
    let images = (0..x.dim())
        .flat_map(|i| (0..y.dim()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let left = x.unit().kron(sy.image(j));
            let right = sx.image(i).kron(&y.unit());
            alg.mul(&left, &right)
        })
        .collect();
    alg.with_star(Star::new(images))
}

/// The smash product `X # H` of a left module algebra: `X⊗H` with
/// `(x#a)(y#a′) = x(a₁ ▷ y) # a₂a′` and `(x#a)* = (a*₁ ▷ x*) # a*₂`.
///
/// Fails with the action report when the action does not pass its checks.
pub fn smash_product(act: &Action) -> Result<Algebra, Report> {
    assert_eq!(act.side(), Side::Left, "left action expected");
    let r = act.check();
    if !r.passed() {
        return Err(r);
    }
    let h = act.hopf();
    let x = act.alg();
    let (nh, nx) = (h.dim(), x.dim());
    let n = nx * nh;
    let alg = Algebra::from_fn(
        pair_labels(x, h.alg(), "#"),
        |p, q| {
            let (xi, ai) = (p / nh, p % nh);
            let (yj, aj) = (q / nh, q % nh);
            let d = h.comul(&h.e(ai));
            let mut out = Vector::zero(n);
            for (f, c) in d.iter() {
                let left = x.mul(&Vector::basis(nx, xi), &act.act(&h.e(f / nh), &Vector::basis(nx, yj)));
                let right = h.alg().mul_basis(f % nh, aj);
                out.add_scaled(c, &left.kron(right));
            }
            out
        },
        x.unit().kron(&h.one()),
    );
    Ok(with_reversed_star(alg, x, h.alg()))
}

/// The right smash product `B # X` of a right module algebra: `B⊗X` with
/// `(b#x)(b′#x′) = bb′₁ # (x ◁ b′₂)x′` and `(b#x)* = b*₁ # (x* ◁ b*₂)`.
///
/// Fails with the action report when the action does not pass its checks.
pub fn right_smash_product(act: &Action) -> Result<Algebra, Report> {
    assert_eq!(act.side(), Side::Right, "right action expected");
    let r = act.check();
    if !r.passed() {
        return Err(r);
    }
    let h = act.hopf();
    let x = act.alg();
    let (nh, nx) = (h.dim(), x.dim());
    let n = nh * nx;
    let alg = Algebra::from_fn(
        pair_labels(h.alg(), x, "#"),
        |p, q| {
            let (bi, xi) = (p / nx, p % nx);
            let (bj, yj) = (q / nx, q % nx);
            let d = h.comul(&h.e(bj));
            let mut out = Vector::zero(n);
            for (f, c) in d.iter() {
                let left = h.alg().mul_basis(bi, f / nh);
                let right = x.mul(&act.act(&h.e(f % nh), &Vector::basis(nx, xi)), &Vector::basis(nx, yj));
                out.add_scaled(c, &left.kron(&right));
            }
            out
        },
        h.one().kron(&x.unit()),
    );
    Ok(with_reversed_star(alg, h.alg(), x))
}

/// The Heisenberg algebra `ℋ(p) = A # B` for the left action `b ▶ a = a₁ p(a₂, b)`.
pub fn heisenberg(p: &Pairing) -> Algebra {
    let act = Action::from_fn(p.b().clone(), p.a().alg().clone(), Side::Left, |b, a| {
        let n = p.dim();
        p.b_on_a(&Vector::basis(n, b), &Vector::basis(n, a))
    });
    smash_product(&act).unwrap_or_else(|r| panic!("regular action of a pairing failed its checks:\n{r}"))
}

/// Checks the commutation relations `ba = (b₁ ▶ a)b₂ = a₁(b ◀ a₂)` and
/// `ab = b₂(S⁻¹(b₁) ▶ a) = (b ◀ S⁻¹(a₂))a₁` inside `h = ℋ(p)` for all basis pairs.
pub fn check_heisenberg_relations(p: &Pairing, h: &Algebra) -> Report {
    let mut r = Report::new(format!("H({}|{})", p.a().name(), p.b().name()));
    let n = p.dim();
    let (a_alg, b_alg) = (p.a(), p.b());
    let ia = |a: &Vector| a.kron(&b_alg.one());
    let ib = |b: &Vector| a_alg.one().kron(b);
    let e = |i: usize| Vector::basis(n, i);
    let mut bad: [Option<(usize, usize)>; 4] = [None; 4];
    for bi in 0..n {
        let db = b_alg.comul(&e(bi));
        for ai in 0..n {
            let da = a_alg.comul(&e(ai));
            let ba = h.mul(&ib(&e(bi)), &ia(&e(ai)));
            let ab = h.mul(&ia(&e(ai)), &ib(&e(bi)));
            let mut first = Vector::zero(n * n);
            let mut third = Vector::zero(n * n);
            for (f, c) in db.iter() {
                let (b1, b2) = (e(f / n), e(f % n));
                first.add_scaled(c, &h.mul(&ia(&p.b_on_a(&b1, &e(ai))), &ib(&b2)));
                third.add_scaled(c, &h.mul(&ib(&b2), &ia(&p.b_on_a(&b_alg.s_inv(&b1), &e(ai)))));
            }
            let mut second = Vector::zero(n * n);
            let mut fourth = Vector::zero(n * n);
            for (f, c) in da.iter() {
                let (a1, a2) = (e(f / n), e(f % n));
                second.add_scaled(c, &h.mul(&ia(&a1), &ib(&p.b_right_a(&e(bi), &a2))));
                fourth.add_scaled(c, &h.mul(&ib(&p.b_right_a(&e(bi), &a_alg.s_inv(&a2))), &ia(&a1)));
            }
            for (k, (lhs, rhs)) in [(&ba, &first), (&ba, &second), (&ab, &third), (&ab, &fourth)].into_iter().enumerate() {
                if bad[k].is_none() && lhs != rhs {
                    bad[k] = Some((bi, ai));
                }
            }
        }
    }
    let names = ["ba = (b1▶a)b2", "ba = a1(b◀a2)", "ab = b2(S⁻¹(b1)▶a)", "ab = (b◀S⁻¹(a2))a1"];
    for (name, hit) in names.iter().zip(bad) {
        match hit {
            None => r.pass(*name),
            Some((bi, ai)) => r.fail(*name, format!("b = {}, a = {}", b_alg.label(bi), a_alg.label(ai))),
        }
    }
    r
}

/// The Lu maps `ℒ(b#a) = S_A⁻¹(a) # S_B(b)` and `ℒ′(b#a) = S_A(a) # S_B⁻¹(b)`
/// from `ℋ(p̄) = B # A` to `ℋ(p) = A # B`.
pub fn lu_anti_isos(p: &Pairing) -> (LinearMap, LinearMap) {
    let n = p.dim();
    let (a, b) = (p.a(), p.b());
    let l = LinearMap::from_fn(n * n, n * n, |f| a.s_inv(&a.e(f % n)).kron(&b.s(&b.e(f / n))));
    let l2 = LinearMap::from_fn(n * n, n * n, |f| a.s(&a.e(f % n)).kron(&b.s_inv(&b.e(f / n))));
    (l, l2)
}

/// Verifies that both Lu maps are bijective anti-homomorphisms and, when both
/// antipodes are involutive, that they coincide and reverse the involutions.
pub fn check_lu_anti_isos(p: &Pairing) -> Report {
    let mut r = Report::new(format!("Lu maps {}|{}", p.a().name(), p.b().name()));
    let n = p.dim();
    let h = heisenberg(p);
    let hbar = heisenberg(&p.flip());
    let (l, l2) = lu_anti_isos(p);
    for (name, m) in [("L", &l), ("L'", &l2)] {
        r.record(format!("{name} bijective"), m.rank() == n * n, format!("rank {}", m.rank()));
        match first_non_antimultiplicative(m, &hbar, &h) {
            None => r.pass(format!("{name} anti-multiplicative")),
            Some((i, j)) => r.fail(format!("{name} anti-multiplicative"), format!("u = {}, v = {}", hbar.label(i), hbar.label(j))),
        }
    }
    let id = LinearMap::identity(n);
    let involutive = |x: &Hopf| x.antipode().compose(x.antipode()) == id;
    if involutive(p.a()) && involutive(p.b()) {
        r.maps_equal("L = L'", &l, &l2, &|i| String::from(hbar.label(i)));
        if h.star().is_some() && hbar.star().is_some() {
            match first_non_star(&l, &hbar, &h) {
                None => r.pass("L star"),
                Some(i) => r.fail("L star", format!("x = {}", hbar.label(i))),
            }
        }
    }
    r
}

/// A crossed product presented inside `ℋ(p̄)⊗X`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    /// `ℋ(p̄) = B # A`.
    pub heisenberg_bar: Algebra,
    /// The right smash product `B # X` for `x ◁ b = p(x₋₁, b)x₀`.
    pub smash: Algebra,
    /// `b#x ↦ (b⊗1)Γ(x)`, from the smash product into `ℋ(p̄)⊗X`; the inverse of
    /// `ℐ_Γ` on its image.
    pub embedding: LinearMap,
    /// Rank, product formula, multiplicativity and involution checks.
    pub report: Report,
}

/// The crossed product of a left coaction `Γ` of `A` on `X`: the span of the
/// elements `(b⊗1)Γ(x)` in `ℋ(p̄)⊗X`, compared with the right smash product
/// `B # X` through `b#x ↦ (b⊗1)Γ(x)`.
pub fn crossed_product(c: &Coaction, p: &Pairing) -> Result<CrossedProduct, Report> {
    assert_eq!(c.side(), Side::Left, "left coaction expected");
    let mut r = Report::new(format!("crossed product of {} by {}", c.hopf().name(), p.b().name()));
    let cr = c.check();
    r.summarize("coaction", &cr);
    if !cr.passed() {
        return Err(r);
    }
    let n = p.dim();
    let x = c.alg();
    let nx = x.dim();
    let hbar = heisenberg(&p.flip());
    let smash = right_smash_product(&duality_functor(c, p)).map_err(|ar| {
        let mut r = r.clone();
        r.summarize("induced action", &ar);
        r
    })?;
    let big = TensorAlgebra::new(alloc::vec![&hbar, x]);
    // a ⊗ y ↦ (1#a) ⊗ y
    let lift = LinearMap::from_fn(n, n * n, |a| p.b().one().kron(&Vector::basis(n, a)));
    let idx = LinearMap::identity(nx);
    let gamma = kron_after(&[&lift, &idx], c.map());
    let b_part = |b: &Vector| b.kron(&p.a().one()).kron(&x.unit());
    let element = |b: &Vector, xv: &Vector| big.mul(&b_part(b), &gamma.apply(xv));
    let embedding = LinearMap::from_fn(n * nx, n * n * nx, |f| element(&Vector::basis(n, f / nx), &Vector::basis(nx, f % nx)));
    let rank = embedding.rank();
    r.record("rank", rank == n * nx, format!("rank {rank}, expected {}", n * nx));

    let mut bad = None;
    'q: for f in 0..n * nx {
        let (b, xi) = (Vector::basis(n, f / nx), Vector::basis(nx, f % nx));
        let cx = c.coact(&xi);
        for g in 0..n * nx {
            let (b2, yi) = (Vector::basis(n, g / nx), Vector::basis(nx, g % nx));
            let lhs = big.mul(embedding.column(f), embedding.column(g));
            let mut rhs = Vector::zero(n * n * nx);
            for (t, coef) in cx.iter() {
                let (a, x0) = (Vector::basis(n, t / nx), Vector::basis(nx, t % nx));
                let bb = p.b().mul(&b, &p.a_on_b(&a, &b2));
                rhs.add_scaled(coef, &element(&bb, &x.mul(&x0, &yi)));
            }
            if lhs != rhs {
                bad = Some((f, g));
                break 'q;
            }
        }
    }
    match bad {
        None => r.pass("product formula"),
        Some((f, g)) => r.fail("product formula", format!("{} and {}", smash.label(f), smash.label(g))),
    }
    match first_non_multiplicative(&embedding, &smash, &big) {
        None => r.pass("multiplicative"),
        Some((i, j)) => r.fail("multiplicative", format!("{} and {}", smash.label(i), smash.label(j))),
    }
    if smash.star().is_some() && big.star_of(&big.unit()).is_some() {
        match first_non_star(&embedding, &smash, &big) {
            None => r.pass("star"),
            Some(i) => r.fail("star", format!("x = {}", smash.label(i))),
        }
    }
    Ok(CrossedProduct { heisenberg_bar: hbar, smash, embedding, report: r })
}

/// Whether a map twists multiplications or comultiplications.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistDirection {
    /// `T: B⊗A → A⊗B` for the twisted product on `A⊗B`.
    Twisting,
    /// `T′: A⊗B → B⊗A` for the twisted coproduct on `A⊗B`.
    Cotwisting,
}

/// A twisting or cotwisting map between two Hopf algebras.
#[derive(Clone, Debug)]
pub struct TwistingMap {
    /// The matrix of `T` or `T′`.
    pub map: LinearMap,
    /// Which kind of map it is.
    pub direction: TwistDirection,
}

/// Checks the laws of the map in the direction it is tagged with.
pub fn check_twisting(t: &TwistingMap, a: &Hopf, b: &Hopf) -> Report {
    match t.direction {
        TwistDirection::Twisting => check_twisting_laws(&t.map, a.alg(), b.alg()),
        TwistDirection::Cotwisting => check_cotwisting_laws(&t.map, a, b),
    }
}

/// Checks that `T: B⊗A → A⊗B` is a twisting map:
/// `T(id⊗m_A) = (m_A⊗id)(id⊗T)(T⊗id)`, `T(m_B⊗id) = (id⊗m_B)(T⊗id)(id⊗T)`,
/// `T(1⊗a) = a⊗1` and `T(b⊗1) = 1⊗b`.
pub fn check_twisting_laws(t: &LinearMap, a: &Algebra, b: &Algebra) -> Report {
    let mut r = Report::new("twisting map");
    let (na, nb) = (a.dim(), b.dim());
    if t.dom() != nb * na || t.cod() != na * nb {
        r.fail("shape", format!("{}x{}", t.cod(), t.dom()));
        return r;
    }
    let (ida, idb) = (LinearMap::identity(na), LinearMap::identity(nb));
    let (ma, mb) = (a.mult_map(), b.mult_map());
    let mut bad = None;
    'one: for bi in 0..nb {
        for i in 0..na {
            for j in 0..na {
                let lhs = t.apply(&Vector::basis(nb, bi).kron(a.mul_basis(i, j)));
                let step = t.apply(&Vector::basis(nb, bi).kron(&Vector::basis(na, i))).kron(&Vector::basis(na, j));
                let step = apply_kron(&[&ida, t], &step);
                let rhs = apply_kron(&[&ma, &idb], &step);
                if lhs != rhs {
                    bad = Some(format!("b = {}, a = {}, a′ = {}", b.label(bi), a.label(i), a.label(j)));
                    break 'one;
                }
            }
        }
    }
    r.record("T(id⊗m_A) law", bad.is_none(), bad.unwrap_or_default());
    let mut bad = None;
    'two: for i in 0..nb {
        for j in 0..nb {
            for ai in 0..na {
                let lhs = t.apply(&b.mul_basis(i, j).kron(&Vector::basis(na, ai)));
                let step = Vector::basis(nb, i).kron(&t.apply(&Vector::basis(nb, j).kron(&Vector::basis(na, ai))));
                let step = apply_kron(&[t, &idb], &step);
                let rhs = apply_kron(&[&ida, &mb], &step);
                if lhs != rhs {
                    bad = Some(format!("b = {}, b′ = {}, a = {}", b.label(i), b.label(j), a.label(ai)));
                    break 'two;
                }
            }
        }
    }
    r.record("T(m_B⊗id) law", bad.is_none(), bad.unwrap_or_default());
    let bad = (0..na).find(|&i| t.apply(&b.unit().kron(&Vector::basis(na, i))) != Vector::basis(na, i).kron(&b.unit()));
    r.record("T(1⊗a) = a⊗1", bad.is_none(), bad.map(|i| format!("a = {}", a.label(i))).unwrap_or_default());
    let bad = (0..nb).find(|&i| t.apply(&Vector::basis(nb, i).kron(&a.unit())) != a.unit().kron(&Vector::basis(nb, i)));
    r.record("T(b⊗1) = 1⊗b", bad.is_none(), bad.map(|i| format!("b = {}", b.label(i))).unwrap_or_default());
    r
}

/// Checks that `T′: A⊗B → B⊗A` is a cotwisting map: a bijective algebra map
/// with `(id⊗Δ_A)T′ = (T′⊗id)(id⊗T′)(Δ_A⊗id)` and
/// `(Δ_B⊗id)T′ = (id⊗T′)(T′⊗id)(id⊗Δ_B)`.
pub fn check_cotwisting_laws(t: &LinearMap, a: &Hopf, b: &Hopf) -> Report {
    let mut r = Report::new("cotwisting map");
    let (na, nb) = (a.dim(), b.dim());
    if t.dom() != na * nb || t.cod() != nb * na {
        r.fail("shape", format!("{}x{}", t.cod(), t.dom()));
        return r;
    }
    r.record("bijective", t.rank() == na * nb, format!("rank {}", t.rank()));
    let ab = TensorAlgebra::new(alloc::vec![a.alg(), b.alg()]);
    let ba = TensorAlgebra::new(alloc::vec![b.alg(), a.alg()]);
    let lbl = |f: usize| format!("{}(x){}", a.label(f / nb), b.label(f % nb));
    match first_non_multiplicative(t, &ab, &ba) {
        None => r.pass("multiplicative"),
        Some((i, j)) => r.fail("multiplicative", format!("{} and {}", lbl(i), lbl(j))),
    }
    r.vectors_equal("unital", &t.apply(&ab.unit()), &ba.unit());
    let (ida, idb) = (LinearMap::identity(na), LinearMap::identity(nb));
    let lhs = kron_after(&[&idb, a.delta()], t);
    let rhs = t.kron(&ida).compose(&ida.kron(t)).compose(&a.delta().kron(&idb));
    r.maps_equal("(id⊗Δ_A)T′ law", &lhs, &rhs, &lbl);
    let lhs = kron_after(&[b.delta(), &ida], t);
    let rhs = idb.kron(t).compose(&t.kron(&idb)).compose(&ida.kron(b.delta()));
    r.maps_equal("(Δ_B⊗id)T′ law", &lhs, &rhs, &lbl);
    r
}

/// The twisted tensor product algebra on `A⊗B`: `m_T = (m_A⊗m_B)(id⊗T⊗id)`.
pub fn twisted_product(t: &LinearMap, a: &Algebra, b: &Algebra, sep: &str) -> Algebra {
    let (na, nb) = (a.dim(), b.dim());
    Algebra::from_fn(
        pair_labels(a, b, sep),
        |p, q| {
            let (ai, bi) = (p / nb, p % nb);
            let (aj, bj) = (q / nb, q % nb);
            let mid = t.apply(&Vector::basis(nb, bi).kron(&Vector::basis(na, aj)));
            let mut out = Vector::zero(na * nb);
            for (f, c) in mid.iter() {
                out.add_scaled(c, &a.mul_basis(ai, f / nb).kron(b.mul_basis(f % nb, bj)));
            }
            out
        },
        a.unit().kron(&b.unit()),
    )
}

/// The twisted comultiplication `Δ_T = (id⊗T′⊗id)(Δ_A⊗Δ_B)` on `A⊗B`.
pub fn twisted_coproduct(t: &LinearMap, a: &Hopf, b: &Hopf) -> LinearMap {
    let (na, nb) = (a.dim(), b.dim());
    let mid = LinearMap::identity(na).kron(t).kron(&LinearMap::identity(nb));
    mid.compose(&a.delta().kron(b.delta()))
}

/// Solves for the antipode of a bialgebra as `S(a) = (ε⊗id)T₁⁻¹(a⊗1)` with the
/// Galois map `T₁(x⊗y) = Δ(x)(1⊗y)`. Returns `None` when `T₁` is not bijective.
pub fn solve_antipode(alg: &Algebra, delta: &LinearMap, counit: &LinearMap) -> Option<LinearMap> {
    let n = alg.dim();
    let aa = TensorAlgebra::new(alloc::vec![alg, alg]);
    let t1 = LinearMap::from_fn(n * n, n * n, |f| aa.mul(delta.column(f / n), &alg.unit().kron(&Vector::basis(n, f % n))));
    let rhs: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i).kron(&alg.unit())).collect();
    let sols = sparse_solve_many(&t1, &rhs).ok()?;
    let eps = counit.transpose().column(0).clone();
    Some(LinearMap::from_columns(n, sols.iter().map(|z| contract_leg(z, &[n, n], 0, &eps)).collect()))
}

/// Builds the twisted tensor coproduct `(A⊗B, Δ_W)` of a skew-copairing
/// `W ∈ B⊗A`, with the cotwisting map `σ_W(a⊗b) = W(b⊗a)W⁻¹`.
///
/// The report lists the skew-copairing laws, unitarity in the *-case, the
/// cotwisting laws of `σ_W` and the Hopf axioms of the result. Fails when `W`
/// is not invertible or no antipode exists.
pub fn twisted_coproduct_from_skew_copairing(w: &Vector, a: &Hopf, b: &Hopf, name: &str) -> Result<(Hopf, Report), Report> {
    let mut r = Report::new(name);
    let (na, nb) = (a.dim(), b.dim());
    let ba = TensorAlgebra::new(alloc::vec![b.alg(), a.alg()]);
    let Some(w_inv) = ba.inverse(w) else {
        r.fail("invertible", "W has no inverse");
        return Err(r);
    };
    r.pass("invertible");
    let baa = TensorAlgebra::new(alloc::vec![b.alg(), a.alg(), a.alg()]);
    let lhs = apply_kron(&[&LinearMap::identity(nb), a.delta()], w);
    r.vectors_equal("(id⊗Δ_A)W = W12W13", &lhs, &baa.mul(&baa.embed(w, &[0, 1]), &baa.embed(w, &[0, 2])));
    let bba = TensorAlgebra::new(alloc::vec![b.alg(), b.alg(), a.alg()]);
    let lhs = apply_kron(&[b.delta(), &LinearMap::identity(na)], w);
    r.vectors_equal("(Δ_B⊗id)W = W23W13", &lhs, &bba.mul(&bba.embed(w, &[1, 2]), &bba.embed(w, &[0, 2])));
    if let Some(ws) = ba.star_of(w) {
        r.vectors_equal("unitary", &ws, &w_inv);
    }
    let sigma = ba.conjugation(w, &w_inv).compose(&flip(na, nb));
    r.absorb(check_cotwisting_laws(&sigma, a, b));
    let alg = tensor_algebra(a.alg(), b.alg());
    let delta = twisted_coproduct(&sigma, a, b);
    let counit = a.counit().kron(b.counit());
    let Some(antipode) = solve_antipode(&alg, &delta, &counit) else {
        r.fail("antipode exists", "T1 is not bijective");
        return Err(r);
    };
    r.pass("antipode exists");
    let h = Hopf::new(name, alg, delta, counit, antipode);
    r.absorb(h.check_axioms());
    Ok((h, r))
}

/// The map `T_p(b^op ⊗ a) = (S_B(b₃) ▶ a ◀ b₁) ⊗ b₂^op` from `B^op⊗A` to `A⊗B^op`.
pub fn double_twist(p: &Pairing) -> LinearMap {
    let n = p.dim();
    let (a, b) = (p.a(), p.b());
    let d2 = b.delta2();
    LinearMap::from_fn(n * n, n * n, |f| {
        let (bi, ai) = (f / n, f % n);
        let mut out = Vector::zero(n * n);
        for (g, c) in d2.column(bi).iter() {
            let (b1, b2, b3) = (g / (n * n), (g / n) % n, g % n);
            let moved = p.a_right_b(&p.b_on_a(&b.s(&b.e(b3)), &a.e(ai)), &b.e(b1));
            out.add_scaled(c, &moved.kron(&b.e(b2)));
        }
        out
    })
}

/// The Drinfeld double `𝒟(p) = A ⋈ B^op`: the twisted product by `T_p` with
/// the tensor comultiplication, antipode `(1⋈S_B⁻¹(b))(S_A(a)⋈1)` and
/// involution `(1⋈S_B⁻²(b*))(a*⋈1)`.
pub fn drinfeld_double(p: &Pairing) -> Hopf {
    let n = p.dim();
    let a = p.a();
    let bop = p.b().opposite();
    let alg = twisted_product(&double_twist(p), a.alg(), bop.alg(), "⋈");
    let alg = with_reversed_star(alg, a.alg(), bop.alg());
    let mid = permute_legs(&[n, n, n, n], &[0, 2, 1, 3]);
    let delta = mid.compose(&a.delta().kron(bop.delta()));
    let counit = a.counit().kron(bop.counit());
    let antipode = LinearMap::from_fn(n * n, n * n, |f| {
        let left = a.one().kron(&bop.s(&bop.e(f % n)));
        let right = a.s(&a.e(f / n)).kron(&bop.one());
        alg.mul(&left, &right)
    });
    Hopf::new(format!("D({}|{})", a.name(), p.b().name()), alg, delta, counit, antipode)
}

/// The bicrossed product `A ⋈ B^co` with `(a⊗b)(a′⊗b′) = a(b₁ ▶ a′ ◀ S⁻¹(b₃)) ⊗ b₂b′`,
/// the tensor comultiplication of `A⊗B^co` and the solved antipode.
pub fn bicrossed_product(p: &Pairing) -> Hopf {
    let n = p.dim();
    let (a, b) = (p.a(), p.b());
    let bco = b.coopposite();
    let d2 = b.delta2();
    let alg = Algebra::from_fn(
        pair_labels(a.alg(), b.alg(), "⋈"),
        |x, y| {
            let (ai, bi) = (x / n, x % n);
            let (aj, bj) = (y / n, y % n);
            let mut out = Vector::zero(n * n);
            for (g, c) in d2.column(bi).iter() {
                let (b1, b2, b3) = (g / (n * n), (g / n) % n, g % n);
                let moved = p.a_right_b(&p.b_on_a(&b.e(b1), &a.e(aj)), &b.s_inv(&b.e(b3)));
                out.add_scaled(c, &a.mul(&a.e(ai), &moved).kron(b.alg().mul_basis(b2, bj)));
            }
            out
        },
        a.one().kron(&b.one()),
    );
    let mid = permute_legs(&[n, n, n, n], &[0, 2, 1, 3]);
    let delta = mid.compose(&a.delta().kron(bco.delta()));
    let counit = a.counit().kron(bco.counit());
    let antipode = solve_antipode(&alg, &delta, &counit).expect("bicrossed product has an antipode");
    Hopf::new(format!("{}⋈{}^co", a.name(), b.name()), alg, delta, counit, antipode)
}

/// Verifies the double: `T_p` is a twisting map, the Hopf axioms and Galois
/// maps, the antipode against the generic solver, and `id⋈S_B` as a Hopf
/// isomorphism onto the bicrossed product.
pub fn check_drinfeld_double(p: &Pairing, d: &Hopf) -> Report {
    let mut r = Report::new(d.name());
    let n = p.dim();
    r.summarize("T_p twisting", &check_twisting_laws(&double_twist(p), p.a().alg(), &p.b().alg().opposite()));
    r.summarize("Hopf axioms", &d.check_axioms());
    r.summarize("Galois maps", &d.check_galois_maps().0);
    match solve_antipode(d.alg(), d.delta(), d.counit()) {
        Some(s) => r.maps_equal("antipode matches solver", &s, d.antipode(), &|i| String::from(d.label(i))),
        None => r.fail("antipode matches solver", "T1 is not bijective"),
    }
    let bic = bicrossed_product(p).renamed("bicrossed");
    let f = LinearMap::identity(n).kron(p.b().antipode());
    r.summarize("isomorphic to bicrossed product", &check_hopf_iso(&f, &strip_star(d), &bic, "id⋈S_B"));
    r
}

fn strip_star(h: &Hopf) -> Hopf {
    Hopf::new(h.name(), h.alg().clone().without_star(), h.delta().clone(), h.counit().clone(), h.antipode().clone())
}

/// The Drinfeld codouble `𝒯(p) = A^op⊗B` with `Δ_{U°}` for the cotwisting map
/// `σ_{U°} = ΣAd(U°)`, where `U°` is `U` read in `A^op⊗B`.
pub fn drinfeld_codouble(p: &Pairing) -> Result<(Hopf, Report), Report> {
    let n = p.dim();
    let aop = p.a().opposite();
    let w = flip(n, n).apply(p.u());
    let name = format!("T({}|{})", p.a().name(), p.b().name());
    twisted_coproduct_from_skew_copairing(&w, &aop, p.b(), &name)
}

/// The pairing `ℙ(b⋈a, a′⊗b′) = p(a′, b) p(a, b′)` between `𝒟(p̂)` and `𝒯(p)`,
/// with `p̂` the flip co-op pairing. The report compares the solved canonical
/// multiplier with `𝕍₁₂𝕌₁₃ = Σ (bᵢ⋈aⱼ)⊗(aᵢ⊗bⱼ)` computed by products.
pub fn double_codouble_pairing(p: &Pairing) -> Result<(Pairing, Report), Report> {
    let n = p.dim();
    let double = drinfeld_double(&p.flip_coop());
    let (codouble, cr) = drinfeld_codouble(p)?;
    let mut r = Report::new(format!("P({}|{})", p.a().name(), p.b().name()));
    r.summarize("codouble", &cr);
    let pm = p.matrix();
    let matrix = LinearMap::from_fn(n * n, n * n, |t| {
        let (k, l) = (t / n, t % n);
        Vector::from_pairs(n * n, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i * n + j, &pm.entry(k, i) * &pm.entry(j, l))))
    });
    let big = Pairing::new(double, codouble, matrix).expect("equal dimensions");
    let dt = TensorAlgebra::new(alloc::vec![big.a().alg(), big.b().alg()]);
    let (one_a, one_b) = (p.a().one(), p.b().one());
    let mut v = Vector::zero(n.pow(4));
    let mut u = Vector::zero(n.pow(4));
    for (f, c) in p.u().iter() {
        let (ai, bi) = (p.a().e(f / n), p.b().e(f % n));
        v.add_scaled(c, &bi.kron(&one_a).kron(&ai.kron(&one_b)));
        u.add_scaled(c, &one_b.kron(&ai).kron(&one_a.kron(&bi)));
    }
    let w = dt.mul(&v, &u);
    match big.try_u() {
        Some(solved) => r.vectors_equal("W = V12U13", solved, &w),
        None => r.fail("W = V12U13", "no canonical multiplier"),
    }
    Ok((big, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{function_hopf, group_hopf, FiniteGroup};
    use crate::pairing::canonical_group_pairing;

    #[test]
    fn heisenberg_relations_hold_for_s3() {
        let p = canonical_group_pairing(&FiniteGroup::s3());
        let h = heisenberg(&p);
        assert!(h.check("H").passed());
        let r = check_heisenberg_relations(&p, &h);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn lu_maps_for_z2() {
        let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
        let r = check_lu_anti_isos(&p);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn trivial_twisting_is_tensor_product() {
        let g = FiniteGroup::cyclic(2);
        let (a, b) = (function_hopf(&g), group_hopf(&g));
        let t = flip(2, 2);
        assert!(check_twisting_laws(&t, a.alg(), b.alg()).passed());
        let m = twisted_product(&t, a.alg(), b.alg(), "(x)");
        assert_eq!(m.mult_map(), tensor_algebra(a.alg(), b.alg()).mult_map());
        let c = check_cotwisting_laws(&flip(2, 2), &a, &b);
        assert!(c.passed(), "{c}");
    }

    #[test]
    fn solver_recovers_group_antipode() {
        let h = group_hopf(&FiniteGroup::s3());
        let s = solve_antipode(h.alg(), h.delta(), h.counit()).unwrap();
        assert_eq!(&s, h.antipode());
    }

    #[test]
    fn double_of_z2_passes() {
        let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
        let d = drinfeld_double(&p);
        let r = check_drinfeld_double(&p, &d);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn codouble_of_z2_passes() {
        let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
        let (_, r) = drinfeld_codouble(&p).unwrap();
        assert!(r.passed(), "{r}");
    }
}
