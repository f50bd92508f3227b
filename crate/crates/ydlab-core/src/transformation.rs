//! Yetter–Drinfeld data of a finite transformation group `G ↷ S` over the
//! canonical pairing of `K(G)` and `𝕜[G]`, and the two algebras of the
//! transformation groupoid `G ⋉ S` that its crossed products realize.
//!
//! Arrows of `G ⋉ S` are pairs `(g, s)` from `s` to `g·s`, flattened as
//! `g·|S| + s`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::{Coaction, Side};
use crate::algebra::{first_non_multiplicative, first_non_star, Algebra, AlgebraOps, Star, TensorAlgebra};
use crate::constructions::crossed_product;
use crate::groups::{function_hopf, set_functions, GroupAction};
use crate::hopf::Hopf;
use crate::linear::{flip, kron_after, LinearMap, Vector};
use crate::pairing::canonical_group_pairing;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::yd::{Chirality, YdPair};

/// `(K(S), α, β)` with `α(f) = Σ_{g,s} f(g·s) δ_g ⊗ δ_s`, a left coaction of
/// `K(G)^op = K(G)`, and `β` the trivial coaction of `𝕜[G]`, as an `Ll` pair.
pub fn transformation_yd(act: &GroupAction) -> YdPair {
    let g = act.group();
    let (n, m) = (g.order(), act.size());
    let p = canonical_group_pairing(g);
    let x = set_functions(m);
    let map = LinearMap::from_fn(m, n * m, |t| {
        Vector::from_pairs(n * m, (0..n).map(|h| (h * m + act.act(g.inv(h), t), Scalar::one())))
    });
    let alpha = Coaction::new(p.a().opposite(), x.clone(), map, Side::Left);
    let beta = Coaction::trivial(p.b().clone(), x, Side::Left);
    YdPair::new(p, alpha, beta, Chirality::Ll, format!("transformation {} on {} points", g.name(), m))
}

fn arrow_labels(act: &GroupAction, head: &str) -> Vec<String> {
    let g = act.group();
    let m = act.size();
    (0..g.order() * m).map(|f| format!("{head}({},{})", g.label(f / m), f % m)).collect()
}

/// The function algebra `K(G⋉S)` and the groupoid algebra `𝕜[G⋉S]` with
/// `λ_{(g,s)} λ_{(g′,s′)} = [s = g′·s′] λ_{(gg′,s′)}` and
/// `λ_{(g,s)}* = λ_{(g⁻¹, g·s)}`.
pub fn groupoid_algebras(act: &GroupAction) -> (Algebra, Algebra) {
    let g = act.group();
    let m = act.size();
    let d = g.order() * m;
    let e = |i: usize| Vector::basis(d, i);
    let ones = Vector::from_pairs(d, (0..d).map(|i| (i, Scalar::one())));
    let functions = Algebra::from_fn(arrow_labels(act, "δ"), |i, j| if i == j { e(i) } else { Vector::zero(d) }, ones)
        .with_star(Star::new((0..d).map(e).collect()));
    let unit = Vector::from_pairs(d, (0..m).map(|s| (g.identity() * m + s, Scalar::one())));
    let convolution = Algebra::from_fn(
        arrow_labels(act, "λ"),
        |i, j| {
            let (h, s) = (i / m, i % m);
            let (h2, s2) = (j / m, j % m);
            if s == act.act(h2, s2) {
                e(g.mul(h, h2) * m + s2)
            } else {
                Vector::zero(d)
            }
        },
        unit,
    )
    .with_star(Star::new((0..d).map(|i| e(g.inv(i / m) * m + act.act(i / m, i % m))).collect()));
    (functions, convolution)
}

fn check_embedding(r: &mut Report, name: &str, map: &LinearMap, dom: &Algebra, cod: &dyn AlgebraOps) {
    let rank = map.rank();
    r.record(format!("{name} injective"), rank == dom.dim(), format!("rank {rank}, expected {}", dom.dim()));
    match first_non_multiplicative(map, dom, cod) {
        None => r.pass(format!("{name} multiplicative")),
        Some((i, j)) => r.fail(format!("{name} multiplicative"), format!("{} and {}", dom.label(i), dom.label(j))),
    }
    r.vectors_equal(&format!("{name} unital"), &map.apply(&dom.unit()), &cod.unit());
    match first_non_star(map, dom, cod) {
        None => r.pass(format!("{name} star")),
        Some(i) => r.fail(format!("{name} star"), format!("x = {}", dom.label(i))),
    }
}

/// Checks that `δ_{(g,s)} ↦ (δ_g⊗1)β(δ_s)` and `λ_{(g,s)} ↦ (λ_g⊗1)α(δ_s)`
/// are injective unital *-homomorphisms from the groupoid algebras into the
/// Heisenberg algebras tensored with `K(S)`, so that the crossed products of
/// `β` and `α` are `K(G⋉S)` and `𝕜[G⋉S]`.
pub fn verify_crossed_isos(act: &GroupAction) -> Report {
    let g = act.group();
    let mut r = Report::new(format!("groupoid crossed products for {} on {} points", g.name(), act.size()));
    let yd = transformation_yd(act);
    let p = &yd.pairing;
    let (functions, convolution) = groupoid_algebras(act);
    r.summarize("K(G x S) algebra", &functions.check("K(G x S)"));
    r.summarize("k[G x S] algebra", &convolution.check("k[G x S]"));
    match crossed_product(&yd.beta, &p.flip()) {
        Ok(cp) => {
            r.summarize("beta crossed product", &cp.report);
            let big = TensorAlgebra::new(alloc::vec![&cp.heisenberg_bar, &yd.x]);
            check_embedding(&mut r, "K(G x S) into H(p) x K(S)", &cp.embedding, &functions, &big);
        }
        Err(e) => r.summarize("beta crossed product", &e),
    }
    let alpha = yd.alpha.clone().with_hopf(p.a().clone());
    match crossed_product(&alpha, p) {
        Ok(cp) => {
            r.summarize("alpha crossed product", &cp.report);
            let big = TensorAlgebra::new(alloc::vec![&cp.heisenberg_bar, &yd.x]);
            check_embedding(&mut r, "k[G x S] into H(p bar) x K(S)", &cp.embedding, &convolution, &big);
        }
        Err(e) => r.summarize("alpha crossed product", &e),
    }
    r
}

/// The same data as an `Rl` pair: `α_rl(f) = f₀ ⊗ S(f₋₁)` as a right
/// coaction of `K(G)`, with `β` unchanged.
pub fn transformation_yd_rl(act: &GroupAction) -> YdPair {
    let yd = transformation_yd(act);
    let p = &yd.pairing;
    let (n, m) = (p.dim(), yd.dim());
    let map = kron_after(&[&LinearMap::identity(m), p.a().antipode()], &flip(n, m).compose(yd.alpha.map()));
    let alpha = Coaction::new(p.a().clone(), yd.x.clone(), map, Side::Right);
    YdPair::new(p.clone(), alpha, yd.beta.clone(), Chirality::Rl, yd.provenance.clone())
}

/// The transformation data as coactions of the quantum group `K(G)` and its
/// dual on `K(S)`: `θ = (id⊗S)Σα` and `θ̂` trivial.
pub fn transformation_quantum_data(act: &GroupAction) -> (Hopf, Coaction, Coaction) {
    let yd = transformation_yd(act);
    let h = function_hopf(act.group());
    let (n, m) = (h.dim(), act.size());
    let map = LinearMap::identity(m).kron(h.antipode()).compose(&flip(n, m).compose(yd.alpha.map()));
    let theta = Coaction::new(h.clone(), yd.x.clone(), map, Side::Right);
    let theta_hat = Coaction::trivial(h.dual().coopposite(), yd.x, Side::Right);
    (h, theta, theta_hat)
}
