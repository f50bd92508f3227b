use ydlab_core::action::{Action, Coaction, Side};
use ydlab_core::algebra::Algebra;
use ydlab_core::groups::{function_hopf, group_hopf, set_functions, FiniteGroup, GroupAction};
use ydlab_core::hopf::Hopf;
use ydlab_core::linear::{flip, kron_after, LinearMap, Vector};
use ydlab_core::pairing::{canonical_group_pairing, Pairing};
use ydlab_core::yd::*;
use ydlab_core::Scalar;

fn one() -> Scalar {
    Scalar::one()
}

fn s3_action() -> GroupAction {
    let g = FiniteGroup::s3();
    let (r, s) = (vec![1, 2, 0], vec![0, 2, 1]);
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..3).map(|i| p[q[i]]).collect() };
    let perms = (0..g.order())
        .map(|x| {
            let mut rest = g.label(x);
            let mut perm = vec![0, 1, 2];
            if let Some(t) = rest.strip_prefix('s') {
                perm = compose(&perm, &s);
                rest = t;
            }
            let k = match rest {
                "" | "e" => 0,
                "r" => 1,
                _ => 2,
            };
            for _ in 0..k {
                perm = compose(&perm, &r);
            }
            perm
        })
        .collect();
    GroupAction::new(g, 3, perms).unwrap()
}

fn swap_on_two_points() -> GroupAction {
    GroupAction::new(FiniteGroup::cyclic(2), 2, vec![vec![0, 1], vec![1, 0]]).unwrap()
}

/// `α(δ_t) = Σ_g δ_g ⊗ δ_{g⁻¹·t}` with `β` trivial, over the canonical pairing.
fn transformation_pair(act: &GroupAction) -> YdPair {
    let g = act.group();
    let (n, m) = (g.order(), act.size());
    let p = canonical_group_pairing(g);
    let x = set_functions(m);
    let map = LinearMap::from_fn(m, n * m, |t| Vector::from_pairs(n * m, (0..n).map(|h| (h * m + act.act(g.inv(h), t), one()))));
    let alpha = Coaction::new(p.a().opposite(), x.clone(), map, Side::Left);
    let beta = Coaction::trivial(p.b().clone(), x, Side::Left);
    YdPair::new(p, alpha, beta, Chirality::Ll, "transformation")
}

fn pairings_of(g: &FiniteGroup) -> Vec<Pairing> {
    let p = canonical_group_pairing(g);
    let q = p.flip();
    vec![p, q]
}

/// The product `x ·_op y = y x` of `A^op`, written with the product of `A`.
fn op_alg(h: &Hopf) -> Algebra {
    h.alg().opposite()
}

fn sweedler(h: &Hopf, a: usize) -> Vec<(usize, usize, Scalar)> {
    let n = h.dim();
    h.comul(&h.e(a)).iter().map(|(f, c)| (f / n, f % n, c.clone())).collect()
}

/// The four regular standard examples on a Hopf algebra `A`.
fn regular_examples(h: &Hopf) -> Vec<StandardYd> {
    let n = h.dim();
    let mut out = Vec::new();
    out.push(StandardYd::new(Action::left_adjoint(h.clone()), Coaction::regular(h.clone(), Side::Left), Chirality::Ll));
    out.push(StandardYd::new(Action::right_adjoint(h.clone()), Coaction::regular(h.clone(), Side::Right), Chirality::Rr));
    // x ◁ a = S⁻¹(a₂) x a₁ on A^op, with Δ as a left A^op-coaction
    let hh = h.clone();
    let rl = Action::from_fn(h.clone(), op_alg(h), Side::Right, move |a, x| {
        let mut v = Vector::zero(n);
        for (a1, a2, c) in sweedler(&hh, a) {
            v.add_scaled(&c, &hh.mul(&hh.mul(&hh.s_inv(&hh.e(a2)), &hh.e(x)), &hh.e(a1)));
        }
        v
    });
    out.push(StandardYd::new(rl, Coaction::new(h.opposite(), op_alg(h), h.delta().clone(), Side::Left), Chirality::Rl));
    // a ▷ x = a₂ x S⁻¹(a₁) on A^op, with Δ as a right A^op-coaction
    let hh = h.clone();
    let lr = Action::from_fn(h.clone(), op_alg(h), Side::Left, move |a, x| {
        let mut v = Vector::zero(n);
        for (a1, a2, c) in sweedler(&hh, a) {
            v.add_scaled(&c, &hh.mul(&hh.mul(&hh.e(a2), &hh.e(x)), &hh.s_inv(&hh.e(a1))));
        }
        v
    });
    out.push(StandardYd::new(lr, Coaction::new(h.opposite(), op_alg(h), h.delta().clone(), Side::Right), Chirality::Lr));
    out
}

#[test]
fn regular_standard_examples_pass_and_convert() {
    let g = FiniteGroup::s3();
    for p in pairings_of(&g) {
        for d in regular_examples(p.a()) {
            let v = d.variant.name();
            let s = check_yd_standard(&d);
            assert!(s.passed(), "{v} over {}: {s}", p.a().name());
            let sb = check_bc_standard(&d);
            assert!(sb.passed(), "{v} over {}: {sb}", p.a().name());
            let oc = convert_standard_to_oc(&d, &p);
            let y = check_yd_only_coaction(&oc);
            assert!(y.passed(), "{} over {}: {y}", oc.chirality.name(), p.a().name());
            let b = check_braided_commutative(&oc);
            assert!(b.passed(), "{} over {}: {b}", oc.chirality.name(), p.a().name());
            let back = convert_oc_to_standard(&oc);
            assert_eq!(back.variant, d.variant);
            assert_eq!(back.action.map(), d.action.map());
            assert_eq!(back.coaction.map(), d.coaction.map());
        }
    }
}

#[test]
fn trivial_action_with_regular_coaction_fails_both_ways_on_noncommutative_data() {
    let g = FiniteGroup::s3();
    for p in pairings_of(&g) {
        if p.a().alg().is_commutative() {
            continue;
        }
        for d in regular_examples(p.a()) {
            let d = StandardYd::new(Action::trivial(p.a().clone(), d.x().clone(), d.action.side()), d.coaction, d.variant);
            let s = check_yd_standard(&d);
            assert!(!s.find(&format!("s-{}-YD", d.variant.name())).unwrap().passed);
            assert!(s.find("forms agree").unwrap().passed, "{s}");
            let oc = convert_standard_to_oc(&d, &p);
            assert!(!check_yd_only_coaction(&oc).passed(), "{}", oc.chirality.name());
        }
    }
}

#[test]
fn adjoint_action_with_trivial_coaction_on_group_algebra_of_s3() {
    // cocommutativity makes a₁a′ ⊗ a₂▷x = a₂a′ ⊗ a₁▷x, so the YD identity holds,
    // while xy = (1▷y)x = yx fails braided commutativity
    let h = group_hopf(&FiniteGroup::s3());
    let d = StandardYd::new(Action::left_adjoint(h.clone()), Coaction::trivial(h.clone(), h.alg().clone(), Side::Left), Chirality::Ll);
    let r = check_yd_standard(&d);
    assert!(r.passed(), "{r}");
    let b = check_bc_standard(&d);
    assert!(!b.find("s-ll-BC").unwrap().passed);
    assert!(!b.find("s-ll-BC'").unwrap().passed);
    // the trivial action with the regular coaction fails on 𝕜[S₃] and passes on K(S₃)
    let k = function_hopf(&FiniteGroup::s3());
    let bad = StandardYd::new(Action::trivial(h.clone(), h.alg().clone(), Side::Left), Coaction::regular(h.clone(), Side::Left), Chirality::Ll);
    assert!(!check_yd_standard(&bad).passed());
    let fine = StandardYd::new(Action::trivial(k.clone(), k.alg().clone(), Side::Left), Coaction::regular(k.clone(), Side::Left), Chirality::Ll);
    assert!(check_yd_standard(&fine).passed());
}

#[test]
fn transformation_data_is_braided_commutative_yd() {
    for act in [swap_on_two_points(), GroupAction::left_translation(&FiniteGroup::cyclic(3)), s3_action()] {
        let yd = transformation_pair(&act);
        let r = check_yd_only_coaction(&yd);
        assert!(r.passed(), "{r}");
        let b = check_braided_commutative(&yd);
        assert!(b.passed(), "{b}");
        assert!(b.find("dual BC").unwrap().passed);
        let d = convert_oc_to_standard(&yd);
        assert!(check_yd_standard(&d).passed());
        assert!(check_bc_standard(&d).passed());
        let back = convert_standard_to_oc(&d, &yd.pairing);
        assert_eq!(back.beta.map(), yd.beta.map());
        assert_eq!(back.alpha.map(), yd.alpha.map());
    }
}

#[test]
fn induced_action_of_transformation_data_is_translation() {
    // x ◁ λ_g computed from α equals Σ_s p(g·s) δ_s on p = δ_t, that is δ_{g⁻¹·t}
    let act = s3_action();
    let g = act.group();
    let yd = transformation_pair(&act);
    let dual = ydlab_core::action::duality_functor(&yd.alpha, &yd.pairing);
    for h in 0..g.order() {
        for t in 0..3 {
            let got = dual.act(&Vector::basis(6, h), &Vector::basis(3, t));
            assert_eq!(got, Vector::basis(3, act.act(g.inv(h), t)));
        }
    }
}

#[test]
fn trivial_pair_is_yd_and_bc_exactly_on_commutative_carriers() {
    let g = FiniteGroup::s3();
    let p = canonical_group_pairing(&g);
    for ch in [Chirality::Ll, Chirality::Lr, Chirality::Rl, Chirality::Rr] {
        let comm = YdPair::trivial(p.clone(), set_functions(3), ch);
        assert!(check_yd_only_coaction(&comm).passed());
        assert!(check_braided_commutative(&comm).passed(), "{}", ch.name());
        let nc = YdPair::trivial(p.clone(), group_hopf(&g).alg().clone(), ch);
        assert!(check_yd_only_coaction(&nc).passed());
        let b = check_braided_commutative(&nc);
        assert!(!b.find("BC").unwrap().passed, "{}", ch.name());
    }
}

/// `β` grades `K({1,2,3})` by the reflection fixing the first point, `α` trivial.
fn reflection_graded(beta_grade: usize) -> YdPair {
    let g = FiniteGroup::s3();
    let p = canonical_group_pairing(&g);
    let x = set_functions(3);
    let half = Scalar::ratio(1, 2);
    let (e0, grade) = (0, beta_grade);
    // δ₀ is fixed, δ₁ ± δ₂ have degrees e and τ
    let map = LinearMap::from_fn(3, 18, |i| match i {
        0 => Vector::basis(6, e0).kron(&Vector::basis(3, 0)),
        _ => {
            let sign = if i == 1 { one() } else { -one() };
            let plus = Vector::from_pairs(3, [(1, half.clone()), (2, half.clone())]);
            let minus = Vector::from_pairs(3, [(1, half.clone()), (2, -half.clone())]);
            Vector::basis(6, e0).kron(&plus).add(&Vector::basis(6, grade).kron(&minus).scale(&sign))
        }
    });
    let beta = Coaction::new(p.b().clone(), x.clone(), map, Side::Left);
    let alpha = Coaction::trivial(p.a().opposite(), x, Side::Left);
    YdPair::new(p, alpha, beta, Chirality::Ll, "reflection grading")
}

#[test]
fn noncentral_grading_fails_yd_in_both_characterizations() {
    let g = FiniteGroup::s3();
    let tau = (0..6).find(|&x| g.label(x) == "s").unwrap();
    let yd = reflection_graded(tau);
    let r = check_yd_only_coaction(&yd);
    assert!(r.find("beta coaction").unwrap().passed, "{r}");
    assert!(!r.find("ll-YD").unwrap().passed);
    let d = convert_oc_to_standard(&yd);
    assert!(!check_yd_standard(&d).passed());
    // the identity grading is trivially YD
    assert!(check_yd_only_coaction(&reflection_graded(0)).passed());
}

#[test]
fn double_codouble_functor_on_transformation_data() {
    for act in [swap_on_two_points(), GroupAction::left_translation(&FiniteGroup::cyclic(3))] {
        let yd = transformation_pair(&act);
        let r = check_double_codouble_functor(&yd);
        assert!(r.passed(), "{r}");
    }
    let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
    let trivial = YdPair::trivial(p.clone(), set_functions(2), Chirality::Ll);
    let gamma = codouble_coaction(&trivial).unwrap();
    let expected = Coaction::trivial(gamma.hopf().clone(), set_functions(2), Side::Left);
    assert_eq!(gamma.map(), expected.map());
}

#[test]
fn dualization_preserves_yd_and_bc_and_is_involutive() {
    for act in [swap_on_two_points(), GroupAction::left_translation(&FiniteGroup::cyclic(3)), s3_action()] {
        let yd = transformation_pair(&act);
        let dual = dualize_yd(&yd, None).unwrap();
        assert!(check_yd_only_coaction(&dual).passed());
        assert!(check_braided_commutative(&dual).passed());
        let twice = dualize_yd(&dual, None).unwrap();
        assert_eq!(twice.alpha.map(), yd.alpha.map());
        assert_eq!(twice.beta.map(), yd.beta.map());
        assert_eq!(twice.pairing.matrix(), yd.pairing.matrix());
        assert_eq!(twice.x.mult_map(), yd.x.mult_map());
    }
    let g = FiniteGroup::s3();
    let yd = reflection_graded((0..6).find(|&x| g.label(x) == "s").unwrap());
    let dual = dualize_yd(&yd, None).unwrap();
    assert!(!check_yd_only_coaction(&dual).passed());
}

#[test]
fn transport_along_inversion_of_z3() {
    let g = FiniteGroup::cyclic(3);
    let yd = transformation_pair(&GroupAction::left_translation(&g));
    let inv = LinearMap::from_fn(3, 3, |x| Vector::basis(3, g.inv(x)));
    let (a, b) = (function_hopf(&g), group_hopf(&g));
    let moved = transport_yd(&yd, &inv, &a, &inv, &b).unwrap();
    assert!(check_yd_only_coaction(&moved).passed());
    assert!(check_braided_commutative(&moved).passed());
    // the inversion on both sides preserves the canonical pairing
    assert_eq!(moved.pairing.matrix(), yd.pairing.matrix());
    let same = transport_yd(&yd, &LinearMap::identity(3), &a, &LinearMap::identity(3), &b).unwrap();
    assert_eq!(same.alpha.map(), yd.alpha.map());
    // only one side transported changes the pairing and still passes
    let half = transport_yd(&yd, &inv, &a, &LinearMap::identity(3), &b).unwrap();
    assert_ne!(half.pairing.matrix(), yd.pairing.matrix());
    assert!(check_yd_only_coaction(&half).passed());
}

#[test]
fn transport_rejects_a_non_isomorphism() {
    let g = FiniteGroup::cyclic(3);
    let yd = transformation_pair(&GroupAction::left_translation(&g));
    let shift = LinearMap::from_fn(3, 3, |x| Vector::basis(3, g.mul(1, x)));
    assert!(transport_yd(&yd, &shift, &function_hopf(&g), &LinearMap::identity(3), &group_hopf(&g)).is_err());
}

/// The rl pair `α_rl(x) = x₀ ⊗ S(x₋₁)`, `β_rl = β` built from an ll pair.
fn rl_from_ll(yd: &YdPair) -> YdPair {
    let p = &yd.pairing;
    let (n, nx) = (p.dim(), yd.dim());
    let id = LinearMap::identity(nx);
    let map = kron_after(&[&id, p.a().antipode()], &flip(n, nx).compose(yd.alpha.map()));
    let alpha = Coaction::new(p.a().clone(), yd.x.clone(), map, Side::Right);
    YdPair::new(p.clone(), alpha, yd.beta.clone(), Chirality::Rl, "rl form")
}

#[test]
fn equivalence_square_closes() {
    for act in [swap_on_two_points(), s3_action()] {
        let rl = rl_from_ll(&transformation_pair(&act));
        let r = check_equivalence_square(&rl);
        assert!(r.passed(), "{r}");
        let corners = equivalence_square(&rl);
        assert_eq!(corners[2].alpha.map(), transformation_pair(&act).alpha.map());
    }
    // noncommutative data through the regular s-rr example
    let g = FiniteGroup::s3();
    for p in pairings_of(&g) {
        let d = regular_examples(p.a()).into_iter().find(|d| d.variant == Chirality::Rr).unwrap();
        let rl = convert_standard_to_oc(&d, &p);
        assert_eq!(rl.chirality, Chirality::Rl);
        let r = check_equivalence_square(&rl);
        assert!(r.passed(), "{r}");
    }
    let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
    let r = check_equivalence_square(&YdPair::trivial(p, set_functions(2), Chirality::Rl));
    assert!(r.passed(), "{r}");
}
