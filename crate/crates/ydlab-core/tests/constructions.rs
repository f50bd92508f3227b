use ydlab_core::action::{Action, Coaction, Side};
use ydlab_core::algebra::{tensor_algebra, AlgebraOps};
use ydlab_core::constructions::*;
use ydlab_core::groups::{function_hopf, group_hopf, set_functions, FiniteGroup, GroupAction};
use ydlab_core::hopf::tensor_hopf;
use ydlab_core::linear::{flip, LinearMap, Vector};
use ydlab_core::pairing::canonical_group_pairing;
use ydlab_core::Scalar;

fn e(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

fn one() -> Scalar {
    Scalar::one()
}

/// `Γ(δ_t) = Σ_g δ_g ⊗ δ_{g⁻¹t}` for a left action of `G` on a finite set.
fn translation_coaction(act: &GroupAction) -> Coaction {
    let g = act.group();
    let (n, m) = (g.order(), act.size());
    let map = LinearMap::from_fn(m, n * m, |t| {
        Vector::from_pairs(n * m, (0..n).map(|x| (x * m + act.act(g.inv(x), t), one())))
    });
    Coaction::new(function_hopf(g), set_functions(m), map, Side::Left)
}

fn swap_on_two_points() -> GroupAction {
    GroupAction::new(FiniteGroup::cyclic(2), 2, vec![vec![0, 1], vec![1, 0]]).unwrap()
}

#[test]
fn translation_smash_product_of_z2() {
    let g = FiniteGroup::cyclic(2);
    let h = group_hopf(&g);
    let x = function_hopf(&g).alg().clone();
    // λ_g ▷ δ_x = δ_{gx}
    let act = Action::from_fn(h, x, Side::Left, |a, s| e(2, g.mul(a, s)));
    let sm = smash_product(&act).unwrap();
    assert!(sm.check("smash").passed());
    // (1#λ_g)(δ_e#λ_e) = δ_g#λ_g with 1 = δ_e + δ_g
    let unit_x = Vector::from_pairs(2, [(0, one()), (1, one())]);
    let lhs = sm.mul(&unit_x.kron(&e(2, 1)), &e(4, 0));
    assert_eq!(lhs, e(4, 3));
}

#[test]
fn trivial_action_gives_tensor_product() {
    let g = FiniteGroup::s3();
    let h = group_hopf(&g);
    let x = set_functions(3);
    let sm = smash_product(&Action::trivial(h.clone(), x.clone(), Side::Left)).unwrap();
    let t = tensor_algebra(&x, h.alg());
    assert_eq!(sm.mult_map(), t.mult_map());
    for i in 0..sm.dim() {
        assert_eq!(sm.star_of(&e(sm.dim(), i)), t.star_of(&e(t.dim(), i)));
    }
}

#[test]
fn heisenberg_commutation_of_group_pairings() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::s3()] {
        let n = g.order();
        let p = canonical_group_pairing(&g);
        let h = heisenberg(&p);
        assert!(h.check("H").passed());
        let delta_one = Vector::from_pairs(n, (0..n).map(|x| (x, one())));
        // λ_y δ_x = δ_{xy⁻¹} λ_y
        for y in 0..n {
            for x in 0..n {
                let lhs = h.mul(&delta_one.kron(&e(n, y)), &e(n, x).kron(&e(n, 0)));
                assert_eq!(lhs, e(n * n, g.mul(x, g.inv(y)) * n + y));
            }
        }
        let r = check_heisenberg_relations(&p, &h);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn heisenberg_product_vanishing_for_z2() {
    let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
    let h = heisenberg(&p);
    // (δ_e#λ_g)(δ_e#λ_e) = δ_eδ_g#λ_g = 0
    assert!(h.mul(&e(4, 1), &e(4, 0)).is_zero());
}

#[test]
fn one_dimensional_pairing_gives_the_ground_field() {
    let p = canonical_group_pairing(&FiniteGroup::trivial());
    let h = heisenberg(&p);
    assert_eq!(h.dim(), 1);
    assert_eq!(h.mul(&e(1, 0), &e(1, 0)), e(1, 0));
    let d = drinfeld_double(&p);
    assert_eq!(d.dim(), 1);
    assert!(d.check_axioms().passed());
    let (t, r) = drinfeld_codouble(&p).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(r.passed(), "{r}");
    let (big, r) = double_codouble_pairing(&p).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(big.u(), &e(1, 0));
}

#[test]
fn lu_maps_of_z2_and_s3() {
    let g = FiniteGroup::cyclic(2);
    let p = canonical_group_pairing(&g);
    let (l, _) = lu_anti_isos(&p);
    // ℒ(λ_g # δ_e) = δ_e # λ_g
    assert_eq!(l.apply(&e(4, 2)), e(4, 1));
    assert_eq!(l.apply(&heisenberg(&p.flip()).unit()), heisenberg(&p).unit());
    let r = check_lu_anti_isos(&p);
    assert!(r.passed(), "{r}");

    let p = canonical_group_pairing(&FiniteGroup::s3());
    let (l, l2) = lu_anti_isos(&p);
    assert_eq!(l, l2);
    let r = check_lu_anti_isos(&p);
    assert!(r.passed(), "{r}");
    assert!(r.find("L star").unwrap().passed);
}

#[test]
fn crossed_products_of_translation_coactions() {
    let z3 = FiniteGroup::cyclic(3);
    for act in [swap_on_two_points(), GroupAction::left_translation(&z3), GroupAction::new(FiniteGroup::s3(), 3, s3_perms()).unwrap()] {
        let c = translation_coaction(&act);
        let p = canonical_group_pairing(act.group());
        let cp = crossed_product(&c, &p).unwrap();
        assert!(cp.report.passed(), "{}", cp.report);
        assert_eq!(cp.embedding.rank(), act.group().order() * act.size());
        assert!(cp.smash.check("smash").passed());
    }
}

fn s3_perms() -> Vec<Vec<usize>> {
    let g = FiniteGroup::s3();
    let (r, s) = (vec![1, 2, 0], vec![0, 2, 1]);
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..3).map(|i| p[q[i]]).collect() };
    (0..g.order())
        .map(|x| {
            let label = g.label(x);
            let mut perm = vec![0, 1, 2];
            let mut rest = label;
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
        .collect()
}

#[test]
fn trivial_coaction_crossed_product_is_tensor_product() {
    let g = FiniteGroup::cyclic(2);
    let p = canonical_group_pairing(&g);
    let x = set_functions(3);
    let c = Coaction::trivial(p.a().clone(), x.clone(), Side::Left);
    let cp = crossed_product(&c, &p).unwrap();
    assert!(cp.report.passed(), "{}", cp.report);
    assert_eq!(cp.smash.mult_map(), tensor_algebra(p.b().alg(), &x).mult_map());
}

#[test]
fn double_of_abelian_group_is_tensor_product_algebra() {
    let g = FiniteGroup::cyclic(2);
    let p = canonical_group_pairing(&g);
    let d = drinfeld_double(&p);
    let t = tensor_algebra(p.a().alg(), &p.b().alg().opposite());
    assert_eq!(d.alg().mult_map(), t.mult_map());
}

#[test]
fn double_of_s3_conjugation_relation_and_axioms() {
    let g = FiniteGroup::s3();
    let n = g.order();
    let p = canonical_group_pairing(&g);
    let d = drinfeld_double(&p);
    let delta_one = Vector::from_pairs(n, (0..n).map(|x| (x, one())));
    // λ_y^op δ_x = δ_{y⁻¹xy} λ_y^op
    for y in 0..n {
        for x in 0..n {
            let lhs = d.mul(&delta_one.kron(&e(n, y)), &e(n, x).kron(&e(n, 0)));
            let c = g.mul(g.mul(g.inv(y), x), y);
            assert_eq!(lhs, e(n * n, c * n + y));
        }
    }
    let r = check_drinfeld_double(&p, &d);
    assert!(r.passed(), "{r}");
    assert!(d.check_galois_maps().0.passed());
}

#[test]
fn codouble_comultiplication_matches_group_formula() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::s3()] {
        let n = g.order();
        let p = canonical_group_pairing(&g);
        let (t, r) = drinfeld_codouble(&p).unwrap();
        assert!(r.passed(), "{r}");
        // Δ(δ_x⊗λ_y) = Σ_{uv=x} δ_u⊗λ_{vyv⁻¹}⊗δ_v⊗λ_y
        let m = n * n;
        for x in 0..n {
            for y in 0..n {
                let expected = Vector::from_pairs(
                    m * m,
                    (0..n).map(|u| {
                        let v = g.mul(g.inv(u), x);
                        let conj = g.mul(g.mul(v, y), g.inv(v));
                        ((u * n + conj) * m + v * n + y, one())
                    }),
                );
                assert_eq!(t.comul(&e(m, x * n + y)), expected, "{} x={x} y={y}", g.name());
            }
        }
    }
}

#[test]
fn codouble_of_abelian_group_has_tensor_coproduct() {
    let g = FiniteGroup::cyclic(3);
    let p = canonical_group_pairing(&g);
    let (t, _) = drinfeld_codouble(&p).unwrap();
    let plain = tensor_hopf(&p.a().opposite(), p.b());
    assert_eq!(t.delta(), plain.delta());
}

#[test]
fn unit_skew_copairing_gives_tensor_hopf_algebra() {
    let g = FiniteGroup::s3();
    let (a, b) = (function_hopf(&g), group_hopf(&g));
    let n = g.order();
    let w = b.one().kron(&a.one());
    let (h, r) = twisted_coproduct_from_skew_copairing(&w, &a, &b, "plain").unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(h.delta(), tensor_hopf(&a, &b).delta());
    let sigma = TwistingMap { map: flip(n, n), direction: TwistDirection::Cotwisting };
    assert!(check_twisting(&sigma, &a, &b).passed());
}

#[test]
fn non_invertible_skew_copairing_is_rejected() {
    let g = FiniteGroup::cyclic(2);
    let (a, b) = (function_hopf(&g), group_hopf(&g));
    let r = twisted_coproduct_from_skew_copairing(&Vector::zero(4), &a, &b, "zero").unwrap_err();
    assert_eq!(r.first_failure().unwrap().name, "invertible");
}

#[test]
fn double_codouble_pairing_multiplier() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)] {
        let p = canonical_group_pairing(&g);
        let (big, r) = double_codouble_pairing(&p).unwrap();
        assert!(r.passed(), "{r}");
        let ax = big.check_axioms();
        assert!(ax.passed(), "{ax}");
    }
}

#[test]
fn double_codouble_pairing_values_for_z2() {
    let g = FiniteGroup::cyclic(2);
    let p = canonical_group_pairing(&g);
    let (big, _) = double_codouble_pairing(&p).unwrap();
    // ℙ(λ_i⋈δ_j, δ_k⊗λ_l) = [k = i][j = l]
    for d in 0..4 {
        for t in 0..4 {
            let (i, j, k, l) = (d / 2, d % 2, t / 2, t % 2);
            let expected = if k == i && j == l { one() } else { Scalar::zero() };
            assert_eq!(big.eval(&e(4, d), &e(4, t)), expected);
        }
    }
}
