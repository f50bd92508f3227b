use ydlab_core::action::{Coaction, Side};
use ydlab_core::aqg::*;
use ydlab_core::groups::{function_hopf, group_hopf, set_functions, FiniteGroup, GroupAction};
use ydlab_core::hopf::Hopf;
use ydlab_core::linear::{apply_kron, flip, LinearMap, Vector};
use ydlab_core::transformation::transformation_yd;
use ydlab_core::yd::{check_bc_standard, check_yd_standard, convert_oc_to_standard, Chirality, YdPair};
use ydlab_core::Scalar;

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn catalog() -> Vec<FiniteGroup> {
    vec![FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::klein4(), FiniteGroup::s3()]
}

fn s3_on_three_points() -> GroupAction {
    let g = FiniteGroup::s3();
    let (r, s) = ([1, 2, 0], [0, 2, 1]);
    let perms = (0..g.order())
        .map(|x| {
            let mut rest = g.label(x);
            let mut perm = vec![0, 1, 2];
            if let Some(t) = rest.strip_prefix('s') {
                perm = (0..3).map(|i| perm[s[i]]).collect();
                rest = t;
            }
            let k = match rest {
                "" | "e" => 0,
                "r" => 1,
                _ => 2,
            };
            for _ in 0..k {
                perm = (0..3).map(|i| perm[r[i]]).collect();
            }
            perm
        })
        .collect();
    GroupAction::new(g, 3, perms).unwrap()
}

#[test]
fn integral_of_function_algebra_is_counting_measure() {
    for g in catalog() {
        let h = function_hopf(&g);
        for side in [Side::Left, Side::Right] {
            let phi = find_integral(&h, side).unwrap();
            let ones = Vector::from_pairs(g.order(), (0..g.order()).map(|i| (i, Scalar::one())));
            assert_eq!(phi.values(), ones);
        }
    }
}

#[test]
fn integral_of_group_algebra_is_the_identity_coefficient() {
    for g in catalog() {
        let h = group_hopf(&g);
        let phi = find_integral(&h, Side::Left).unwrap();
        assert_eq!(phi.values(), Vector::basis(g.order(), g.identity()));
    }
}

#[test]
fn one_dimensional_integral_is_the_counit() {
    let h = group_hopf(&FiniteGroup::trivial());
    let phi = find_integral(&h, Side::Left).unwrap();
    assert_eq!(phi.functional, h.counit().clone());
    assert_eq!(gram_matrix(&h, &phi), vec![vec![Scalar::one()]]);
}

#[test]
fn integrals_give_algebraic_quantum_groups() {
    for g in catalog() {
        for h in [function_hopf(&g), group_hopf(&g)] {
            let phi = find_integral(&h, Side::Left).unwrap();
            let r = check_aqg(&h, &phi);
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn gram_matrix_of_counting_measure_on_s3_is_the_identity() {
    let h = function_hopf(&FiniteGroup::s3());
    let phi = find_integral(&h, Side::Left).unwrap();
    let g = gram_matrix(&h, &phi);
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(*v, if i == j { Scalar::one() } else { Scalar::zero() });
        }
    }
}

#[test]
fn signed_functional_on_z2_is_not_invariant() {
    let h = function_hopf(&FiniteGroup::cyclic(2));
    let phi = Integral { functional: LinearMap::from_rows(2, &[vec![int(1), int(-1)]]), side: Side::Left };
    let r = check_aqg(&h, &phi);
    assert!(!r.find("invariance/left invariant").unwrap().passed);
    // (id⊗φ)Δ(δ_e) = δ_e φ(δ_e) + δ_1 φ(δ_1) = δ_e − δ_1 ≠ φ(δ_e)1
    let image = apply_kron(&[&LinearMap::identity(2), &phi.functional], &h.comul(&h.e(0)));
    assert_eq!(image, Vector::from_dense(vec![int(1), int(-1)]));
}

#[test]
fn exact_definiteness_classification() {
    let i = Scalar::i();
    let pd = vec![vec![int(2), i.clone()], vec![-i.clone(), int(2)]];
    assert_eq!(hermitian_definiteness(&pd), Definiteness::PositiveDefinite);
    let psd = vec![vec![int(1), int(1)], vec![int(1), int(1)]];
    assert_eq!(hermitian_definiteness(&psd), Definiteness::PositiveSemidefinite);
    let indefinite = vec![vec![int(1), int(2)], vec![int(2), int(1)]];
    assert_eq!(hermitian_definiteness(&indefinite), Definiteness::Indefinite(1));
    let zero_pivot = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
    assert_eq!(hermitian_definiteness(&zero_pivot), Definiteness::Indefinite(0));
    let negative = vec![vec![int(-1)]];
    assert_eq!(hermitian_definiteness(&negative), Definiteness::Indefinite(0));
}

#[test]
fn degenerate_functional_is_positive_but_not_faithful() {
    // φ = 2·[g = e] on K(z2) is not invariant and its Gram matrix is singular
    let h = function_hopf(&FiniteGroup::cyclic(2));
    let phi = Integral { functional: LinearMap::from_rows(2, &[vec![int(2), int(0)]]), side: Side::Left };
    let r = check_aqg(&h, &phi);
    assert!(r.find("positive").unwrap().passed);
    assert!(!r.find("faithful").unwrap().passed);
}

#[test]
fn dual_of_function_algebra_is_the_group_algebra() {
    for g in catalog() {
        let h = function_hopf(&g);
        let phi = find_integral(&h, Side::Left).unwrap();
        let r = check_dual_aqg(&h, &phi, Some(&group_hopf(&g)));
        assert!(r.passed(), "{r}");
        let (_, psi) = dual_aqg(&h, &phi).unwrap();
        assert_eq!(psi.values(), Vector::basis(g.order(), g.identity()));
    }
}

#[test]
fn multiplicative_unitary_conditions_hold() {
    for g in catalog() {
        for h in [function_hopf(&g), group_hopf(&g)] {
            let r = multiplicative_unitary_checks(&h);
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn coproduct_of_z2_is_implemented_on_the_second_leg_only() {
    let h = function_hopf(&FiniteGroup::cyclic(2));
    assert!(multiplier_implements_coproduct(&h, true));
    assert!(!multiplier_implements_coproduct(&h, false));
}

/// The transformation data recast as right coactions: `θ = (id⊗S)Σα` of
/// `K(G)` and `θ̂` trivial.
fn recast(act: &GroupAction) -> (Hopf, Coaction, Coaction) {
    let yd = transformation_yd(act);
    let h = function_hopf(act.group());
    let n = h.dim();
    let m = act.size();
    let map = LinearMap::identity(m).kron(h.antipode()).compose(&flip(n, m).compose(yd.alpha.map()));
    let theta = Coaction::new(h.clone(), yd.x.clone(), map, Side::Right);
    let theta_hat = Coaction::trivial(h.dual().coopposite(), yd.x.clone(), Side::Right);
    (h, theta, theta_hat)
}

#[test]
fn transformation_data_passes_both_routes() {
    let z2 = GroupAction::new(FiniteGroup::cyclic(2), 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
    for act in [z2, s3_on_three_points()] {
        let (h, theta, theta_hat) = recast(&act);
        let (r, direct, module) = yd_quantum_check(&h, &theta, &theta_hat);
        assert!(r.passed(), "{r}");
        assert_eq!(direct, QuantumVerdict { yd: true, bc: true });
        assert_eq!(direct, module);
    }
}

#[test]
fn trivial_pair_on_commutative_algebra_passes_with_bc() {
    let h = function_hopf(&FiniteGroup::s3());
    let x = set_functions(3);
    let theta = Coaction::trivial(h.clone(), x.clone(), Side::Right);
    let theta_hat = Coaction::trivial(h.dual().coopposite(), x, Side::Right);
    let (r, direct, module) = yd_quantum_check(&h, &theta, &theta_hat);
    assert!(r.passed(), "{r}");
    assert_eq!(direct, module);
}

/// `θ̂` grading `δ₁ − δ₂` by the transposition `s` and the rest trivially.
fn reflection_grading(h: &Hopf, g: &FiniteGroup) -> Coaction {
    let n = g.order();
    let s = g.position("s").unwrap();
    let e = g.identity();
    let half = Scalar::ratio(1, 2);
    let map = LinearMap::from_fn(3, 3 * n, |i| match i {
        0 => Vector::basis(3 * n, e),
        _ => {
            let sign = if i == 1 { half.clone() } else { -half.clone() };
            Vector::from_pairs(
                3 * n,
                [(n + e, half.clone()), (2 * n + e, half.clone()), (n + s, sign.clone()), (2 * n + s, -sign)],
            )
        }
    });
    Coaction::new(h.dual().coopposite(), set_functions(3), map, Side::Right)
}

#[test]
fn perturbed_dual_coaction_fails_both_routes() {
    let (h, theta, _) = recast(&s3_on_three_points());
    let theta_hat = reflection_grading(&h, &FiniteGroup::s3());
    let (r, direct, module) = yd_quantum_check(&h, &theta, &theta_hat);
    assert!(r.find("theta coaction").unwrap().passed);
    assert!(r.find("theta^ coaction").unwrap().passed, "{r}");
    assert!(!direct.yd);
    assert!(!module.yd);
    assert!(r.find("routes agree").unwrap().passed, "{r}");
}

/// `X = 𝕜[G]` with `θ = Δ` and `θ̂(λ_x) = Σ_k λ_{k⁻¹xk} ⊗ eᵏ`.
fn conjugation_grading(g: &FiniteGroup) -> (Hopf, Coaction, Coaction) {
    let h = group_hopf(g);
    let n = g.order();
    let theta = Coaction::regular(h.clone(), Side::Right);
    let map = LinearMap::from_fn(n, n * n, |x| {
        Vector::from_pairs(n * n, (0..n).map(|k| (g.mul(g.mul(g.inv(k), x), k) * n + k, Scalar::one())))
    });
    let theta_hat = Coaction::new(h.dual().coopposite(), h.alg().clone(), map, Side::Right);
    (h, theta, theta_hat)
}

#[test]
fn conjugation_grading_on_group_algebra_of_s3_is_braided_commutative() {
    let (h, theta, theta_hat) = conjugation_grading(&FiniteGroup::s3());
    let (r, direct, module) = yd_quantum_check(&h, &theta, &theta_hat);
    assert!(r.passed(), "{r}");
    assert_eq!(direct, QuantumVerdict { yd: true, bc: true });
    assert_eq!(module, direct);
    // standard-form oracle for the same data
    let pg = quantum_pairing(&h);
    let yd = YdPair::new(pg.clone(), theta.clone().with_hopf(pg.a().opposite()), theta_hat.clone().with_hopf(pg.b().clone()), Chirality::Rr, "conjugation");
    let st = convert_oc_to_standard(&yd);
    assert!(check_yd_standard(&st).passed());
    assert!(check_bc_standard(&st).passed());
    // conjugating by ΣU itself rejects the same data
    assert!(!direct_yd_identity(&h, &theta, &theta_hat, Conjugation::Literal));
}
