use ydlab_core::algebra::AlgebraOps;
use ydlab_core::groups::{FiniteGroup, GroupAction};
use ydlab_core::transformation::{groupoid_algebras, transformation_yd, verify_crossed_isos};
use ydlab_core::yd::{check_braided_commutative, check_yd_only_coaction};
use ydlab_core::{Scalar, Vector};

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

fn examples() -> Vec<GroupAction> {
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    vec![
        GroupAction::new(z2, 2, vec![vec![0, 1], vec![1, 0]]).unwrap(),
        GroupAction::left_translation(&z3),
        GroupAction::trivial(&z3, 2),
        s3_on_three_points(),
        GroupAction::trivial(&FiniteGroup::trivial(), 1),
    ]
}

#[test]
fn transformation_data_is_yd_and_braided_commutative() {
    for act in examples() {
        let yd = transformation_yd(&act);
        let r = check_yd_only_coaction(&yd);
        assert!(r.passed(), "{r}");
        let r = check_braided_commutative(&yd);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn groupoid_algebras_have_the_expected_shape() {
    let act = s3_on_three_points();
    let (functions, convolution) = groupoid_algebras(&act);
    assert_eq!(functions.dim(), 18);
    assert!(functions.is_commutative());
    assert!(!convolution.is_commutative());
    // the identity arrows are orthogonal idempotents summing to the unit
    let m = act.size();
    let mut sum = Vector::zero(18);
    for s in 0..m {
        let e = Vector::basis(18, s);
        assert_eq!(convolution.mul(&e, &e), e);
        sum.add_scaled(&Scalar::one(), &e);
    }
    assert_eq!(sum, convolution.unit());
    // λ_(r,0) λ_(r,0) is zero since r·0 ≠ 0
    let r = act.group().position("r").unwrap();
    let x = Vector::basis(18, r * m);
    assert!(convolution.mul(&x, &x).is_zero());
}

#[test]
fn crossed_products_are_the_groupoid_algebras() {
    for act in examples() {
        let r = verify_crossed_isos(&act);
        assert!(r.passed(), "{r}");
    }
}
