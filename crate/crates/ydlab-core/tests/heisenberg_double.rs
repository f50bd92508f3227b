use ydlab_core::groups::FiniteGroup;
use ydlab_core::heisenberg_double::{heisenberg_over_double, heisenberg_structure};
use ydlab_core::pairing::canonical_group_pairing;

#[test]
fn heisenberg_over_double_for_z2() {
    let p = canonical_group_pairing(&FiniteGroup::cyclic(2));
    let out = heisenberg_over_double(&p).unwrap_or_else(|r| panic!("{r}"));
    assert!(out.report.passed(), "{}", out.report);
    assert!(out.theta.is_some());
}

#[test]
fn heisenberg_over_double_for_z3_and_trivial_group() {
    for g in [FiniteGroup::cyclic(3), FiniteGroup::trivial()] {
        let p = canonical_group_pairing(&g);
        for q in [p.clone(), p.flip()] {
            let out = heisenberg_over_double(&q).unwrap_or_else(|r| panic!("{r}"));
            assert!(out.report.passed(), "{}", out.report);
        }
    }
}

#[test]
fn trivial_codouble_coaction_breaks_the_yd_condition_for_s3() {
    use ydlab_core::action::{Coaction, Side};
    use ydlab_core::yd::{check_yd_only_coaction, Chirality, YdPair};
    let p = canonical_group_pairing(&FiniteGroup::s3());
    let out = heisenberg_structure(&p).unwrap_or_else(|r| panic!("{r}"));
    assert!(out.report.passed(), "{}", out.report);
    let trivial = Coaction::trivial(out.pairing.b().clone(), out.heisenberg.clone(), Side::Right);
    let bad = YdPair::new(out.pairing.clone(), out.gamma_prime.clone(), trivial, Chirality::Lr, "trivial Gamma");
    assert!(!check_yd_only_coaction(&bad).passed());
}
