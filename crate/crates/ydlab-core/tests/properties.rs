use proptest::prelude::*;
use ydlab_core::aqg::yd_quantum_check;
use ydlab_core::catalog::sweep_groups;
use ydlab_core::groups::{function_hopf, group_hopf};
use ydlab_core::linear::{solve_exact, sparse_solve_many};
use ydlab_core::pairing::canonical_group_pairing;
use ydlab_core::transformation::{groupoid_algebras, transformation_quantum_data, transformation_yd, verify_crossed_isos};
use ydlab_core::yd::{check_bc_standard, check_braided_commutative, check_yd_only_coaction, check_yd_standard, convert_oc_to_standard};
use ydlab_core::{AlgebraOps, FiniteGroup, GroupAction, LinearMap, Scalar, Tensor, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6, -9i64..=9, 1i64..=6).prop_map(|(a, b, c, d)| Scalar::complex(a, b, c, d))
}

fn small_int() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(Scalar::from_int)
}

fn matrix(rows: usize, cols: usize, entry: impl Strategy<Value = Scalar>) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(entry, cols), rows)
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    prop::sample::select(sweep_groups())
}

/// `G` acting on `G/⟨h⟩` plus `fixed` trivial points, relabelled by a permutation.
fn action_of(g: &FiniteGroup, h: usize, fixed: usize, relabel_seed: usize) -> GroupAction {
    let n = g.order();
    let mut subgroup = vec![g.identity()];
    let mut x = h;
    while x != g.identity() {
        subgroup.push(x);
        x = g.mul(x, h);
    }
    // cosets xH, each named by its smallest member
    let coset = |x: usize| subgroup.iter().map(|&k| g.mul(x, k)).min().unwrap();
    let mut reps: Vec<usize> = (0..n).map(coset).collect();
    reps.sort();
    reps.dedup();
    let m = reps.len() + fixed;
    let mut relabel: Vec<usize> = (0..m).collect();
    let len = relabel.len();
    relabel.rotate_left(relabel_seed % len);
    let perms = (0..n)
        .map(|a| {
            let mut p = vec![0; m];
            for (i, &r) in reps.iter().enumerate() {
                let j = reps.iter().position(|&s| s == coset(g.mul(a, r))).unwrap();
                p[relabel[i]] = relabel[j];
            }
            for t in reps.len()..m {
                p[relabel[t]] = relabel[t];
            }
            p
        })
        .collect();
    GroupAction::new(g.clone(), m, perms).expect("coset action")
}

fn action() -> impl Strategy<Value = GroupAction> {
    (group(), any::<prop::sample::Index>(), 0usize..=1, any::<usize>())
        .prop_map(|(g, h, fixed, seed)| {
            let h = h.index(g.order());
            action_of(&g, h, fixed, seed)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        match a.inverse() {
            Ok(inv) => prop_assert!((&a * &inv).is_one()),
            Err(_) => prop_assert!(a.is_zero()),
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn contraction_of_a_tensor_product_is_matrix_multiplication(
        (a, b) in (1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(p, q, r)| (matrix(p, q, scalar()), matrix(q, r, scalar()))),
    ) {
        let (p, q, r) = (a.len(), b.len(), b[0].len());
        let ta = Tensor::from_dense(vec![p, q], a.concat()).unwrap();
        let tb = Tensor::from_dense(vec![q, r], b.concat()).unwrap();
        let contracted = ta.tensor_product(&tb).contract(1, 2).unwrap();
        let ma = LinearMap::from_rows(q, &a);
        let mb = LinearMap::from_rows(r, &b);
        let product = ma.compose(&mb);
        for i in 0..p {
            for k in 0..r {
                prop_assert_eq!(contracted.get(&[i, k]), product.entry(i, k));
            }
        }
    }

    #[test]
    fn exact_solvers_agree_and_invert(rows in matrix(4, 4, small_int()), x in prop::collection::vec(scalar(), 4)) {
        let a = LinearMap::from_rows(4, &rows);
        let x = Vector::from_dense(x);
        let b = a.apply(&x);
        let dense = solve_exact(&a, &b);
        let sparse = sparse_solve_many(&a, std::slice::from_ref(&b)).map(|mut v| v.remove(0));
        if a.rank() == 4 {
            prop_assert_eq!(dense.clone().unwrap(), x.clone());
            prop_assert_eq!(sparse.unwrap(), x);
        } else {
            prop_assert!(dense.is_err());
            prop_assert!(sparse.is_err());
        }
    }

    #[test]
    fn perturbed_cayley_tables_are_rejected(g in group(), at in any::<prop::sample::Index>(), shift in 1usize..6) {
        let n = g.order();
        prop_assume!(n > 1);
        let mut table: Vec<usize> = (0..n * n).map(|f| g.mul(f / n, f % n)).collect();
        let k = at.index(n * n);
        table[k] = (table[k] + 1 + shift % (n - 1)) % n;
        prop_assert!(!FiniteGroup::validate("perturbed", n, &table).passed());
        prop_assert!(FiniteGroup::from_table("perturbed", g.labels().to_vec(), table).is_err());
    }

    #[test]
    fn action_validation_matches_the_homomorphism_law(act in action(), at in any::<prop::sample::Index>()) {
        let g = act.group().clone();
        let m = act.size();
        prop_assume!(m > 1 && g.order() > 1);
        let mut perms: Vec<Vec<usize>> = (0..g.order()).map(|x| (0..m).map(|s| act.act(x, s)).collect()).collect();
        // swap two images of a non-identity element
        let x = 1 + at.index(g.order() - 1);
        perms[x].swap(0, 1);
        let n = g.order();
        let homomorphism = (0..n).all(|a| (0..n).all(|b| (0..m).all(|s| perms[g.mul(a, b)][s] == perms[a][perms[b][s]])));
        prop_assert_eq!(GroupAction::validate(&g, m, &perms).passed(), homomorphism);
        // a swap is a permutation, so only the composition law can fail
        let r = GroupAction::validate(&g, m, &perms);
        if let Some(c) = r.first_failure() {
            prop_assert_eq!(c.name.as_str(), "composition law");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn transformation_data_is_braided_commutative_yd(act in action()) {
        let yd = transformation_yd(&act);
        let y = check_yd_only_coaction(&yd);
        let b = check_braided_commutative(&yd);
        prop_assert!(y.passed(), "{}", y);
        prop_assert!(b.passed(), "{}", b);
        let st = convert_oc_to_standard(&yd);
        prop_assert!(check_yd_standard(&st).passed());
        prop_assert!(check_bc_standard(&st).passed());
    }

    #[test]
    fn groupoid_algebras_have_the_arrow_count_and_cross_validate(act in action()) {
        let (functions, convolution) = groupoid_algebras(&act);
        let d = act.group().order() * act.size();
        prop_assert_eq!(functions.dim(), d);
        prop_assert_eq!(convolution.dim(), d);
        let r = verify_crossed_isos(&act);
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn quantum_and_pairing_routes_agree(act in action()) {
        let (h, theta, theta_hat) = transformation_quantum_data(&act);
        let (r, direct, module) = yd_quantum_check(&h, &theta, &theta_hat);
        prop_assert_eq!(direct, module);
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn verdicts_agree_across_characterizations_on_trivial_pairs(g in group(), on_group_algebra in any::<bool>()) {
        let p = canonical_group_pairing(&g);
        let x = if on_group_algebra { group_hopf(&g).alg().clone() } else { function_hopf(&g).alg().clone() };
        let yd = ydlab_core::yd::YdPair::trivial(p, x, ydlab_core::yd::Chirality::Ll);
        let st = convert_oc_to_standard(&yd);
        prop_assert_eq!(check_yd_only_coaction(&yd).passed(), check_yd_standard(&st).passed());
        prop_assert_eq!(check_braided_commutative(&yd).passed(), check_bc_standard(&st).passed());
        prop_assert_eq!(check_braided_commutative(&yd).passed(), !on_group_algebra || g.is_abelian());
    }
}
