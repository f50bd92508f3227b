//! The named verification suites and the objects they are run on.

use std::panic::{catch_unwind, AssertUnwindSafe};

use clap::ValueEnum;
use ydlab_core::aqg::{check_aqg, check_dual_aqg, find_integral, multiplicative_unitary_checks, yd_quantum_check};
use ydlab_core::catalog::Model;
use ydlab_core::constructions::{
    check_drinfeld_double, check_heisenberg_relations, check_lu_anti_isos, double_codouble_pairing, drinfeld_codouble,
    drinfeld_double, heisenberg,
};
use ydlab_core::groups::{function_hopf, group_hopf, set_functions};
use ydlab_core::pairing::group_multiplier;
use ydlab_core::heisenberg_double::{heisenberg_over_double, heisenberg_structure};
use ydlab_core::transformation::{transformation_quantum_data, transformation_yd, transformation_yd_rl, verify_crossed_isos};
use ydlab_core::yd::{
    check_equivalence_square, check_braided_commutative, check_double_codouble_functor, check_yd_only_coaction,
    convert_oc_to_standard, convert_standard_to_oc, check_bc_standard, check_yd_standard, Chirality, YdPair,
};
use ydlab_core::{AlgebraOps, Coaction, Hopf, LinearMap, Pairing, Report, Scalar, Side, Vector};

use crate::model::Perturbation;

/// Largest group order for which the heisenberg-double suite also builds the
/// Majid codouble, whose dimension is the fourth power of the order.
pub const THETA_MAX_ORDER: usize = 3;

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Hopf axioms and Galois maps of `K(G)`, `𝕜[G]` and their variants.
    Hopf,
    /// The canonical pairing, its multiplier and the adjoint identities.
    Pairing,
    /// Heisenberg algebra, Drinfeld double and codouble, crossed products.
    Constructions,
    /// Yetter-Drinfeld and braided commutativity checks.
    Yd,
    /// The Heisenberg algebra as a Yetter-Drinfeld algebra over the double.
    HeisenbergDouble,
    /// Integrals, the dual quantum group and the multiplicative unitary.
    Aqg,
    /// Every suite above, in order.
    All,
}

impl Suite {
    /// The suites `self` expands to.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Hopf, Suite::Pairing, Suite::Constructions, Suite::Yd, Suite::HeisenbergDouble, Suite::Aqg],
            s => vec![s],
        }
    }

    /// The command line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Pairing => "pairing",
            Suite::Constructions => "constructions",
            Suite::Yd => "yd",
            Suite::HeisenbergDouble => "heisenberg-double",
            Suite::Aqg => "aqg",
            Suite::All => "all",
        }
    }
}

/// A validated model together with the perturbations to apply.
pub struct Context {
    /// The group and optional action.
    pub model: Model,
    /// Defects injected into the built objects.
    pub perturbations: Vec<Perturbation>,
}

impl Context {
    fn has(&self, p: Perturbation) -> bool {
        self.perturbations.contains(&p)
    }

    /// `K(G)`, with a doubled antipode value under [`Perturbation::Antipode`].
    pub fn function_hopf(&self) -> Hopf {
        let h = function_hopf(&self.model.group);
        if !self.has(Perturbation::Antipode) {
            return h;
        }
        let n = h.dim();
        let s = LinearMap::from_fn(n, n, |j| {
            let c = h.antipode().column(j);
            if j + 1 == n {
                c.scale(&Scalar::from_int(2))
            } else {
                c.clone()
            }
        });
        Hopf::new(h.name(), h.alg().clone(), h.delta().clone(), h.counit().clone(), s)
    }

    /// `𝕜[G]`.
    pub fn group_hopf(&self) -> Hopf {
        group_hopf(&self.model.group)
    }

    /// The canonical pairing of `K(G)` and `𝕜[G]`, perturbed as requested.
    pub fn pairing(&self) -> Pairing {
        let n = self.model.group.order();
        let matrix = LinearMap::from_fn(n, n, |j| {
            let scale = if self.has(Perturbation::PairingRow) && j + 1 == n { 2 } else { 1 };
            Vector::from_pairs(n, [(j, Scalar::from_int(scale))])
        });
        let p = Pairing::new(self.function_hopf(), self.group_hopf(), matrix).expect("square pairing matrix");
        match (self.has(Perturbation::MultiplierSign), p.try_u().cloned()) {
            (true, Some(u)) => p.with_multiplier(u.scale(&Scalar::from_int(-1))),
            _ => p,
        }
    }

    /// The dual coaction for the quantum group checks: trivial, or grading
    /// `δ₀ − δ₁` by an element of order two under [`Perturbation::DualCoaction`].
    fn dual_coaction(&self, h: &Hopf, x: &ydlab_core::Algebra) -> Coaction {
        let hat = h.dual().coopposite();
        let g = &self.model.group;
        let involution = (0..g.order()).find(|&k| k != g.identity() && g.mul(k, k) == g.identity());
        let m = x.dim();
        match (self.has(Perturbation::DualCoaction), involution) {
            (true, Some(k)) if m >= 2 => {
                let n = g.order();
                let e = g.identity();
                let half = Scalar::ratio(1, 2);
                let map = LinearMap::from_fn(m, m * n, |s| match s {
                    0 | 1 => {
                        let sign = if s == 0 { half.clone() } else { -half.clone() };
                        Vector::from_pairs(
                            m * n,
                            [(e, half.clone()), (n + e, half.clone()), (k, sign.clone()), (n + k, -sign)],
                        )
                    }
                    _ => Vector::basis(m * n, s * n + e),
                });
                Coaction::new(hat, x.clone(), map, Side::Right)
            }
            _ => Coaction::trivial(hat, x.clone(), Side::Right),
        }
    }
}

/// Runs one suite (not `all`) and returns its reports in a fixed order. A
/// panic inside the library is reported as a failed check.
pub fn run(suite: Suite, ctx: &Context) -> Vec<Report> {
    let body = || match suite {
        Suite::Hopf => hopf_suite(ctx),
        Suite::Pairing => pairing_suite(ctx),
        Suite::Constructions => constructions_suite(ctx),
        Suite::Yd => yd_suite(ctx),
        Suite::HeisenbergDouble => heisenberg_double_suite(ctx),
        Suite::Aqg => aqg_suite(ctx),
        Suite::All => suite.expand().into_iter().filter(|s| *s != Suite::All).flat_map(|s| run(s, ctx)).collect(),
    };
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(reports) => reports,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            let mut r = Report::new(suite.name());
            r.fail("suite completed", msg);
            vec![r]
        }
    }
}

fn hopf_suite(ctx: &Context) -> Vec<Report> {
    let mut out = Vec::new();
    for h in [ctx.function_hopf(), ctx.group_hopf()] {
        for v in [h.clone(), h.dual(), h.opposite(), h.coopposite()] {
            out.push(v.check_axioms());
            out.push(v.check_galois_maps().0);
        }
    }
    out
}

fn pairing_suite(ctx: &Context) -> Vec<Report> {
    let p = ctx.pairing();
    let mut canonical = Report::new(format!("canonical multiplier {}", ctx.model.group.name()));
    match p.try_u() {
        Some(u) => canonical.vectors_equal("U = sum delta_g x lambda_g", u, &group_multiplier(&ctx.model.group)),
        None => canonical.fail("U = sum delta_g x lambda_g", "no canonical multiplier"),
    }
    let mut out = vec![p.check_axioms(), p.check_multiplier_identities(), canonical, p.check_regular_actions()];
    if p.try_u().is_some() && p.matrix().rank() == p.dim() {
        out.push(p.check_adjoint_identities());
        out.push(p.check_derived_pairings());
    }
    out
}

fn constructions_suite(ctx: &Context) -> Vec<Report> {
    let p = ctx.pairing();
    let h = heisenberg(&p);
    let mut out = vec![h.check(&format!("H({}|{})", p.a().name(), p.b().name())), check_heisenberg_relations(&p, &h), check_lu_anti_isos(&p)];
    let d = drinfeld_double(&p);
    out.push(check_drinfeld_double(&p, &d));
    match drinfeld_codouble(&p) {
        Ok((t, r)) => {
            out.push(r);
            out.push(t.check_axioms());
        }
        Err(r) => out.push(r),
    }
    match double_codouble_pairing(&p) {
        Ok((big, r)) => {
            out.push(r);
            out.push(big.check_axioms());
        }
        Err(r) => out.push(r),
    }
    if let Some(act) = &ctx.model.action {
        out.push(verify_crossed_isos(act));
    }
    out
}

fn yd_suite(ctx: &Context) -> Vec<Report> {
    let g = &ctx.model.group;
    let p = ctx.pairing();
    let mut out = Vec::new();
    let trivial_functions = YdPair::trivial(p.clone(), set_functions(g.order()), Chirality::Ll);
    out.push(check_yd_only_coaction(&trivial_functions));
    out.push(check_braided_commutative(&trivial_functions));

    // the trivial pair on the group algebra is braided commutative exactly for abelian groups
    let trivial_group = YdPair::trivial(p.clone(), ctx.group_hopf().alg().clone(), Chirality::Ll);
    out.push(check_yd_only_coaction(&trivial_group));
    let bc = check_braided_commutative(&trivial_group);
    let mut dichotomy = Report::new(format!("trivial pair on k[{}]", g.name()));
    dichotomy.record(
        "braided commutative iff abelian",
        bc.passed() == g.is_abelian(),
        format!("braided commutativity is {} for an {} group", bc.passed(), if g.is_abelian() { "abelian" } else { "nonabelian" }),
    );
    if let Some(c) = bc.first_failure() {
        dichotomy.record("counterexample named", !c.detail.is_empty(), "empty counterexample");
    }
    out.push(dichotomy);

    if let Some(act) = &ctx.model.action {
        let yd = transformation_yd(act);
        out.push(check_yd_only_coaction(&yd));
        out.push(check_braided_commutative(&yd));
        let st = convert_oc_to_standard(&yd);
        out.push(check_yd_standard(&st));
        out.push(check_bc_standard(&st));
        let back = convert_standard_to_oc(&st, &yd.pairing);
        let mut round = Report::new(yd.provenance.clone());
        round.record(
            "standard round trip",
            back.alpha.map() == yd.alpha.map() && back.beta.map() == yd.beta.map(),
            "converting to standard form and back changes the coactions",
        );
        out.push(round);
        out.push(check_double_codouble_functor(&yd));
        out.push(check_equivalence_square(&transformation_yd_rl(act)));
    }
    out
}

fn heisenberg_double_suite(ctx: &Context) -> Vec<Report> {
    let p = ctx.pairing();
    let built = if ctx.model.group.order() <= THETA_MAX_ORDER { heisenberg_over_double(&p) } else { heisenberg_structure(&p) };
    match built {
        Ok(data) => vec![data.report],
        Err(r) => vec![r],
    }
}

fn aqg_suite(ctx: &Context) -> Vec<Report> {
    let mut out = Vec::new();
    let k = ctx.function_hopf();
    let kg = ctx.group_hopf();
    // the dual quantum group carries the co-opposite comultiplication
    for (h, reference) in [(&k, kg.clone()), (&kg, k.coopposite())] {
        let mut integrals = Report::new(format!("integrals of {}", h.name()));
        let mut left = None;
        for side in [Side::Left, Side::Right] {
            let name = if side == Side::Left { "left integral unique" } else { "right integral unique" };
            match find_integral(h, side) {
                Ok(phi) => {
                    integrals.pass(name);
                    if side == Side::Left {
                        left = Some(phi);
                    }
                }
                Err(r) => integrals.summarize(name, &r),
            }
        }
        out.push(integrals);
        if let Some(phi) = left {
            out.push(check_aqg(h, &phi));
            out.push(check_dual_aqg(h, &phi, Some(&reference)));
        }
        out.push(multiplicative_unitary_checks(h));
    }
    let (h, theta) = match &ctx.model.action {
        Some(act) => {
            let (h, theta, _) = transformation_quantum_data(act);
            (h, theta)
        }
        None => {
            let h = k.clone();
            let theta = Coaction::trivial(h.clone(), set_functions(ctx.model.group.order()), Side::Right);
            (h, theta)
        }
    };
    let theta_hat = ctx.dual_coaction(&h, theta.alg());
    out.push(yd_quantum_check(&h, &theta, &theta_hat).0);
    out
}
