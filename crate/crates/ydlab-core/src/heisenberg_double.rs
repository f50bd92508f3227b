//! The Heisenberg algebra `ℋ(p) = A # B` as a Yetter–Drinfeld algebra over
//! the pairing `ℙ̄` of the Drinfeld double `𝒟 = A^co ⋈ B` with the codouble
//! `𝒯(p̄) = B^op ⊗ A`.
//!
//! `𝒟` is the double of `A^co × B^op`, so it has the basis `a⋈b` flattened as
//! `a·n + b`, the same as `ℋ(p)`, and the Lu map `L̄(a⋈b) = a#b` is the
//! identity matrix. It is a linear isomorphism, not an algebra map.
//! The structure maps are
//!
//! * `Γ′ = (id⊗L̄)Δ_𝒟 L̄⁻¹`, a left `𝒟`-coaction on `ℋ(p)`;
//! * `α = Ad(V̄)(·⊗1)` with `V̄ = (ι_A⊗id)(U°) ∈ ℋ(p)⊗B^op`;
//! * `β = Ad(Ū)(·⊗1)` with `Ū = (ι_B⊗id)(Σ U) ∈ ℋ(p)⊗A`;
//! * `Γ = (α⊗id)β`, a right `𝒯(p̄)`-coaction;
//! * `Θ = (ΣΓ′⊗id)Γ`, a right coaction of the Majid codouble `𝒟^co ⊗ 𝒯(p̄)`
//!   built from the skew-copairing `Σ(W̄)⁻¹`, with `W̄` the canonical
//!   multiplier of `ℙ̄`.

use alloc::format;
use alloc::string::String;
use alloc::vec;

use crate::action::{coaction_from_multiplier, Coaction, Side};
use crate::algebra::{Algebra, AlgebraOps, TensorAlgebra};
use crate::constructions::{double_codouble_pairing, heisenberg, twisted_coproduct_from_skew_copairing};
use crate::hopf::Hopf;
use crate::linear::{contract_leg, flip, kron_after, permute_legs, LinearMap, Vector};
use crate::pairing::Pairing;
use crate::report::Report;
use crate::yd::{check_yd_only_coaction, Chirality, YdPair};

/// The structure maps on `ℋ(p)` and the report of every identity checked.
#[derive(Clone, Debug)]
pub struct HeisenbergOverDouble {
    /// `ℋ(p) = A # B`.
    pub heisenberg: Algebra,
    /// The pairing `ℙ̄` between `𝒟` and `𝒯(p̄)`.
    pub pairing: Pairing,
    /// `Γ′`, a left coaction of `𝒟`.
    pub gamma_prime: Coaction,
    /// `α`, a right coaction of `B^op`.
    pub alpha: Coaction,
    /// `β`, a right coaction of `A`.
    pub beta: Coaction,
    /// `Γ = (α⊗id)β`, a right coaction of `𝒯(p̄)`.
    pub gamma: Coaction,
    /// The Majid codouble and `Θ`, when the skew-copairing yields a Hopf algebra.
    pub theta: Option<Coaction>,
    /// All checks.
    pub report: Report,
}

fn h_label(h: &Algebra) -> impl Fn(usize) -> String + '_ {
    move |i| String::from(h.label(i))
}

/// `a^co ▷ (a′#b) = a₃a′S⁻¹(a₂) # (b ◀ S⁻¹(a₁))`.
fn alpha_action_formula(p: &Pairing, a: usize, x: usize) -> Vector {
    let n = p.dim();
    let (ha, hb) = (p.a(), p.b());
    let (a2, b) = (ha.e(x / n), hb.e(x % n));
    let mut out = Vector::zero(n * n);
    for (f, c) in ha.delta2().column(a).iter() {
        let (i1, i2, i3) = (f / (n * n), (f / n) % n, f % n);
        let left = ha.mul(&ha.mul(&ha.e(i3), &a2), &ha.s_inv(&ha.e(i2)));
        let right = p.b_right_a(&b, &ha.s_inv(&ha.e(i1)));
        out.add_scaled(c, &left.kron(&right));
    }
    out
}

/// `b ▷ (a#b′) = (b₁ ▶ a) # b₂b′S(b₃)`.
fn beta_action_formula(p: &Pairing, b: usize, x: usize) -> Vector {
    let n = p.dim();
    let (ha, hb) = (p.a(), p.b());
    let (a, b2) = (ha.e(x / n), hb.e(x % n));
    let mut out = Vector::zero(n * n);
    for (f, c) in hb.delta2().column(b).iter() {
        let (i1, i2, i3) = (f / (n * n), (f / n) % n, f % n);
        let left = p.b_on_a(&hb.e(i1), &a);
        let right = hb.mul(&hb.mul(&hb.e(i2), &b2), &hb.s(&hb.e(i3)));
        out.add_scaled(c, &left.kron(&right));
    }
    out
}

/// `(a′⋈b′) ▷ (a#b) = a′₃(b′₁ ▶ a)S⁻¹(a′₂) # (b′₂ b S(b′₃) ◀ S⁻¹(a′₁))`.
fn double_action_formula(p: &Pairing, d: usize, x: usize) -> Vector {
    let n = p.dim();
    let (ha, hb) = (p.a(), p.b());
    let (a, b) = (ha.e(x / n), hb.e(x % n));
    let da = ha.delta2();
    let db = hb.delta2();
    let mut out = Vector::zero(n * n);
    for (f, c) in da.column(d / n).iter() {
        let (a1, a2, a3) = (f / (n * n), (f / n) % n, f % n);
        for (g, c2) in db.column(d % n).iter() {
            let (b1, b2, b3) = (g / (n * n), (g / n) % n, g % n);
            let left = ha.mul(&ha.mul(&ha.e(a3), &p.b_on_a(&hb.e(b1), &a)), &ha.s_inv(&ha.e(a2)));
            let mid = hb.mul(&hb.mul(&hb.e(b2), &b), &hb.s(&hb.e(b3)));
            let right = p.b_right_a(&mid, &ha.s_inv(&ha.e(a1)));
            out.add_scaled(&(c * c2), &left.kron(&right));
        }
    }
    out
}

/// `a#b ↦ (a₂⋈b₁) ⊗ (a₁#b₂)`.
fn gamma_prime_formula(p: &Pairing, x: usize) -> Vector {
    let n = p.dim();
    let m = n * n;
    let mut out = Vector::zero(m * m);
    for (f, c) in p.a().delta().column(x / n).iter() {
        let (a1, a2) = (f / n, f % n);
        for (g, c2) in p.b().delta().column(x % n).iter() {
            let (b1, b2) = (g / n, g % n);
            out.add_term((a2 * n + b1) * m + a1 * n + b2, &(c * c2));
        }
    }
    out
}

/// Builds `Γ′`, `α`, `β`, `Γ` and `Θ` on `ℋ(p)` and checks them: the Lu
/// identification, the explicit formulas for `Γ′` and the two induced actions,
/// `(ℋ(p), α, β)` as an `Rr` pair over `p̄`, the factorization
/// `V̄₁₂Ū₁₃ = (L̄⊗id)W̄`, the `Lr` Yetter–Drinfeld condition for `(Γ′, Γ)` over
/// `ℙ̄`, the induced `𝒟`-action and the coaction law of `Θ`.
pub fn heisenberg_over_double(p: &Pairing) -> Result<HeisenbergOverDouble, Report> {
    build(p, true)
}

/// [`heisenberg_over_double`] without the Majid codouble and `Θ`, whose
/// dimension `n⁴` makes them the expensive part.
pub fn heisenberg_structure(p: &Pairing) -> Result<HeisenbergOverDouble, Report> {
    build(p, false)
}

fn build(p: &Pairing, with_theta: bool) -> Result<HeisenbergOverDouble, Report> {
    let n = p.dim();
    let m = n * n;
    let mut r = Report::new(format!("H({}|{}) over the double", p.a().name(), p.b().name()));
    let h = heisenberg(p);
    let (big, br) = double_codouble_pairing(&p.flip())?;
    r.summarize("double/codouble pairing", &br);
    let d = big.a();
    let t = big.b();
    let id_m = LinearMap::identity(m);

    // L̄ is linear only: it matches ι_𝒟,A(a) ι_𝒟,B(b) with ι_A(a) ι_B(b)
    let mut bad = None;
    for f in 0..m {
        let (a, b) = (p.a().e(f / n), p.b().e(f % n));
        let lhs = d.mul(&a.kron(&p.b().one()), &p.a().one().kron(&b));
        let rhs = h.mul(&a.kron(&p.b().one()), &p.a().one().kron(&b));
        if lhs != rhs || lhs != Vector::basis(m, f) {
            bad = Some(f);
            break;
        }
    }
    r.record("Lu identification", bad.is_none(), bad.map(|f| String::from(h.label(f))).unwrap_or_default());
    let gamma_prime = Coaction::new(d.clone(), h.clone(), d.delta().clone(), Side::Left);
    let sweedler = LinearMap::from_fn(m, m * m, |x| gamma_prime_formula(p, x));
    r.maps_equal("Gamma' formula", gamma_prime.map(), &sweedler, &h_label(&h));
    r.summarize("Gamma' coaction", &gamma_prime.check());

    let bop = p.b().opposite();
    let (one_a, one_b) = (p.a().one(), p.b().one());
    let mut v_bar = Vector::zero(m * n);
    let mut u_bar = Vector::zero(m * n);
    for (f, c) in p.u().iter() {
        let (ai, bi) = (p.a().e(f / n), p.b().e(f % n));
        v_bar.add_scaled(c, &ai.kron(&one_b).kron(&bi));
        u_bar.add_scaled(c, &one_a.kron(&bi).kron(&ai));
    }
    let alpha = coaction_from_multiplier(&v_bar, &bop, &h, Side::Right).map_err(|e| {
        let mut r = r.clone();
        r.summarize("alpha from V", &e);
        r
    })?;
    let beta = coaction_from_multiplier(&u_bar, p.a(), &h, Side::Right).map_err(|e| {
        let mut r = r.clone();
        r.summarize("beta from U", &e);
        r
    })?;
    r.summarize("alpha coaction", &alpha.check());
    r.summarize("beta coaction", &beta.check());

    let alpha_action = |a: usize, x: &Vector| contract_leg(&alpha.coact(x), &[m, n], 1, &p.left_functional(&p.a().e(a)));
    let beta_action = |b: usize, x: &Vector| contract_leg(&beta.coact(x), &[m, n], 1, &p.right_functional(&p.b().e(b)));
    let mut ok = None;
    'a: for a in 0..n {
        for x in 0..m {
            if alpha_action(a, &Vector::basis(m, x)) != alpha_action_formula(p, a, x) {
                ok = Some(format!("a = {}, x = {}", p.a().label(a), h.label(x)));
                break 'a;
            }
        }
    }
    r.record("alpha action formula", ok.is_none(), ok.unwrap_or_default());
    let mut ok = None;
    'b: for b in 0..n {
        for x in 0..m {
            if beta_action(b, &Vector::basis(m, x)) != beta_action_formula(p, b, x) {
                ok = Some(format!("b = {}, x = {}", p.b().label(b), h.label(x)));
                break 'b;
            }
        }
    }
    r.record("beta action formula", ok.is_none(), ok.unwrap_or_default());

    let rr = YdPair::new(p.flip(), alpha.clone(), beta.clone(), Chirality::Rr, "Heisenberg algebra");
    r.summarize("rr-YD over p bar", &check_yd_only_coaction(&rr));

    let hba = TensorAlgebra::new(vec![&h, bop.alg(), p.a().alg()]);
    let x_mult = hba.mul(&hba.embed(&v_bar, &[0, 1]), &hba.embed(&u_bar, &[0, 2]));
    r.vectors_equal("V12U13 = (L x id)W", &x_mult, big.u());

    let gamma_map = kron_after(&[alpha.map(), &LinearMap::identity(n)], beta.map());
    let gamma = Coaction::new(t.clone(), h.clone(), gamma_map, Side::Right);
    r.summarize("Gamma coaction", &gamma.check());
    let htt = TensorAlgebra::new(vec![&h, t.alg()]);
    let x_inv = htt.inverse(&x_mult).unwrap_or_else(|| Vector::zero(m * m));
    let conj = LinearMap::from_fn(m, m * m, |i| htt.mul(&htt.mul(&x_mult, &Vector::basis(m, i).kron(&t.one())), &x_inv));
    r.maps_equal("Gamma = Ad(X)", gamma.map(), &conj, &h_label(&h));

    let lr = YdPair::new(big.clone(), gamma_prime.clone(), gamma.clone(), Chirality::Lr, "Heisenberg algebra over the double");
    r.summarize("lr-YD over P bar", &check_yd_only_coaction(&lr));

    let induced = LinearMap::from_fn(m * m, m, |f| {
        let (dd, x) = (f / m, f % m);
        contract_leg(&gamma.coact(&Vector::basis(m, x)), &[m, m], 1, &big.left_functional(&d.e(dd)))
    });
    let formula = LinearMap::from_fn(m * m, m, |f| double_action_formula(p, f / m, f % m));
    let composite = LinearMap::from_fn(m * m, m, |f| {
        let (dd, x) = (f / m, f % m);
        let inner = beta_action(dd % n, &Vector::basis(m, x));
        let mut out = Vector::zero(m);
        for (y, c) in inner.iter() {
            out.add_scaled(c, &alpha_action(dd / n, &Vector::basis(m, y)));
        }
        out
    });
    let pair_label = |f: usize| format!("{} on {}", d.label(f / m), h.label(f % m));
    r.maps_equal("double action formula", &induced, &formula, &pair_label);
    r.maps_equal("double action = alpha after beta", &induced, &composite, &pair_label);

    if !with_theta {
        return Ok(HeisenbergOverDouble { heisenberg: h, pairing: big, gamma_prime, alpha, beta, gamma, theta: None, report: r });
    }
    let dco = d.coopposite();
    let w = flip(m, m).apply(big.u_inv());
    let theta = match twisted_coproduct_from_skew_copairing(&w, &dco, t, "T_M") {
        Ok((majid, mr)) => {
            r.summarize("Majid codouble", &mr);
            let theta_map = permute_legs(&[m, m, m], &[1, 0, 2]).compose(&kron_after(&[gamma_prime.map(), &id_m], gamma.map()));
            let theta = Coaction::new(majid, h.clone(), theta_map, Side::Right);
            r.summarize("Theta coaction", &theta.check());
            Some(theta)
        }
        Err(e) => {
            r.summarize("Majid codouble", &e);
            None
        }
    };

    Ok(HeisenbergOverDouble { heisenberg: h, pairing: big, gamma_prime, alpha, beta, gamma, theta, report: r })
}

/// The Majid codouble carried by [`HeisenbergOverDouble::theta`].
pub fn majid_codouble(data: &HeisenbergOverDouble) -> Option<&Hopf> {
    data.theta.as_ref().map(|c| c.hopf())
}
