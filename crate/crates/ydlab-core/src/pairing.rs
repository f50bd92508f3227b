//! Pairings of Hopf *-algebras, their regular actions and canonical multipliers.
//!
//! A [`Pairing`] between `A` and `B` is a bilinear form `p(a, b)` stored as the
//! matrix `P[i][j] = p(eᵢ, fⱼ)`. The canonical multiplier `U ∈ A⊗B` is the
//! solution of `p²(U, b⊗a) = p(a, b)` with `p²(a⊗b, b′⊗a′) = p(a, b′)p(a′, b)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraOps, TensorAlgebra};
use crate::groups::{function_hopf, group_hopf, FiniteGroup};
use crate::hopf::Hopf;
use crate::linear::{apply_kron, contract_leg, flip, sparse_solve_many, LinearMap, SolveError, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

/// Rejected pairing data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingError {
    /// The two Hopf algebras have different dimensions, so no pairing between
    /// them can be non-degenerate.
    DimensionMismatch(usize, usize),
    /// The matrix does not have shape `dim A × dim B`.
    MatrixShape,
}

impl fmt::Display for PairingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairingError::DimensionMismatch(a, b) => write!(f, "a non-degenerate pairing needs equal dimensions, got {a} and {b}"),
            PairingError::MatrixShape => write!(f, "pairing matrix shape does not match the Hopf algebras"),
        }
    }
}

/// A bilinear pairing `p: A × B → 𝕜` together with its canonical multiplier.
#[derive(Clone, Debug)]
pub struct Pairing {
    a: Hopf,
    b: Hopf,
    // dom = dim B, cod = dim A, entry (i, j) = p(eᵢ, fⱼ)
    matrix: LinearMap,
    u: Option<Vector>,
    u_inv: Option<Vector>,
}

impl Pairing {
    /// Builds a pairing from the matrix `rows[i][j] = p(eᵢ, fⱼ)` given as a map
    /// `B → A` with entry `(i, j) = p(eᵢ, fⱼ)`, and solves for the canonical multiplier.
    pub fn new(a: Hopf, b: Hopf, matrix: LinearMap) -> Result<Self, PairingError> {
        if a.dim() != b.dim() {
            return Err(PairingError::DimensionMismatch(a.dim(), b.dim()));
        }
        if matrix.dom() != b.dim() || matrix.cod() != a.dim() {
            return Err(PairingError::MatrixShape);
        }
        let mut p = Pairing { a, b, matrix, u: None, u_inv: None };
        p.u = p.solve_multiplier().ok();
        p.u_inv = p.u.as_ref().and_then(|u| p.ab().inverse(u));
        Ok(p)
    }

    /// Replaces the canonical multiplier by a given element, for probing the
    /// multiplier identities with wrong data.
    pub fn with_multiplier(mut self, u: Vector) -> Self {
        self.u_inv = self.ab().inverse(&u);
        self.u = Some(u);
        self
    }

    /// The left Hopf algebra `A`.
    pub fn a(&self) -> &Hopf {
        &self.a
    }

    /// The right Hopf algebra `B`.
    pub fn b(&self) -> &Hopf {
        &self.b
    }

    /// The matrix as a map `B → A`: `P fⱼ = Σᵢ p(eᵢ, fⱼ) eᵢ`.
    pub fn matrix(&self) -> &LinearMap {
        &self.matrix
    }

    /// Common dimension.
    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// The algebra `A⊗B`, where the canonical multiplier lives.
    pub fn ab(&self) -> TensorAlgebra<'_> {
        TensorAlgebra::new(alloc::vec![self.a.alg(), self.b.alg()])
    }

    /// `p(x, y)`.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        x.dot(&self.matrix.apply(y))
    }

    /// Legwise pairing of `A^{⊗k}` with `B^{⊗k}`.
    pub fn eval_legs(&self, x: &Vector, y: &Vector, legs: usize) -> Scalar {
        let maps: Vec<&LinearMap> = (0..legs).map(|_| &self.matrix).collect();
        x.dot(&apply_kron(&maps, y))
    }

    /// `p²(u, v)` for `u ∈ A⊗B`, `v ∈ B⊗A`.
    pub fn eval2(&self, u: &Vector, v: &Vector) -> Scalar {
        // with v = b′⊗a′, the vector P b′ ⊗ Pᵀ a′ pairs with a⊗b to p(a, b′) p(a′, b)
        let pt = self.matrix.transpose();
        u.dot(&apply_kron(&[&self.matrix, &pt], v))
    }

    /// The functional `p(x, ·)` on `B` as a coefficient vector.
    pub fn left_functional(&self, x: &Vector) -> Vector {
        self.matrix.transpose().apply(x)
    }

    /// The functional `p(·, y)` on `A` as a coefficient vector.
    pub fn right_functional(&self, y: &Vector) -> Vector {
        self.matrix.apply(y)
    }

    /// `a ▶ b = b₁ p(a, b₂)` in `B`.
    pub fn a_on_b(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.dim();
        contract_leg(&self.b.comul(b), &[n, n], 1, &self.left_functional(a))
    }

    /// `b ◀ a = p(a, b₁) b₂` in `B`.
    pub fn b_right_a(&self, b: &Vector, a: &Vector) -> Vector {
        let n = self.dim();
        contract_leg(&self.b.comul(b), &[n, n], 0, &self.left_functional(a))
    }

    /// `b ▶ a = a₁ p(a₂, b)` in `A`.
    pub fn b_on_a(&self, b: &Vector, a: &Vector) -> Vector {
        let n = self.dim();
        contract_leg(&self.a.comul(a), &[n, n], 1, &self.right_functional(b))
    }

    /// `a ◀ b = p(a₁, b) a₂` in `A`.
    pub fn a_right_b(&self, a: &Vector, b: &Vector) -> Vector {
        let n = self.dim();
        contract_leg(&self.a.comul(a), &[n, n], 0, &self.right_functional(b))
    }

    /// `(id ⊗ p(a′, ·))(x)` for `x ∈ A⊗B`.
    pub fn slice_b(&self, x: &Vector, a_prime: &Vector) -> Vector {
        let n = self.dim();
        contract_leg(x, &[n, n], 1, &self.left_functional(a_prime))
    }

    /// The four regular actions as maps, in the order
    /// `▶: A⊗B→B`, `◀: B⊗A→B`, `▶: B⊗A→A`, `◀: A⊗B→A`.
    pub fn regular_actions(&self) -> [LinearMap; 4] {
        let n = self.dim();
        let e = |i: usize| Vector::basis(n, i);
        [
            LinearMap::from_fn(n * n, n, |f| self.a_on_b(&e(f / n), &e(f % n))),
            LinearMap::from_fn(n * n, n, |f| self.b_right_a(&e(f / n), &e(f % n))),
            LinearMap::from_fn(n * n, n, |f| self.b_on_a(&e(f / n), &e(f % n))),
            LinearMap::from_fn(n * n, n, |f| self.a_right_b(&e(f / n), &e(f % n))),
        ]
    }

    /// Solves `p²(U, b⊗a) = p(a, b)` for `U ∈ A⊗B` by exact elimination.
    pub fn solve_multiplier(&self) -> Result<Vector, SolveError> {
        let n = self.dim();
        let p = |i: usize, j: usize| self.matrix.entry(i, j);
        // unknown (i, j) ↦ Σ_{k,l} P[i][l] P[k][j] in row (k, l)
        let rows_a: Vec<Vector> = self.matrix.rows();
        let system = LinearMap::from_fn(n * n, n * n, |f| {
            let (i, j) = (f / n, f % n);
            let mut col = Vector::zero(n * n);
            for (l, pil) in rows_a[i].iter() {
                for (k, pkj) in self.matrix.column(j).iter() {
                    col.add_term(k * n + l, &(pil * pkj));
                }
            }
            col
        });
        let rhs = Vector::from_pairs(n * n, (0..n).flat_map(|k| (0..n).map(move |l| (k * n + l, p(k, l)))));
        sparse_solve_many(&system, &[rhs]).map(|mut v| v.remove(0))
    }

    /// The canonical multiplier `U`.
    ///
    /// # Panics
    /// When the defining system has no unique solution.
    pub fn u(&self) -> &Vector {
        self.u.as_ref().expect("pairing has no canonical multiplier")
    }

    /// The inverse `U⁻¹` in `A⊗B`.
    ///
    /// # Panics
    /// When `U` is missing or not invertible.
    pub fn u_inv(&self) -> &Vector {
        self.u_inv.as_ref().expect("canonical multiplier is not invertible")
    }

    /// The canonical multiplier, if the defining system has a unique solution.
    pub fn try_u(&self) -> Option<&Vector> {
        self.u.as_ref()
    }

    fn pair_label(&self, i: usize, j: usize) -> String {
        format!("({}, {})", self.a.label(i), self.b.label(j))
    }

    /// Verifies the pairing axioms in a fixed order: dimensions,
    /// multiplicativity on each side, units, antipode exchange, the two
    /// *-conditions, non-degeneracy and unitality of the regular actions.
    pub fn check_axioms(&self) -> Report {
        let mut r = Report::new(format!("pairing {}|{}", self.a.name(), self.b.name()));
        let n = self.dim();
        r.pass("dimensions");
        let e = |i: usize| Vector::basis(n, i);

        let mut bad = None;
        'a: for i in 0..n {
            for j in 0..n {
                let aa = self.a.mul(&e(i), &e(j));
                for k in 0..n {
                    let lhs = self.eval(&aa, &e(k));
                    let rhs = self.eval_legs(&e(i).kron(&e(j)), &self.b.comul(&e(k)), 2);
                    if lhs != rhs {
                        bad = Some((i, j, k, lhs, rhs));
                        break 'a;
                    }
                }
            }
        }
        match bad {
            None => r.pass("multiplicativity in A"),
            Some((i, j, k, l, rr)) => r.fail(
                "multiplicativity in A",
                format!("p({} {}, {}) = {l} but p(a, b₁)p(a′, b₂) = {rr}", self.a.label(i), self.a.label(j), self.b.label(k)),
            ),
        }
        let mut bad = None;
        'b: for i in 0..n {
            for j in 0..n {
                let bb = self.b.mul(&e(i), &e(j));
                for k in 0..n {
                    let lhs = self.eval(&e(k), &bb);
                    let rhs = self.eval_legs(&self.a.comul(&e(k)), &e(i).kron(&e(j)), 2);
                    if lhs != rhs {
                        bad = Some((i, j, k, lhs, rhs));
                        break 'b;
                    }
                }
            }
        }
        match bad {
            None => r.pass("multiplicativity in B"),
            Some((i, j, k, l, rr)) => r.fail(
                "multiplicativity in B",
                format!("p({}, {} {}) = {l} but p(a₁, b)p(a₂, b′) = {rr}", self.a.label(k), self.b.label(i), self.b.label(j)),
            ),
        }
        let bad_unit = (0..n).find(|&i| {
            self.eval(&self.a.one(), &e(i)) != self.b.eps(&e(i)) || self.eval(&e(i), &self.b.one()) != self.a.eps(&e(i))
        });
        match bad_unit {
            None => r.pass("units"),
            Some(i) => r.fail("units", format!("p(1, f) differs from ε(f) or p(e, 1) from ε(e) at index {i}")),
        }
        let bad = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
            self.eval(&e(i), &self.b.s(&e(j))) != self.eval(&self.a.s(&e(i)), &e(j))
        });
        match bad {
            None => r.pass("antipode exchange"),
            Some((i, j)) => r.fail("antipode exchange", format!("p(a, S b) differs from p(S a, b) at {}", self.pair_label(i, j))),
        }
        if self.a.star().is_some() && self.b.star().is_some() {
            let bad = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
                let lhs = self.eval(&self.a.star_of(&e(i)), &e(j));
                let rhs = self.eval(&e(i), &self.b.star_of(&self.b.s(&e(j)))).conj();
                lhs != rhs
            });
            match bad {
                None => r.pass("star in A"),
                Some((i, j)) => r.fail("star in A", format!("p(a*, b) differs from conj p(a, S(b)*) at {}", self.pair_label(i, j))),
            }
            let bad = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
                let lhs = self.eval(&e(i), &self.b.star_of(&e(j)));
                let rhs = self.eval(&self.a.star_of(&self.a.s(&e(i))), &e(j)).conj();
                lhs != rhs
            });
            match bad {
                None => r.pass("star in B"),
                Some((i, j)) => r.fail("star in B", format!("p(a, b*) differs from conj p(S(a)*, b) at {}", self.pair_label(i, j))),
            }
        }
        let rank = self.matrix.rank();
        r.record("non-degeneracy", rank == n, format!("pairing matrix has rank {rank} of {n}"));
        let one_a = self.a.one();
        let one_b = self.b.one();
        let unital = (0..n).all(|i| {
            self.a_on_b(&one_a, &e(i)) == e(i)
                && self.b_right_a(&e(i), &one_a) == e(i)
                && self.b_on_a(&one_b, &e(i)) == e(i)
                && self.a_right_b(&e(i), &one_b) == e(i)
        });
        r.record("regular actions unital", unital, "1 does not act as the identity");
        r
    }

    /// Verifies that the four regular actions are module-algebra actions and
    /// satisfy `p(aa′, b) = p(a, a′▶b) = p(a′, b◀a)` and
    /// `p(a, bb′) = p(a◀b, b′) = p(b′▶a, b)`.
    pub fn check_regular_actions(&self) -> Report {
        let mut r = Report::new(format!("regular actions {}|{}", self.a.name(), self.b.name()));
        let n = self.dim();
        let e = |i: usize| Vector::basis(n, i);
        let mut ok_mod = true;
        let mut ok_compat = true;
        let mut ok_alg = true;
        for i in 0..n {
            for j in 0..n {
                let ai = e(i);
                let aj = e(j);
                let aa = self.a.mul(&ai, &aj);
                let bb = self.b.mul(&ai, &aj);
                for k in 0..n {
                    let x = e(k);
                    // module laws: (aa′)▶b = a▶(a′▶b), b◀(aa′) = (b◀a)◀a′, and the mirrored ones
                    ok_mod &= self.a_on_b(&aa, &x) == self.a_on_b(&ai, &self.a_on_b(&aj, &x));
                    ok_mod &= self.b_right_a(&x, &aa) == self.b_right_a(&self.b_right_a(&x, &ai), &aj);
                    ok_mod &= self.b_on_a(&bb, &x) == self.b_on_a(&ai, &self.b_on_a(&aj, &x));
                    ok_mod &= self.a_right_b(&x, &bb) == self.a_right_b(&self.a_right_b(&x, &ai), &aj);
                    ok_compat &= self.eval(&aa, &x) == self.eval(&ai, &self.a_on_b(&aj, &x));
                    ok_compat &= self.eval(&aa, &x) == self.eval(&aj, &self.b_right_a(&x, &ai));
                    ok_compat &= self.eval(&x, &bb) == self.eval(&self.a_right_b(&x, &ai), &aj);
                    ok_compat &= self.eval(&x, &bb) == self.eval(&self.b_on_a(&aj, &x), &ai);
                    // module algebra: a ▶ (b b′) = (a₁ ▶ b)(a₂ ▶ b′) for the A-action on B
                    let lhs = self.a_on_b(&x, &bb);
                    let d = self.a.comul(&x);
                    let mut rhs = Vector::zero(n);
                    for (f, c) in d.iter() {
                        let t = self.b.mul(&self.a_on_b(&e(f / n), &ai), &self.a_on_b(&e(f % n), &aj));
                        rhs.add_scaled(c, &t);
                    }
                    ok_alg &= lhs == rhs;
                    let lhs = self.b_on_a(&x, &aa);
                    let d = self.b.comul(&x);
                    let mut rhs = Vector::zero(n);
                    for (f, c) in d.iter() {
                        let t = self.a.mul(&self.b_on_a(&e(f / n), &ai), &self.b_on_a(&e(f % n), &aj));
                        rhs.add_scaled(c, &t);
                    }
                    ok_alg &= lhs == rhs;
                }
            }
        }
        r.record("module laws", ok_mod, "an action is not associative");
        r.record("pairing compatibility", ok_compat, "a regular action is not adjoint to multiplication");
        r.record("module algebra", ok_alg, "a regular action does not respect products");
        r
    }

    /// Verifies the identities of the canonical multiplier, in the order:
    /// invertibility, `(Δ_A⊗id)U = U₁₃U₂₃`, `(id⊗Δ_B)U = U₁₂U₁₃`,
    /// `U = (S_A⁻¹⊗S_B)U = (S_A⊗S_B⁻¹)U`, `U⁻¹ = (id⊗S_B)U = (S_A⊗id)U`,
    /// unitarity in the *-case, and finally the defining equation.
    pub fn check_multiplier_identities(&self) -> Report {
        let mut r = Report::new(format!("multiplier {}|{}", self.a.name(), self.b.name()));
        let n = self.dim();
        let Some(u) = self.u.as_ref() else {
            r.fail("U exists", "the defining system has no unique solution");
            return r;
        };
        let Some(u_inv) = self.u_inv.as_ref() else {
            r.fail("U invertible", "U has no inverse in A⊗B");
            return r;
        };
        r.pass("U invertible");
        r.pass("admissible (unital)");
        let (sa, sb) = (self.a.antipode(), self.b.antipode());
        let id = LinearMap::identity(n);

        let aab = TensorAlgebra::new(alloc::vec![self.a.alg(), self.a.alg(), self.b.alg()]);
        let lhs = apply_kron(&[self.a.delta(), &id], u);
        let rhs = aab.mul(&aab.embed(u, &[0, 2]), &aab.embed(u, &[1, 2]));
        r.vectors_equal("(Δ_A⊗id)U = U13U23", &lhs, &rhs);
        let abb = TensorAlgebra::new(alloc::vec![self.a.alg(), self.b.alg(), self.b.alg()]);
        let lhs = apply_kron(&[&id, self.b.delta()], u);
        let rhs = abb.mul(&abb.embed(u, &[0, 1]), &abb.embed(u, &[0, 2]));
        r.vectors_equal("(id⊗Δ_B)U = U12U13", &lhs, &rhs);
        r.vectors_equal("U = (S_A⁻¹⊗S_B)U", u, &apply_kron(&[self.a.antipode_inv(), sb], u));
        r.vectors_equal("U = (S_A⊗S_B⁻¹)U", u, &apply_kron(&[sa, self.b.antipode_inv()], u));
        r.vectors_equal("U⁻¹ = (id⊗S_B)U", u_inv, &apply_kron(&[&id, sb], u));
        r.vectors_equal("U⁻¹ = (S_A⊗id)U", u_inv, &apply_kron(&[sa, &id], u));
        if let Some(us) = self.ab().star_of(u) {
            r.vectors_equal("unitarity", &us, u_inv);
        }
        let bad = (0..n).flat_map(|k| (0..n).map(move |l| (k, l))).find(|&(k, l)| {
            let v = Vector::basis(n, l).kron(&Vector::basis(n, k));
            self.eval2(u, &v) != self.matrix.entry(k, l)
        });
        match bad {
            None => r.pass("defining equation"),
            Some((k, l)) => r.fail("defining equation", format!("p²(U, b⊗a) differs from p(a, b) at {}", self.pair_label(k, l))),
        }
        r
    }

    /// `Ad(U)` on `A⊗B` as a linear map.
    pub fn ad_u(&self) -> LinearMap {
        self.ab().conjugation(self.u(), self.u_inv())
    }

    /// `T_U = (id⊗S_B⁻¹) Ad(U) (id⊗S_B)`.
    pub fn t_u(&self) -> LinearMap {
        let id = LinearMap::identity(self.dim());
        let pre = id.kron(self.b.antipode());
        let post = id.kron(self.b.antipode_inv());
        post.compose(&self.ad_u()).compose(&pre)
    }

    /// Evaluates both sides of (p1)–(p4) for every monomial triple `(a, a′, b)`.
    pub fn check_adjoint_identities(&self) -> Report {
        let mut r = Report::new(format!("adjoint identities {}|{}", self.a.name(), self.b.name()));
        let n = self.dim();
        let e = |i: usize| Vector::basis(n, i);
        let ad = self.ad_u();
        let ad_inv = self.ab().conjugation(self.u_inv(), self.u());
        let t = self.t_u();
        let id = LinearMap::identity(n);
        let t_inv = id.kron(self.b.antipode_inv()).compose(&ad_inv).compose(&id.kron(self.b.antipode()));
        let a = &self.a;
        // Σ c · f(x₁, x₂) over Δ(a′)
        let sweedler = |ap: &Vector, f: &dyn Fn(&Vector, &Vector) -> Vector| {
            let mut out = Vector::zero(n);
            for (flat, c) in a.comul(ap).iter() {
                out.add_scaled(c, &f(&e(flat / n), &e(flat % n)));
            }
            out
        };
        let mut failures: [Option<String>; 4] = [None, None, None, None];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, ap, b) = (e(i), e(j), e(k));
                    let xb = x.kron(&b);
                    let lhs = [
                        self.slice_b(&ad.apply(&xb), &ap),
                        self.slice_b(&ad_inv.apply(&xb), &ap),
                        self.slice_b(&t.apply(&xb), &ap),
                        self.slice_b(&t_inv.apply(&xb), &ap),
                    ];
                    let rhs: [[Vector; 2]; 4] = [
                        [
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(&self.b_on_a(&b, p1), &x), &a.s(p2))),
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(p1, &x), &a.s(&self.a_right_b(p2, &b)))),
                        ],
                        [
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(&a.s(p1), &x), &self.a_right_b(p2, &b))),
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(&a.s(&self.b_on_a(&b, p1)), &x), p2)),
                        ],
                        [
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(&a.s_inv(&self.a_right_b(p2, &b)), &x), p1)),
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(&a.s_inv(p2), &x), &self.b_on_a(&b, p1))),
                        ],
                        [
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(p2, &x), &a.s_inv(&self.b_on_a(&b, p1)))),
                            sweedler(&ap, &|p1, p2| a.mul(&a.mul(&self.a_right_b(p2, &b), &x), &a.s_inv(p1))),
                        ],
                    ];
                    for q in 0..4 {
                        if failures[q].is_none() && (lhs[q] != rhs[q][0] || lhs[q] != rhs[q][1]) {
                            failures[q] = Some(format!("a = {}, a′ = {}, b = {}", a.label(i), a.label(j), self.b.label(k)));
                        }
                    }
                }
            }
        }
        for (q, f) in failures.into_iter().enumerate() {
            let name = format!("p{}", q + 1);
            match f {
                None => r.pass(name),
                Some(d) => r.fail(name, d),
            }
        }
        r
    }

    /// The flip pairing `p̄(b, a) = p(a, b)` between `B` and `A`.
    pub fn flip(&self) -> Pairing {
        Pairing::new(self.b.clone(), self.a.clone(), self.matrix.transpose()).expect("same dimensions")
    }

    /// The flip co-op pairing `p̂(b, a^op) = p(a, b)` between `B^co` and `A^op`.
    pub fn flip_coop(&self) -> Pairing {
        Pairing::new(self.b.coopposite(), self.a.opposite(), self.matrix.transpose()).expect("same dimensions")
    }

    /// The flip co-opposite opposite pairing `p̃(b^op, a^op) = p(a, b)` between
    /// `(B^op)^co` and `(A^op)^co`.
    pub fn flip_coop_op(&self) -> Pairing {
        Pairing::new(self.b.opposite().coopposite(), self.a.opposite().coopposite(), self.matrix.transpose()).expect("same dimensions")
    }

    /// Builds the three derived pairings, checks their axioms, and compares
    /// their solved multipliers with `Σ(U)`.
    pub fn check_derived_pairings(&self) -> Report {
        let mut r = Report::new(format!("derived pairings {}|{}", self.a.name(), self.b.name()));
        let n = self.dim();
        let su = flip(n, n).apply(self.u());
        for (name, q) in [("flip", self.flip()), ("flip co-op", self.flip_coop()), ("flip co-op op", self.flip_coop_op())] {
            let ax = q.check_axioms();
            r.record(format!("{name} axioms"), ax.passed(), ax.first_failure().map(|c| format!("{}: {}", c.name, c.detail)).unwrap_or_default());
            match q.try_u() {
                Some(v) => r.vectors_equal(&format!("{name} multiplier is Σ(U)"), v, &su),
                None => r.fail(format!("{name} multiplier is Σ(U)"), "no multiplier"),
            }
            let m = q.check_multiplier_identities();
            r.record(format!("{name} multiplier identities"), m.passed(), m.first_failure().map(|c| format!("{}: {}", c.name, c.detail)).unwrap_or_default());
        }
        r
    }
}

/// The canonical pairing `p(δ_x, λ_y) = [x = y]` between `K(G)` and `𝕜[G]`.
pub fn canonical_group_pairing(g: &FiniteGroup) -> Pairing {
    let n = g.order();
    Pairing::new(function_hopf(g), group_hopf(g), LinearMap::identity(n)).expect("equal dimensions")
}

/// `Σ_g δ_g ⊗ λ_g`, the expected multiplier of [`canonical_group_pairing`].
pub fn group_multiplier(g: &FiniteGroup) -> Vector {
    let n = g.order();
    Vector::from_pairs(n * n, (0..n).map(|x| (x * n + x, Scalar::one())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_pairing_of_z2() {
        let g = FiniteGroup::cyclic(2);
        let p = canonical_group_pairing(&g);
        assert!(p.check_axioms().passed(), "{}", p.check_axioms());
        assert_eq!(p.u(), &group_multiplier(&g));
        let m = p.check_multiplier_identities();
        assert!(m.passed(), "{m}");
        let adj = p.check_adjoint_identities();
        assert!(adj.passed(), "{adj}");
        let d = p.check_derived_pairings();
        assert!(d.passed(), "{d}");
        assert!(p.check_regular_actions().passed());
    }

    #[test]
    fn group_pairing_of_s3() {
        let g = FiniteGroup::s3();
        let p = canonical_group_pairing(&g);
        assert!(p.check_axioms().passed(), "{}", p.check_axioms());
        assert_eq!(p.u(), &group_multiplier(&g));
        let m = p.check_multiplier_identities();
        assert!(m.passed(), "{m}");
        let adj = p.check_adjoint_identities();
        assert!(adj.passed(), "{adj}");
        let d = p.check_derived_pairings();
        assert!(d.passed(), "{d}");
    }
}
