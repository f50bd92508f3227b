//! Finite groups, finite group actions, and the Hopf *-algebras `K(G)` and `𝕜[G]`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, Star};
use crate::hopf::Hopf;
use crate::linear::{LinearMap, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

/// Rejection of a multiplication table or permutation family, naming the
/// first violated law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelError {
    /// Name of the failed check.
    pub check: String,
    /// Counterexample.
    pub detail: String,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

impl ModelError {
    fn from_report(r: &Report) -> Option<Self> {
        r.first_failure().map(|c| ModelError { check: c.name.clone(), detail: c.detail.clone() })
    }
}

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks that `table` (row `i`, column `j` holding the index of `gᵢgⱼ`) is a
    /// group law with identity element 0. Checks run in the order closure,
    /// identity, inverses, associativity.
    pub fn validate(name: &str, n: usize, table: &[usize]) -> Report {
        let mut r = Report::new(name);
        if n == 0 || table.len() != n * n || table.iter().any(|&x| x >= n) {
            r.fail("closure", format!("table of {} entries does not map into the {n} elements", table.len()));
            return r;
        }
        r.pass("closure");
        let t = |i: usize, j: usize| table[i * n + j];
        match (0..n).find(|&i| t(0, i) != i || t(i, 0) != i) {
            None => r.pass("identity"),
            Some(i) => {
                r.fail("identity", format!("the first element is not a two-sided identity for element {i}"));
                return r;
            }
        }
        match (0..n).find(|&i| !(0..n).any(|j| t(i, j) == 0 && t(j, i) == 0)) {
            None => r.pass("inverses"),
            Some(i) => r.fail("inverses", format!("element {i} has no two-sided inverse")),
        }
        let mut bad = None;
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        bad = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        match bad {
            None => r.pass("associativity"),
            Some((a, b, c)) => r.fail("associativity", format!("(g{a} g{b}) g{c} differs from g{a} (g{b} g{c})")),
        }
        r
    }

    /// Builds a group from labels and a Cayley table of element indices.
    pub fn from_table(name: impl Into<String>, labels: Vec<String>, table: Vec<usize>) -> Result<Self, ModelError> {
        let name = name.into();
        let n = labels.len();
        let mut r = FiniteGroup::validate(&name, n, &table);
        // translate index names into labels for the diagnostic
        for c in &mut r.checks {
            for (i, l) in labels.iter().enumerate().rev() {
                c.detail = c.detail.replace(&format!("g{i}"), l).replace(&format!("element {i}"), &format!("element {l}"));
            }
        }
        if let Some(e) = ModelError::from_report(&r) {
            return Err(e);
        }
        let inverse = (0..n).map(|i| (0..n).find(|&j| table[i * n + j] == 0).expect("validated")).collect();
        Ok(FiniteGroup { name, labels, table, inverse })
    }

    /// The group generated by closing a list of permutations of `{0..m-1}`
    /// that already forms a group, with `(gh)(i) = g(h(i))`.
    pub fn from_permutations(name: impl Into<String>, labels: Vec<String>, perms: &[Vec<usize>]) -> Result<Self, ModelError> {
        let n = perms.len();
        let mut table = Vec::with_capacity(n * n);
        for g in perms {
            for h in perms {
                let gh: Vec<usize> = h.iter().map(|&i| g[i]).collect();
                match perms.iter().position(|p| *p == gh) {
                    Some(k) => table.push(k),
                    None => return Err(ModelError { check: "closure".into(), detail: "permutations are not closed under composition".into() }),
                }
            }
        }
        FiniteGroup::from_table(name, labels, table)
    }

    /// The cyclic group `ℤ/n` with elements `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n * n).map(|f| (f / n + f % n) % n).collect();
        FiniteGroup::from_table(format!("z{n}"), labels, table).expect("cyclic group table")
    }

    /// The direct product `G × H`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n, m) = (g.order(), h.order());
        let mut labels = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                labels.push(format!("({},{})", g.label(a), h.label(b)));
            }
        }
        let mut table = Vec::with_capacity(n * n * m * m);
        for x in 0..n * m {
            for y in 0..n * m {
                table.push(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
            }
        }
        FiniteGroup::from_table(format!("{}x{}", g.name, h.name), labels, table).expect("product of groups")
    }

    /// The Klein four-group `ℤ/2 × ℤ/2`.
    pub fn klein4() -> Self {
        let z2 = FiniteGroup::cyclic(2);
        let mut g = FiniteGroup::product(&z2, &z2);
        g.name = "klein4".into();
        g
    }

    /// The symmetric group `S₃` as permutations of `{0,1,2}`: `r` is the
    /// rotation `i ↦ i+1`, `s` fixes 0 and swaps 1 and 2.
    pub fn s3() -> Self {
        let r = [1, 2, 0];
        let s = [0, 2, 1];
        let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&i| g[i]).collect() };
        let e = vec![0, 1, 2];
        let r2 = compose(&r, &r);
        let perms = vec![e, r.to_vec(), r2.clone(), s.to_vec(), compose(&s, &r), compose(&s, &r2)];
        let labels = ["e", "r", "r2", "s", "sr", "sr2"].iter().map(|s| s.to_string()).collect();
        FiniteGroup::from_permutations("s3", labels, &perms).expect("S3 permutations")
    }

    /// The dihedral group of order 8 as symmetries of a square with vertices `0..3`.
    pub fn d4() -> Self {
        let compose = |g: &[usize], h: &[usize]| -> Vec<usize> { h.iter().map(|&i| g[i]).collect() };
        let r = vec![1, 2, 3, 0];
        let s = vec![0, 3, 2, 1];
        let mut rot = vec![vec![0, 1, 2, 3]];
        for k in 1..4 {
            let next = compose(&r, &rot[k - 1]);
            rot.push(next);
        }
        let mut perms = rot.clone();
        for p in &rot {
            perms.push(compose(&s, p));
        }
        let labels = ["e", "r", "r2", "r3", "s", "sr", "sr2", "sr3"].iter().map(|s| s.to_string()).collect();
        FiniteGroup::from_permutations("d4", labels, &perms).expect("D4 permutations")
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup::from_table("trivial", vec!["e".into()], vec![0]).expect("trivial group")
    }

    /// Name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Element labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Label of element `g`.
    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// Index of `gh`.
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.order() + h]
    }

    /// Index of `g⁻¹`.
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Index of the identity.
    pub fn identity(&self) -> usize {
        0
    }

    /// True when the group is abelian.
    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (0..n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Index of the element with the given label.
    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A left action of a finite group on `{0..m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    size: usize,
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Checks that `perms[g]` are permutations with `perm(e) = id` and
    /// `perm(gh) = perm(g)∘perm(h)`, in that order.
    pub fn validate(group: &FiniteGroup, size: usize, perms: &[Vec<usize>]) -> Report {
        let mut r = Report::new(format!("{}-action", group.name()));
        let bad = (0..group.order()).find(|&g| {
            let p = perms.get(g);
            match p {
                None => true,
                Some(p) => {
                    let mut seen = vec![false; size];
                    p.len() != size || p.iter().any(|&i| i >= size || core::mem::replace(&mut seen[i], true))
                }
            }
        });
        match bad {
            None if perms.len() == group.order() => r.pass("permutations"),
            None => {
                r.fail("permutations", format!("{} images given for {} group elements", perms.len(), group.order()));
                return r;
            }
            Some(g) => {
                r.fail("permutations", format!("the images for {} are not a permutation of 0..{}", group.label(g), size));
                return r;
            }
        }
        let id: Vec<usize> = (0..size).collect();
        r.record("identity acts trivially", perms[0] == id, format!("{} moves a point", group.label(0)));
        let mut bad = None;
        'outer: for g in 0..group.order() {
            for h in 0..group.order() {
                for x in 0..size {
                    if perms[group.mul(g, h)][x] != perms[g][perms[h][x]] {
                        bad = Some((g, h, x));
                        break 'outer;
                    }
                }
            }
        }
        match bad {
            None => r.pass("composition law"),
            Some((g, h, x)) => r.fail(
                "composition law",
                format!(
                    "({} {})·{} = {} but {}·({}·{}) = {}",
                    group.label(g),
                    group.label(h),
                    x,
                    perms[group.mul(g, h)][x],
                    group.label(g),
                    group.label(h),
                    x,
                    perms[g][perms[h][x]]
                ),
            ),
        }
        r
    }

    /// Builds a validated action.
    pub fn new(group: FiniteGroup, size: usize, perms: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let r = GroupAction::validate(&group, size, &perms);
        match ModelError::from_report(&r) {
            Some(e) => Err(e),
            None => Ok(GroupAction { group, size, perms }),
        }
    }

    /// Left translation of `G` on itself.
    pub fn left_translation(group: &FiniteGroup) -> Self {
        let n = group.order();
        let perms = (0..n).map(|g| (0..n).map(|h| group.mul(g, h)).collect()).collect();
        GroupAction::new(group.clone(), n, perms).expect("translation is an action")
    }

    /// The trivial action on `size` points.
    pub fn trivial(group: &FiniteGroup, size: usize) -> Self {
        let perms = vec![(0..size).collect(); group.order()];
        GroupAction::new(group.clone(), size, perms).expect("trivial action")
    }

    /// The acting group.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Number of points.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `g·s`.
    pub fn act(&self, g: usize, s: usize) -> usize {
        self.perms[g][s]
    }
}

/// The function algebra `K(G)` with `δ_xδ_y = [x=y]δ_x`, `Δ(δ_x) = Σ_{uv=x} δ_u⊗δ_v`,
/// `ε(δ_x) = [x=e]`, `S(δ_x) = δ_{x⁻¹}` and `δ_x* = δ_x`.
pub fn function_hopf(g: &FiniteGroup) -> Hopf {
    let n = g.order();
    let labels = (0..n).map(|x| format!("δ_{}", g.label(x))).collect();
    let unit = Vector::from_pairs(n, (0..n).map(|x| (x, Scalar::one())));
    let alg = Algebra::from_fn(labels, |x, y| if x == y { Vector::basis(n, x) } else { Vector::zero(n) }, unit)
        .with_star(Star::new((0..n).map(|x| Vector::basis(n, x)).collect()));
    let delta = LinearMap::from_fn(n, n * n, |x| {
        Vector::from_pairs(n * n, (0..n).map(|u| (u * n + g.mul(g.inv(u), x), Scalar::one())))
    });
    let counit = LinearMap::functional(&(0..n).map(|x| Scalar::from_int((x == 0) as i64)).collect::<Vec<_>>());
    let antipode = LinearMap::from_fn(n, n, |x| Vector::basis(n, g.inv(x)));
    Hopf::new(format!("K({})", g.name()), alg, delta, counit, antipode)
}

/// The group algebra `𝕜[G]` with `λ_gλ_h = λ_{gh}`, `Δ(λ_g) = λ_g⊗λ_g`,
/// `ε(λ_g) = 1`, `S(λ_g) = λ_{g⁻¹}` and `λ_g* = λ_{g⁻¹}`.
pub fn group_hopf(g: &FiniteGroup) -> Hopf {
    let n = g.order();
    let labels = (0..n).map(|x| format!("λ_{}", g.label(x))).collect();
    let alg = Algebra::from_fn(labels, |x, y| Vector::basis(n, g.mul(x, y)), Vector::basis(n, 0))
        .with_star(Star::new((0..n).map(|x| Vector::basis(n, g.inv(x))).collect()));
    let delta = LinearMap::from_fn(n, n * n, |x| Vector::basis(n * n, x * n + x));
    let counit = LinearMap::functional(&vec![Scalar::one(); n]);
    let antipode = LinearMap::from_fn(n, n, |x| Vector::basis(n, g.inv(x)));
    Hopf::new(format!("C[{}]", g.name()), alg, delta, counit, antipode)
}

/// The function algebra `K(S)` of a finite set, a commutative *-algebra with
/// minimal projections `δ_s`.
pub fn set_functions(size: usize) -> Algebra {
    let labels = (0..size).map(|s| format!("δ{s}")).collect();
    let unit = Vector::from_pairs(size, (0..size).map(|s| (s, Scalar::one())));
    Algebra::from_fn(labels, |x, y| if x == y { Vector::basis(size, x) } else { Vector::zero(size) }, unit)
        .with_star(Star::new((0..size).map(|s| Vector::basis(size, s)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_groups_validate() {
        for (g, n, abelian) in [
            (FiniteGroup::cyclic(4), 4, true),
            (FiniteGroup::klein4(), 4, true),
            (FiniteGroup::s3(), 6, false),
            (FiniteGroup::d4(), 8, false),
            (FiniteGroup::trivial(), 1, true),
        ] {
            assert_eq!(g.order(), n);
            assert_eq!(g.is_abelian(), abelian);
        }
    }

    #[test]
    fn s3_conventions() {
        let g = FiniteGroup::s3();
        let (r, s) = (g.position("r").unwrap(), g.position("s").unwrap());
        assert_eq!(g.label(g.mul(s, r)), "sr");
        assert_eq!(g.label(g.mul(r, s)), "sr2");
        assert_eq!(g.label(g.inv(r)), "r2");
    }

    #[test]
    fn broken_action_fails_composition_law() {
        let z3 = FiniteGroup::cyclic(3);
        let perms = vec![vec![0, 1, 2], vec![0, 2, 1], vec![2, 0, 1]];
        let err = GroupAction::new(z3, 3, perms).unwrap_err();
        assert_eq!(err.check, "composition law");
    }

    #[test]
    fn hopf_algebras_of_small_groups_pass() {
        for g in [FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::s3()] {
            for h in [function_hopf(&g), group_hopf(&g)] {
                let r = h.check_axioms();
                assert!(r.passed(), "{r}");
            }
        }
    }
}
