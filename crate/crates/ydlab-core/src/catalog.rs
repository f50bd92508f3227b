//! Built-in groups and transformation groups, addressed by short names.

use alloc::vec;
use alloc::vec::Vec;

use crate::groups::{FiniteGroup, GroupAction};

/// A finite group, optionally acting on a finite set.
#[derive(Clone, Debug)]
pub struct Model {
    /// The group.
    pub group: FiniteGroup,
    /// An action of the group, when the model has one.
    pub action: Option<GroupAction>,
}

/// Names accepted by [`lookup`], in catalog order.
pub const NAMES: [&str; 10] =
    ["trivial", "z2", "z3", "z4", "klein4", "s3", "d4", "z2-on-2points", "z3-on-z3", "s3-on-3points"];

/// The groups used for exhaustive sweeps: `ℤ/2, ℤ/3, ℤ/4, ℤ/2×ℤ/2, S₃`.
pub fn sweep_groups() -> Vec<FiniteGroup> {
    vec![FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::klein4(), FiniteGroup::s3()]
}

/// `ℤ/2` swapping two points.
pub fn z2_on_two_points() -> GroupAction {
    GroupAction::new(FiniteGroup::cyclic(2), 2, vec![vec![0, 1], vec![1, 0]]).expect("swap action")
}

/// `ℤ/3` acting on itself by translation.
pub fn z3_on_itself() -> GroupAction {
    GroupAction::left_translation(&FiniteGroup::cyclic(3))
}

/// `S₃` permuting `{0, 1, 2}`, with element labels read as words in `s` and `r`.
pub fn s3_on_three_points() -> GroupAction {
    let g = FiniteGroup::s3();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&i| p[i]).collect() };
    let (r, s) = ([1, 2, 0], [0, 2, 1]);
    let perms = g
        .labels()
        .iter()
        .map(|label| {
            let mut perm = vec![0, 1, 2];
            let rest = match label.strip_prefix('s') {
                Some(t) => {
                    perm = compose(&perm, &s);
                    t
                }
                None => label.as_str(),
            };
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
    GroupAction::new(g, 3, perms).expect("S3 on three points")
}

/// The model with the given catalog name.
pub fn lookup(name: &str) -> Option<Model> {
    let bare = |group| Some(Model { group, action: None });
    let acting = |action: GroupAction| Some(Model { group: action.group().clone(), action: Some(action) });
    match name {
        "trivial" => bare(FiniteGroup::trivial()),
        "z2" => bare(FiniteGroup::cyclic(2)),
        "z3" => bare(FiniteGroup::cyclic(3)),
        "z4" => bare(FiniteGroup::cyclic(4)),
        "klein4" => bare(FiniteGroup::klein4()),
        "s3" => bare(FiniteGroup::s3()),
        "d4" => bare(FiniteGroup::d4()),
        "z2-on-2points" => acting(z2_on_two_points()),
        "z3-on-z3" => acting(z3_on_itself()),
        "s3-on-3points" => acting(s3_on_three_points()),
        _ => None,
    }
}
