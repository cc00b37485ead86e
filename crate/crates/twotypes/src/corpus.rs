//! Small named fixtures shared by the tests, the book and the CLI.

use crate::fingroup::{FiniteGroup, GroupAction};
use crate::simpset::SimplicialSet;
use crate::twogpd::{xmod_to_2group, TwoGroupoid};
use crate::xmod::CrossedModule;

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

/// `[Z/n →0 G₁]` with `G₁ = Z/2` acting on `Z/n` by negation.
fn negation_xmod(n: usize) -> CrossedModule {
    let act = GroupAction::from_fn(&z(2), &z(n), |x, g| if g == 0 { x } else { (n - x) % n }).unwrap();
    CrossedModule::new(z(n), z(2), vec![0; n], act).unwrap()
}

/// `[Z/4 → Z/2]`, reduction mod 2, trivial action.
pub fn z4_to_z2() -> CrossedModule {
    CrossedModule::new(z(4), z(2), vec![0, 1, 0, 1], GroupAction::trivial(&z(2), &z(4))).unwrap()
}

/// Valid crossed modules with `|G₁|, |G₂| ≤ 8`.
pub fn crossed_modules() -> Vec<(&'static str, CrossedModule)> {
    let s3 = FiniteGroup::symmetric(3);
    let a3: Vec<usize> = s3.elements().filter(|&x| s3.element_order(x) != 2).collect();
    vec![
        ("1->1", CrossedModule::from_group(&FiniteGroup::trivial())),
        ("1->Z2", CrossedModule::from_group(&z(2))),
        ("Z2->1", CrossedModule::from_abelian(&z(2)).unwrap()),
        ("1->Z3", CrossedModule::from_group(&z(3))),
        ("Z3->1", CrossedModule::from_abelian(&z(3)).unwrap()),
        ("Z2->id Z2", CrossedModule::identity_on(&z(2))),
        ("Z4->Z2", z4_to_z2()),
        ("Z2->Z4", CrossedModule::normal_inclusion(&z(4), &[0, 2]).unwrap()),
        ("Z2->0 Z3", CrossedModule::new(z(2), z(3), vec![0, 0], GroupAction::trivial(&z(3), &z(2))).unwrap()),
        ("Z3->0 Z2 neg", negation_xmod(3)),
        ("Z4->0 Z2 neg", negation_xmod(4)),
        ("V4->1", CrossedModule::from_abelian(&FiniteGroup::klein()).unwrap()),
        ("A3->S3", CrossedModule::normal_inclusion(&s3, &a3).unwrap()),
        ("S3->id S3", CrossedModule::identity_on(&s3)),
        ("1->S3", CrossedModule::from_group(&s3)),
    ]
}

/// 2-groupoids whose nerves stay small at level 4 (at most 65536 simplices).
pub fn two_groupoids() -> Vec<(&'static str, TwoGroupoid)> {
    let b = |xm: CrossedModule| xmod_to_2group(&xm);
    vec![
        ("point", TwoGroupoid::point()),
        ("interval", TwoGroupoid::interval()),
        ("codiscrete3", TwoGroupoid::codiscrete(3)),
        ("B[1->Z2]", b(CrossedModule::from_group(&z(2)))),
        ("B[Z2->1]", b(CrossedModule::from_abelian(&z(2)).unwrap())),
        ("B[1->Z3]", b(CrossedModule::from_group(&z(3)))),
        ("B[Z3->1]", b(CrossedModule::from_abelian(&z(3)).unwrap())),
        ("B[Z2->id Z2]", b(CrossedModule::identity_on(&z(2)))),
        ("B[Z4->Z2]", b(z4_to_z2())),
        ("B[Z3->0 Z2 neg]", b(negation_xmod(3))),
        (
            "B[Z2->1]+B[1->Z2]",
            b(CrossedModule::from_abelian(&z(2)).unwrap()).disjoint_union(&b(CrossedModule::from_group(&z(2)))),
        ),
        ("interval x B[Z2->1]", TwoGroupoid::interval().product(&b(CrossedModule::from_abelian(&z(2)).unwrap()))),
    ]
}

/// Kan and 3-coskeletal but not 2-minimal: one vertex, two 2-simplices with
/// degenerate boundary, coskeletal above level 2.
pub fn non_minimal_sset() -> SimplicialSet {
    let base = SimplicialSet::new(vec![1, 1, 2], vec![vec![], vec![0, 0], vec![0; 6]], vec![vec![0], vec![0, 0]], None)
        .unwrap();
    base.coskeleton(2, 4).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::nerve;

    #[test]
    fn sizes_within_bounds() {
        for (name, xm) in crossed_modules() {
            let (a, b) = xm.order_pair();
            assert!(a <= 8 && b <= 8, "{name}");
        }
        for (name, g) in two_groupoids() {
            assert!(nerve(&g).sset.size(4) <= 65536, "{name}");
        }
    }
}
