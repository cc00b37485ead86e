//! Low-degree group cohomology by enumeration, and the crossed module
//! `[δ: C¹(Γ, A) → Z²(Γ, A)]` whose homotopy groups are `Z¹` and `H²`.
//!
//! `A` is written additively. A right action `a^g` of `Γ` on `A` is turned
//! into the left module structure `g·a = a^{g⁻¹}`. Cochains are all set maps
//! (not normalized); a 2-cochain is stored as `c[g·|Γ| + h]`.

use std::collections::HashMap;

use crate::error::{Budget, Error, Result};
use crate::fingroup::{FiniteGroup, GroupAction};
use crate::search::backtrack;
use crate::weakmaps::xmod_homotopy_classes;
use crate::xmod::CrossedModule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    pub gamma: FiniteGroup,
    pub a: FiniteGroup,
    action: GroupAction,
}

/// An abelian group of cochains with the position of each cochain.
#[derive(Clone, Debug)]
pub struct CochainGroup {
    pub group: FiniteGroup,
    pub cochains: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
}

impl CochainSpace {
    /// `action` is a right action of `gamma` on `a`; `None` means trivial.
    pub fn new(gamma: &FiniteGroup, a: &FiniteGroup, action: Option<&GroupAction>) -> Result<Self> {
        if !a.is_abelian() {
            return Err(Error::ANotAbelian);
        }
        let action = match action {
            Some(act) if act.actor == *gamma && act.space == *a => act.clone(),
            Some(_) => return Err(Error::Malformed("action is not of Γ on A".into())),
            None => GroupAction::trivial(gamma, a),
        };
        Ok(CochainSpace { gamma: gamma.clone(), a: a.clone(), action })
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.is_trivial()
    }

    /// `g·x`.
    pub fn left_act(&self, g: usize, x: usize) -> usize {
        self.action.act(x, self.gamma.inv(g))
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.a.mul(x, y)
    }
    fn sub(&self, x: usize, y: usize) -> usize {
        self.a.mul(x, self.a.inv(y))
    }

    /// `(δa)(g) = g·a − a`.
    pub fn coboundary0(&self, x: usize) -> Vec<usize> {
        self.gamma.elements().map(|g| self.sub(self.left_act(g, x), x)).collect()
    }

    /// `(δc)(g, h) = g·c(h) − c(gh) + c(g)`.
    pub fn coboundary1(&self, c: &[usize]) -> Vec<usize> {
        let gm = &self.gamma;
        let mut out = Vec::with_capacity(gm.order() * gm.order());
        for g in gm.elements() {
            for h in gm.elements() {
                out.push(self.add(self.sub(self.left_act(g, c[h]), c[gm.mul(g, h)]), c[g]));
            }
        }
        out
    }

    /// `(δc)(g, h, k) = g·c(h, k) − c(gh, k) + c(g, hk) − c(g, h)`.
    fn cocycle_defect(&self, c: &[usize], g: usize, h: usize, k: usize) -> usize {
        let (gm, n) = (&self.gamma, self.gamma.order());
        let t = self.sub(self.left_act(g, c[h * n + k]), c[gm.mul(g, h) * n + k]);
        self.sub(self.add(t, c[g * n + gm.mul(h, k)]), c[g * n + h])
    }

    pub fn is_1cocycle(&self, c: &[usize]) -> bool {
        self.coboundary1(c).iter().all(|&v| v == self.a.identity())
    }

    pub fn is_2cocycle(&self, c: &[usize]) -> bool {
        let g = &self.gamma;
        g.elements()
            .all(|x| g.elements().all(|y| g.elements().all(|z| self.cocycle_defect(c, x, y, z) == self.a.identity())))
    }

    /// All maps `Γ → A`, in lexicographic order of value tables.
    pub fn cochains1(&self) -> Vec<Vec<usize>> {
        let (n, m) = (self.gamma.order(), self.a.order());
        (0..m.pow(n as u32))
            .map(|mut k| {
                let mut c = vec![0; n];
                for v in c.iter_mut().rev() {
                    *v = k % m;
                    k /= m;
                }
                c
            })
            .collect()
    }

    pub fn z1(&self) -> Vec<Vec<usize>> {
        self.cochains1().into_iter().filter(|c| self.is_1cocycle(c)).collect()
    }

    pub fn b1(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.a.elements().map(|x| self.coboundary0(x)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// All 2-cocycles, found by backtracking over the values `c(g, h)` and
    /// testing each cocycle identity as soon as its four values are known.
    pub fn z2(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.gamma.order();
        let gm = &self.gamma;
        let mut by_last: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n * n];
        for g in gm.elements() {
            for h in gm.elements() {
                for k in gm.elements() {
                    let last =
                        [h * n + k, gm.mul(g, h) * n + k, g * n + gm.mul(h, k), g * n + h].into_iter().max().unwrap();
                    by_last[last].push((g, h, k));
                }
            }
        }
        let mut out = Vec::new();
        let e = self.a.identity();
        backtrack(
            n * n,
            &mut Budget::new(cap),
            &mut |_, _| self.a.elements().collect(),
            &mut |v, c| by_last[v].iter().all(|&(g, h, k)| self.cocycle_defect(c, g, h, k) == e),
            &mut |c| {
                out.push(c.to_vec());
                Ok(true)
            },
        )?;
        Ok(out)
    }

    pub fn b2(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.cochains1().iter().map(|c| self.coboundary1(c)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// The group on a list of cochains closed under pointwise addition.
    pub fn group_of(&self, mut cochains: Vec<Vec<usize>>) -> CochainGroup {
        cochains.sort();
        let index: HashMap<Vec<usize>, usize> = cochains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let group = FiniteGroup::from_fn_unchecked(cochains.len(), |x, y| {
            let s: Vec<usize> = cochains[x].iter().zip(&cochains[y]).map(|(&p, &q)| self.add(p, q)).collect();
            index[&s]
        });
        CochainGroup { group, cochains, index }
    }

    pub fn h1(&self) -> FiniteGroup {
        let z = self.group_of(self.z1());
        let b: Vec<usize> = self.b1().iter().map(|c| z.index[c]).collect();
        quotient_sorted(&z.group, b)
    }

    pub fn h2(&self, cap: usize) -> Result<FiniteGroup> {
        let z = self.group_of(self.z2(cap)?);
        let b: Vec<usize> = self.b2().iter().map(|c| z.index[c]).collect();
        Ok(quotient_sorted(&z.group, b))
    }
}

fn quotient_sorted(g: &FiniteGroup, mut normal: Vec<usize>) -> FiniteGroup {
    normal.sort_unstable();
    g.quotient(&normal).0
}

pub fn h1(gamma: &FiniteGroup, a: &FiniteGroup, action: Option<&GroupAction>) -> Result<FiniteGroup> {
    Ok(CochainSpace::new(gamma, a, action)?.h1())
}

pub fn h2(gamma: &FiniteGroup, a: &FiniteGroup, action: Option<&GroupAction>, cap: usize) -> Result<FiniteGroup> {
    CochainSpace::new(gamma, a, action)?.h2(cap)
}

/// `[δ: C¹ → Z²]` with trivial action of `Z²` on `C¹`. Then `π₁ = H²` and
/// `π₂ = Z¹`, which is `H¹` for a trivial action. A nontrivial action is
/// refused unless `allow_nontrivial` is set.
pub fn extension_xmod(
    gamma: &FiniteGroup,
    a: &FiniteGroup,
    action: Option<&GroupAction>,
    allow_nontrivial: bool,
    cap: usize,
) -> Result<CrossedModule> {
    let cs = CochainSpace::new(gamma, a, action)?;
    if !allow_nontrivial && !cs.is_trivial_action() {
        return Err(Error::Malformed("extension crossed module with a nontrivial action needs the opt-in flag".into()));
    }
    let c1 = cs.group_of(cs.cochains1());
    let z2 = cs.group_of(cs.z2(cap)?);
    let phi = c1.cochains.iter().map(|c| z2.index[&cs.coboundary1(c)]).collect();
    let action = GroupAction::trivial(&z2.group, &c1.group);
    CrossedModule::new(c1.group, z2.group, phi, action)
}

/// Pointed homotopy classes of weak maps `[1→Z/n] → [Z/m→1]` and the order of
/// `H²(Z/n, Z/m)`.
pub fn weakmap_class_count_vs_h2(n: usize, m: usize, cap: usize) -> Result<(usize, usize)> {
    let h = CrossedModule::from_group(&FiniteGroup::cyclic(n));
    let g = CrossedModule::from_abelian(&FiniteGroup::cyclic(m))?;
    let (_, labels) = xmod_homotopy_classes(&h, &g, true);
    let classes = labels.iter().max().map_or(0, |k| k + 1);
    Ok((classes, h2(&FiniteGroup::cyclic(n), &FiniteGroup::cyclic(m), None, cap)?.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{homomorphisms, is_isomorphic};
    use crate::weakmaps::enumerate_xmod_weak_maps;

    const CAP: usize = 10_000_000;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(h2(&z(2), &z(2), None, CAP).unwrap().order(), 2);
        assert_eq!(h1(&z(2), &z(2), None).unwrap().order(), 2);
        assert_eq!(h2(&z(3), &z(3), None, CAP).unwrap().order(), 3);
        assert_eq!(h2(&z(3), &z(2), None, CAP).unwrap().order(), 1);
        assert_eq!(h2(&FiniteGroup::trivial(), &z(4), None, CAP).unwrap().order(), 1);
    }

    #[test]
    fn cyclic_h2_is_gcd() {
        for n in 1..=4 {
            for m in 1..=4 {
                assert_eq!(h2(&z(n), &z(m), None, CAP).unwrap().order(), gcd(n, m), "({n},{m})");
            }
        }
    }

    #[test]
    fn boundaries_are_cocycles() {
        let cs = CochainSpace::new(&z(4), &z(2), None).unwrap();
        let z2 = cs.z2(CAP).unwrap();
        assert!(cs.b2().iter().all(|b| z2.contains(b)));
        assert!(z2.iter().all(|c| cs.is_2cocycle(c)));
    }

    #[test]
    fn h1_is_hom_for_trivial_action() {
        for (g, a) in [(z(2), z(2)), (z(4), z(2)), (FiniteGroup::klein(), z(2)), (z(3), z(4))] {
            let cs = CochainSpace::new(&g, &a, None).unwrap();
            let mut z1 = cs.z1();
            z1.sort();
            let mut homs = homomorphisms(&g, &a);
            homs.sort();
            assert_eq!(z1, homs);
            assert_eq!(cs.b1().len(), 1);
        }
    }

    #[test]
    fn nonabelian_coefficients_rejected() {
        assert_eq!(CochainSpace::new(&z(2), &FiniteGroup::symmetric(3), None), Err(Error::ANotAbelian));
    }

    #[test]
    fn sign_action_on_z3() {
        // Z/2 acting on Z/3 by negation: H¹ = H² = 0
        let act = GroupAction::from_fn(&z(2), &z(3), |x, g| if g == 0 { x } else { (3 - x) % 3 }).unwrap();
        let cs = CochainSpace::new(&z(2), &z(3), Some(&act)).unwrap();
        assert_eq!(cs.h1().order(), 1);
        assert_eq!(cs.h2(CAP).unwrap().order(), 1);
        assert_eq!(cs.z1().len(), 3);
        assert!(extension_xmod(&z(2), &z(3), Some(&act), false, CAP).is_err());
        let xm = extension_xmod(&z(2), &z(3), Some(&act), true, CAP).unwrap();
        assert_eq!(xm.pi1().order(), 1);
        assert_eq!(xm.pi2().order(), 3);
    }

    #[test]
    fn extension_invariants() {
        let xm = extension_xmod(&z(2), &z(2), None, false, CAP).unwrap();
        assert_eq!(xm.g2.order(), 4);
        assert!(is_isomorphic(&xm.pi1(), &z(2)));
        assert!(is_isomorphic(&xm.pi2(), &z(2)));
        let xm = extension_xmod(&FiniteGroup::trivial(), &z(3), None, false, CAP).unwrap();
        assert_eq!((xm.pi1().order(), xm.pi2().order()), (1, 1));
    }

    #[test]
    fn weak_map_cocycles_are_normalized_cocycles() {
        let h = CrossedModule::from_group(&z(3));
        let g = CrossedModule::from_abelian(&z(3)).unwrap();
        let cs = CochainSpace::new(&z(3), &z(3), None).unwrap();
        let maps = enumerate_xmod_weak_maps(&h, &g, true);
        let normalized: Vec<_> = cs
            .z2(CAP)
            .unwrap()
            .into_iter()
            .filter(|c| c[0..3].iter().all(|&v| v == 0) && c.iter().step_by(3).all(|&v| v == 0))
            .collect();
        assert_eq!(maps.len(), normalized.len());
        for m in maps {
            assert!(cs.is_2cocycle(&m.eps));
        }
    }

    #[test]
    fn class_count_bridge() {
        for (n, m) in [(2, 2), (3, 3), (1, 3), (2, 4)] {
            let (c, h) = weakmap_class_count_vs_h2(n, m, CAP).unwrap();
            assert_eq!(c, h, "({n},{m})");
        }
    }
}
