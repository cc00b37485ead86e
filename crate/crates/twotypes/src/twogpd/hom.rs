//! Hom-2-groupoids: functors, transformations and modifications between two
//! strict 2-groupoids, materialized by enumeration.

use std::collections::HashMap;

use super::{TwoCategory, TwoCellData, TwoFunctor, TwoGroupoid};
use crate::error::{Budget, Error, Result};
use crate::search::backtrack;
use crate::weakmaps::{enumerate_weak_functors, WeakFunctor};

/// A transformation `P ⇒ Q`: `t[A]: P(A) → Q(A)` and, for each 1-cell
/// `c: A → B`, a 2-cell `theta[c]: P(c)t_B ⇒ t_A Q(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    pub t: Vec<usize>,
    pub theta: Vec<usize>,
}

impl Transformation {
    pub fn identity(cod: &TwoGroupoid, p: &WeakFunctor) -> Self {
        Transformation {
            t: p.obj.iter().map(|&x| cod.id1(x)).collect(),
            theta: p.one.iter().map(|&f| cod.id2(f)).collect(),
        }
    }

    /// Diagrammatic composite: `self: P ⇒ Q` followed by `other: Q ⇒ R`.
    pub fn then(&self, dom: &TwoGroupoid, cod: &TwoGroupoid, other: &Transformation) -> Transformation {
        let t: Vec<usize> = self.t.iter().zip(&other.t).map(|(&a, &b)| cod.comp(a, b)).collect();
        let theta = (0..dom.n1())
            .map(|c| {
                let (a, b) = (dom.src1(c), dom.tgt1(c));
                cod.vcomp(cod.whisker_r(self.theta[c], other.t[b]), cod.whisker_l(self.t[a], other.theta[c]))
            })
            .collect();
        Transformation { t, theta }
    }
}

/// Whether `(t, θ)` is a transformation `P ⇒ Q`.
pub fn check_transformation(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    p: &WeakFunctor,
    q: &WeakFunctor,
    tr: &Transformation,
) -> Result<()> {
    let viol = Error::violation;
    if tr.t.len() != dom.n0() || tr.theta.len() != dom.n1() {
        return Err(Error::Malformed("transformation tables have the wrong length".into()));
    }
    for x in 0..dom.n0() {
        let t = tr.t[x];
        if t >= cod.n1() || cod.src1(t) != p.obj[x] || cod.tgt1(t) != q.obj[x] {
            return Err(viol("component source/target", vec![x]));
        }
    }
    for c in 0..dom.n1() {
        let (a, b) = (dom.src1(c), dom.tgt1(c));
        let th = tr.theta[c];
        if th >= cod.n2() || cod.src2(th) != cod.comp(p.one[c], tr.t[b]) || cod.tgt2(th) != cod.comp(tr.t[a], q.one[c])
        {
            return Err(viol("2-cell component source/target", vec![c]));
        }
        if dom.is_id1(c) && th != cod.id2(cod.src2(th)) {
            return Err(viol("identity 1-cells get identity 2-cells", vec![c]));
        }
    }
    let ctx = TransCtx { dom, cod, p, q };
    for g in 0..dom.n2() {
        if !ctx.natural(g, &tr.t, &tr.theta) {
            return Err(viol("naturality", vec![g]));
        }
    }
    for (&(c, d), &e) in &dom.data().comp1 {
        if !ctx.coherent(c, d, e, &tr.t, &tr.theta) {
            return Err(viol("composition", vec![c, d]));
        }
    }
    Ok(())
}

struct TransCtx<'a> {
    dom: &'a TwoGroupoid,
    cod: &'a TwoGroupoid,
    p: &'a WeakFunctor,
    q: &'a WeakFunctor,
}

impl TransCtx<'_> {
    /// `[P(γ)t_B][θ_{c'}] = [θ_c][t_A Q(γ)]` for `γ: c ⇒ c'`.
    fn natural(&self, g: usize, t: &[usize], theta: &[usize]) -> bool {
        let (dom, cod) = (self.dom, self.cod);
        let (c0, c1) = (dom.src2(g), dom.tgt2(g));
        let (a, b) = (dom.src1(c0), dom.tgt1(c0));
        cod.vcomp(cod.whisker_r(self.p.two[g], t[b]), theta[c1])
            == cod.vcomp(theta[c0], cod.whisker_l(t[a], self.q.two[g]))
    }

    /// `[ε^P_{c,d} t][θ_{cd}] = [P(c)θ_d][θ_c Q(d)][t ε^Q_{c,d}]`.
    fn coherent(&self, c: usize, d: usize, e: usize, t: &[usize], theta: &[usize]) -> bool {
        let (dom, cod) = (self.dom, self.cod);
        let (a, z) = (dom.src1(c), dom.tgt1(d));
        let lhs = cod.vcomp(cod.whisker_r(self.p.eps(c, d), t[z]), theta[e]);
        let rhs = cod.vcomp(
            cod.vcomp(cod.whisker_l(self.p.one[c], theta[d]), cod.whisker_r(theta[c], self.q.one[d])),
            cod.whisker_l(t[a], self.q.eps(c, d)),
        );
        lhs == rhs
    }
}

/// All transformations `P ⇒ Q`. With `strict`, every `θ_c` is an identity;
/// with `pointed`, the component at the domain basepoint is an identity.
pub fn enumerate_transformations(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    p: &WeakFunctor,
    q: &WeakFunctor,
    strict: bool,
    pointed: bool,
    budget: &mut Budget,
) -> Result<Vec<Transformation>> {
    transformations_upto(dom, cod, p, q, strict, pointed, None, budget)
}

/// Like [`enumerate_transformations`], stopping after `limit` results.
#[allow(clippy::too_many_arguments)]
pub(crate) fn transformations_upto(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    p: &WeakFunctor,
    q: &WeakFunctor,
    strict: bool,
    pointed: bool,
    limit: Option<usize>,
    budget: &mut Budget,
) -> Result<Vec<Transformation>> {
    let (n0, n1) = (dom.n0(), dom.n1());
    let base = if pointed { dom.basepoint() } else { None };
    // constraints indexed by their last variable (a 1-cell of dom)
    let mut nat: Vec<Vec<usize>> = vec![Vec::new(); n1];
    for g in 0..dom.n2() {
        nat[dom.src2(g).max(dom.tgt2(g))].push(g);
    }
    let mut coh: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n1];
    for (&(c, d), &e) in &dom.data().comp1 {
        coh[c.max(d).max(e)].push((c, d, e));
    }
    for v in &mut coh {
        v.sort_unstable();
    }
    let ctx = TransCtx { dom, cod, p, q };
    let mut out = Vec::new();
    backtrack(
        n0 + n1,
        budget,
        &mut |v, a| {
            if v < n0 {
                if base == Some(v) {
                    let e = cod.id1(p.obj[v]);
                    return if p.obj[v] == q.obj[v] { vec![e] } else { vec![] };
                }
                return cod.hom1(p.obj[v], q.obj[v]).to_vec();
            }
            let c = v - n0;
            let s = cod.comp(p.one[c], a[dom.tgt1(c)]);
            let t = cod.comp(a[dom.src1(c)], q.one[c]);
            if strict || dom.is_id1(c) {
                return if s == t { vec![cod.id2(s)] } else { vec![] };
            }
            cod.hom2(s, t).to_vec()
        },
        &mut |v, a| {
            if v < n0 {
                return true;
            }
            let c = v - n0;
            let (t, theta) = a.split_at(n0);
            nat[c].iter().all(|&g| ctx.natural(g, t, theta))
                && coh[c].iter().all(|&(c, d, e)| ctx.coherent(c, d, e, t, theta))
        },
        &mut |a| {
            out.push(Transformation { t: a[..n0].to_vec(), theta: a[n0..].to_vec() });
            Ok(limit.is_none_or(|l| out.len() < l))
        },
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
/// All modifications `(P, Q, x) ⇛ (P, Q, y)`, as component lists `μ_A: t_A ⇒ t'_A`.
pub fn enumerate_modifications(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    p: &WeakFunctor,
    q: &WeakFunctor,
    x: &Transformation,
    y: &Transformation,
    pointed: bool,
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>> {
    let n0 = dom.n0();
    let base = if pointed { dom.basepoint() } else { None };
    let mut cons: Vec<Vec<usize>> = vec![Vec::new(); n0];
    for c in 0..dom.n1() {
        cons[dom.src1(c).max(dom.tgt1(c))].push(c);
    }
    let mut out = Vec::new();
    backtrack(
        n0,
        budget,
        &mut |v, _| {
            if base == Some(v) {
                return if x.t[v] == y.t[v] { vec![cod.id2(x.t[v])] } else { vec![] };
            }
            cod.hom2(x.t[v], y.t[v]).to_vec()
        },
        &mut |v, mu| {
            cons[v].iter().all(|&c| {
                let (a, b) = (dom.src1(c), dom.tgt1(c));
                cod.vcomp(cod.whisker_l(p.one[c], mu[b]), y.theta[c])
                    == cod.vcomp(x.theta[c], cod.whisker_r(mu[a], q.one[c]))
            })
        },
        &mut |mu| {
            out.push(mu.to_vec());
            Ok(true)
        },
    )?;
    Ok(out)
}

/// A hom-2-groupoid together with the data each of its cells stands for.
#[derive(Clone, Debug)]
pub struct HomTwoGroupoid {
    pub gpd: TwoGroupoid,
    /// Objects.
    pub functors: Vec<WeakFunctor>,
    /// 1-cells; the source and target functors are `gpd.src1`/`gpd.tgt1`.
    pub transformations: Vec<Transformation>,
    /// 2-cells, as component lists.
    pub modifications: Vec<Vec<usize>>,
    functor_ix: HashMap<WeakFunctor, usize>,
    one_ix: HashMap<(usize, usize, Transformation), usize>,
    two_ix: HashMap<(usize, usize, Vec<usize>), usize>,
}

impl HomTwoGroupoid {
    pub fn functor_index(&self, f: &WeakFunctor) -> Option<usize> {
        self.functor_ix.get(f).copied()
    }

    /// Index of the 1-cell `t` from functor `i` to functor `j`.
    pub fn one_cell_index(&self, i: usize, j: usize, t: &Transformation) -> Option<usize> {
        self.one_ix.get(&(i, j, t.clone())).copied()
    }

    /// Index of the 2-cell with components `mu` from 1-cell `x` to 1-cell `y`.
    pub fn two_cell_index(&self, x: usize, y: usize, mu: &[usize]) -> Option<usize> {
        self.two_ix.get(&(x, y, mu.to_vec())).copied()
    }
}

/// Assembles the hom-2-groupoid on the given functors and validates it.
pub fn build_hom(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    functors: Vec<WeakFunctor>,
    strict_theta: bool,
    pointed: bool,
    cap: usize,
) -> Result<HomTwoGroupoid> {
    let mut budget = Budget::new(cap);
    let n = functors.len();
    let functor_ix: HashMap<WeakFunctor, usize> = functors.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let (mut src1, mut tgt1, mut transformations) = (Vec::new(), Vec::new(), Vec::new());
    let mut one_ix = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            let ts =
                enumerate_transformations(dom, cod, &functors[i], &functors[j], strict_theta, pointed, &mut budget)?;
            for t in ts {
                one_ix.insert((i, j, t.clone()), transformations.len());
                src1.push(i);
                tgt1.push(j);
                transformations.push(t);
            }
        }
    }
    let n1 = transformations.len();
    let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n1 {
        by_src[src1[x]].push(x);
    }
    let (mut src2, mut tgt2, mut modifications) = (Vec::new(), Vec::new(), Vec::new());
    let mut two_ix = HashMap::new();
    for x in 0..n1 {
        for &y in &by_src[src1[x]] {
            if tgt1[y] != tgt1[x] {
                continue;
            }
            let (p, q) = (&functors[src1[x]], &functors[tgt1[x]]);
            let ms = enumerate_modifications(
                dom,
                cod,
                p,
                q,
                &transformations[x],
                &transformations[y],
                pointed,
                &mut budget,
            )?;
            for m in ms {
                two_ix.insert((x, y, m.clone()), modifications.len());
                src2.push(x);
                tgt2.push(y);
                modifications.push(m);
            }
        }
    }
    let n2 = modifications.len();
    let missing = |what: &str| Error::Malformed(format!("hom-2-groupoid not closed under {what}"));

    let id1 = (0..n)
        .map(|i| {
            let e = Transformation::identity(cod, &functors[i]);
            one_ix.get(&(i, i, e)).copied().ok_or_else(|| missing("identities"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut comp1 = HashMap::new();
    for x in 0..n1 {
        for &y in &by_src[tgt1[x]] {
            let t = transformations[x].then(dom, cod, &transformations[y]);
            let z = *one_ix.get(&(src1[x], tgt1[y], t)).ok_or_else(|| missing("composition of transformations"))?;
            comp1.insert((x, y), z);
        }
    }
    let id2 = (0..n1)
        .map(|x| {
            let mu: Vec<usize> = transformations[x].t.iter().map(|&f| cod.id2(f)).collect();
            two_ix.get(&(x, x, mu)).copied().ok_or_else(|| missing("identity modifications"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out2: Vec<Vec<usize>> = vec![Vec::new(); n1];
    for m in 0..n2 {
        out2[src2[m]].push(m);
    }
    let mut vcomp = HashMap::new();
    let mut hcomp = HashMap::new();
    for m in 0..n2 {
        for &k in &out2[tgt2[m]] {
            let mu: Vec<usize> =
                modifications[m].iter().zip(&modifications[k]).map(|(&a, &b)| cod.vcomp(a, b)).collect();
            let r = *two_ix.get(&(src2[m], tgt2[k], mu)).ok_or_else(|| missing("vertical composition"))?;
            vcomp.insert((m, k), r);
        }
        let (x, x2) = (src2[m], tgt2[m]);
        for &y in &by_src[tgt1[x]] {
            for &k in &out2[y] {
                let mu: Vec<usize> =
                    modifications[m].iter().zip(&modifications[k]).map(|(&a, &b)| cod.hcomp(a, b)).collect();
                let key = (comp1[&(x, y)], comp1[&(x2, tgt2[k])], mu);
                let r = *two_ix.get(&key).ok_or_else(|| missing("horizontal composition"))?;
                hcomp.insert((m, k), r);
            }
        }
    }
    let gpd = TwoGroupoid::new(TwoCellData {
        objects: n,
        src1,
        tgt1,
        id1,
        comp1,
        src2,
        tgt2,
        id2,
        vcomp,
        hcomp,
        basepoint: None,
    })?;
    Ok(HomTwoGroupoid { gpd, functors, transformations, modifications, functor_ix, one_ix, two_ix })
}

/// Strict 2-functors, strict transformations, modifications.
pub fn hom_strict(dom: &TwoGroupoid, cod: &TwoGroupoid, pointed: bool, cap: usize) -> Result<HomTwoGroupoid> {
    let fs = enumerate_weak_functors(dom, cod, true, pointed, cap)?;
    build_hom(dom, cod, fs, true, pointed, cap)
}

/// Strict 2-functors, weak transformations, modifications.
pub fn hom_weak_trans(dom: &TwoGroupoid, cod: &TwoGroupoid, pointed: bool, cap: usize) -> Result<HomTwoGroupoid> {
    let fs = enumerate_weak_functors(dom, cod, true, pointed, cap)?;
    build_hom(dom, cod, fs, false, pointed, cap)
}

/// Builds the currying map `hom(E×D, C) → hom(E, hom(D, C))` on every cell
/// and checks that it is an isomorphism of 2-groupoids.
pub fn check_exponential_law(e: &TwoGroupoid, d: &TwoGroupoid, c: &TwoGroupoid, cap: usize) -> Result<bool> {
    let ed = e.product(d).with_basepoint(None);
    let (e, d, c) = (e.with_basepoint(None), d.with_basepoint(None), c.with_basepoint(None));
    let lhs = hom_strict(&ed, &c, false, cap)?;
    let h = hom_strict(&d, &c, false, cap)?;
    let rhs = hom_strict(&e, &h.gpd, false, cap)?;
    let (d0, d1, d2) = (d.n0(), d.n1(), d.n2());
    let ed_one = |u: usize, f: usize| u * d1 + f;

    let mut map_obj = Vec::new();
    let mut inner_obj: Vec<Vec<usize>> = Vec::new();
    for fun in &lhs.functors {
        // the functor E → hom(D, C) curried from `fun`
        let slice = |x: usize| -> WeakFunctor {
            let f = TwoFunctor {
                obj: (0..d0).map(|y| fun.obj[x * d0 + y]).collect(),
                one: (0..d1).map(|g| fun.one[ed_one(e.id1(x), g)]).collect(),
                two: (0..d2).map(|a| fun.two[e.id2(e.id1(x)) * d2 + a]).collect(),
            };
            WeakFunctor::from_strict(&d, &c, &f)
        };
        let objs: Option<Vec<usize>> = (0..e.n0()).map(|x| h.functor_index(&slice(x))).collect();
        let Some(objs) = objs else { return Ok(false) };
        let mut ones = Vec::new();
        for u in 0..e.n1() {
            let (i, j) = (objs[e.src1(u)], objs[e.tgt1(u)]);
            let t: Vec<usize> = (0..d0).map(|y| fun.one[ed_one(u, d.id1(y))]).collect();
            let theta = (0..d1).map(|g| c.id2(c.comp(h.functors[i].one[g], t[d.tgt1(g)]))).collect();
            match h.one_cell_index(i, j, &Transformation { t, theta }) {
                Some(k) => ones.push(k),
                None => return Ok(false),
            }
        }
        let mut twos = Vec::new();
        for xi in 0..e.n2() {
            let (x, y) = (ones[e.src2(xi)], ones[e.tgt2(xi)]);
            let mu: Vec<usize> = (0..d0).map(|z| fun.two[xi * d2 + d.id2(d.id1(z))]).collect();
            match h.two_cell_index(x, y, &mu) {
                Some(k) => twos.push(k),
                None => return Ok(false),
            }
        }
        let g = WeakFunctor::from_strict(&e, &h.gpd, &TwoFunctor { obj: objs.clone(), one: ones, two: twos });
        match rhs.functor_index(&g) {
            Some(k) => map_obj.push(k),
            None => return Ok(false),
        }
        inner_obj.push(objs);
    }
    let mut map_one = Vec::new();
    let mut inner_one: Vec<Vec<usize>> = Vec::new();
    for (k, tau) in lhs.transformations.iter().enumerate() {
        let (a, b) = (lhs.gpd.src1(k), lhs.gpd.tgt1(k));
        let mut comps = Vec::new();
        for x in 0..e.n0() {
            let (i, j) = (inner_obj[a][x], inner_obj[b][x]);
            let t: Vec<usize> = (0..d0).map(|y| tau.t[x * d0 + y]).collect();
            let theta = (0..d1).map(|g| c.id2(c.comp(h.functors[i].one[g], t[d.tgt1(g)]))).collect();
            match h.one_cell_index(i, j, &Transformation { t, theta }) {
                Some(z) => comps.push(z),
                None => return Ok(false),
            }
        }
        let (ra, rb) = (map_obj[a], map_obj[b]);
        let theta = (0..e.n1()).map(|u| h.gpd.id2(h.gpd.comp(rhs.functors[ra].one[u], comps[e.tgt1(u)]))).collect();
        match rhs.one_cell_index(ra, rb, &Transformation { t: comps.clone(), theta }) {
            Some(z) => map_one.push(z),
            None => return Ok(false),
        }
        inner_one.push(comps);
    }
    let mut map_two = Vec::new();
    for (k, m) in lhs.modifications.iter().enumerate() {
        let (x, y) = (lhs.gpd.src2(k), lhs.gpd.tgt2(k));
        let mut comps = Vec::new();
        for z in 0..e.n0() {
            let mu: Vec<usize> = (0..d0).map(|w| m[z * d0 + w]).collect();
            match h.two_cell_index(inner_one[x][z], inner_one[y][z], &mu) {
                Some(r) => comps.push(r),
                None => return Ok(false),
            }
        }
        match rhs.two_cell_index(map_one[x], map_one[y], &comps) {
            Some(r) => map_two.push(r),
            None => return Ok(false),
        }
    }
    let f = TwoFunctor { obj: map_obj, one: map_one, two: map_two };
    Ok(super::is_isomorphism(&lhs.gpd, &rhs.gpd, &f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::FiniteGroup;
    use crate::twogpd::{pi0, xmod_to_2group};
    use crate::xmod::CrossedModule;

    const CAP: usize = 1_000_000;

    fn b1z2() -> TwoGroupoid {
        xmod_to_2group(&CrossedModule::from_group(&FiniteGroup::cyclic(2)))
    }

    fn bz2() -> TwoGroupoid {
        xmod_to_2group(&CrossedModule::from_abelian(&FiniteGroup::cyclic(2)).unwrap())
    }

    #[test]
    fn hom_from_point_is_target() {
        let p = TwoGroupoid::point();
        for c in [b1z2(), bz2(), TwoGroupoid::interval()] {
            let h = hom_strict(&p, &c, false, CAP).unwrap();
            assert_eq!((h.gpd.n0(), h.gpd.n1(), h.gpd.n2()), (c.n0(), c.n1(), c.n2()));
            // evaluation at the point
            let ev = TwoFunctor {
                obj: h.functors.iter().map(|f| f.obj[0]).collect(),
                one: h.transformations.iter().map(|t| t.t[0]).collect(),
                two: h.modifications.iter().map(|m| m[0]).collect(),
            };
            assert!(crate::twogpd::is_isomorphism(&h.gpd, &c, &ev));
        }
    }

    #[test]
    fn endomorphisms_of_bz2_are_not_connected() {
        let h = hom_strict(&b1z2(), &b1z2(), false, CAP).unwrap();
        assert_eq!(h.gpd.n0(), 2);
        assert_eq!(pi0(&h.gpd), vec![0, 1]);
    }

    #[test]
    fn weak_transformations_contain_strict_ones() {
        let (d, c) = (b1z2(), bz2());
        let s = hom_strict(&d, &c, true, CAP).unwrap();
        let w = hom_weak_trans(&d, &c, true, CAP).unwrap();
        assert_eq!(s.gpd.n0(), w.gpd.n0());
        for (k, t) in s.transformations.iter().enumerate() {
            assert!(w.one_cell_index(s.gpd.src1(k), s.gpd.tgt1(k), t).is_some());
        }
        assert!(w.gpd.n1() > s.gpd.n1());
        // no nonidentity 1-cells in the point: nothing to weaken
        let p = TwoGroupoid::point();
        assert_eq!(
            hom_weak_trans(&p, &c, false, CAP).unwrap().gpd.n1(),
            hom_strict(&p, &c, false, CAP).unwrap().gpd.n1()
        );
    }

    #[test]
    fn exponential_law_small() {
        let p = TwoGroupoid::point();
        assert!(check_exponential_law(&p, &p, &p, CAP).unwrap());
        assert!(check_exponential_law(&p, &b1z2(), &bz2(), CAP).unwrap());
        assert!(check_exponential_law(&b1z2(), &b1z2(), &b1z2(), CAP).unwrap());
        assert!(check_exponential_law(&TwoGroupoid::interval(), &p, &b1z2(), CAP).unwrap());
    }
}
