//! Nerves of (weak) 2-groupoids, nerves of weak functors and the way back,
//! and the correspondence between transformations and simplicial homotopies.
//!
//! Vertices of a 2-simplex `(f, g, α)` are `0 → 1 → 2` with `f = 01`,
//! `g = 12` and `α: fg ⇒ h` where `h = 02`; its faces are `d₀ = g`,
//! `d₁ = h`, `d₂ = f`. A 3-simplex is a face tuple `(d₀, d₁, d₂, d₃)`
//! satisfying the tetrahedron condition; level 4 is the coskeleton.

use std::collections::HashMap;

use crate::error::{Budget, Error, Result};
use crate::fingroup::make_hom;
use crate::simpset::{check_simplicial_map, find_homotopy, simplicial_maps_extending, SimplicialMap, SimplicialSet};
use crate::twogpd::hom::{check_transformation, transformations_upto, Transformation};
use crate::twogpd::{induced_pi_maps, loop_classes, pi1_at, pi2_at, PiMaps, TwoCategory, TwoGroupoid, UnionFind};
use crate::weakmaps::{check_weak_functor, enumerate_weak_functors, WeakFunctor};

/// A nerve with the cell data behind its 2-simplices.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub sset: SimplicialSet,
    /// `(f, g, α)` for every 2-simplex.
    pub triangles: Vec<(usize, usize, usize)>,
    tri_ix: HashMap<(usize, usize, usize), usize>,
}

impl Nerve {
    pub fn triangle_index(&self, f: usize, g: usize, alpha: usize) -> Option<usize> {
        self.tri_ix.get(&(f, g, alpha)).copied()
    }
}

/// The nerve, truncated at 4 and coskeletal at 3.
pub fn nerve(g: &impl TwoCategory) -> Nerve {
    nerve_truncated(g, 4)
}

/// The nerve up to level `trunc` (at least 3).
pub fn nerve_truncated(g: &impl TwoCategory, trunc: usize) -> Nerve {
    let (n0, n1) = (g.n0(), g.n1());
    // level 2, identity 2-cell first in each (f, g) block
    let mut triangles = Vec::new();
    for f in 0..n1 {
        for h in 0..n1 {
            if g.tgt1(f) != g.src1(h) {
                continue;
            }
            let fh = g.comp(f, h);
            triangles.push((f, h, g.id2(fh)));
            triangles.extend(g.out2(fh).iter().filter(|&&a| a != g.id2(fh)).map(|&a| (f, h, a)));
        }
    }
    let tri_ix: HashMap<(usize, usize, usize), usize> = triangles.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let tri = |f: usize, h: usize, a: usize| tri_ix[&(f, h, a)];

    // level 3: choose α = 012, m = 23, γ = 123, β = 013; δ = 023 is forced
    let mut tets: Vec<[usize; 4]> = Vec::new();
    for (ia, &(f, gg, al)) in triangles.iter().enumerate() {
        let hh = g.tgt2(al);
        for m in 0..n1 {
            if g.tgt1(gg) != g.src1(m) {
                continue;
            }
            for &ga in g.out2(g.comp(gg, m)) {
                let l = g.tgt2(ga);
                let ig = tri(gg, m, ga);
                for &be in g.out2(g.comp(f, l)) {
                    let ib = tri(f, l, be);
                    // [φ_{f,g,m}][fγ][β] = [αm][δ]
                    let lhs = g.vcomp(g.vcomp(g.assoc(f, gg, m), g.whisker_l(f, ga)), be);
                    let de = g.vcomp(g.vinv(g.whisker_r(al, m)), lhs);
                    tets.push([ig, tri(hh, m, de), ib, ia]);
                }
            }
        }
    }
    tets.sort_unstable();
    let tet_ix: HashMap<[usize; 4], usize> = tets.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    let sizes = vec![n0, n1, triangles.len(), tets.len()];
    let faces = vec![
        Vec::new(),
        (0..n1).flat_map(|f| [g.tgt1(f), g.src1(f)]).collect(),
        triangles.iter().flat_map(|&(f, h, a)| [h, g.tgt2(a), f]).collect(),
        tets.iter().flat_map(|t| t.iter().copied()).collect(),
    ];
    let mut degens = vec![(0..n0).map(|x| g.id1(x)).collect::<Vec<_>>()];
    degens.push(
        (0..n1)
            .flat_map(|f| {
                let (x, y) = (g.src1(f), g.tgt1(f));
                [tri(g.id1(x), f, g.id2(f)), tri(f, g.id1(y), g.id2(f))]
            })
            .collect(),
    );
    // s_j on 2-simplices via the simplicial identities
    let s1 = |f: usize| tri(f, g.id1(g.tgt1(f)), g.id2(f));
    let s0 = |f: usize| tri(g.id1(g.src1(f)), f, g.id2(f));
    let mut d2 = Vec::with_capacity(triangles.len() * 3);
    for (x, &(f, h, a)) in triangles.iter().enumerate() {
        let (e0, e1, e2) = (h, g.tgt2(a), f);
        // s_0 x: (x, x, s_0 d_1 x, s_0 d_2 x)
        d2.push(tet_ix[&[x, x, s0(e1), s0(e2)]]);
        // s_1 x: (s_0 d_0 x, x, x, s_1 d_2 x)
        d2.push(tet_ix[&[s0(e0), x, x, s1(e2)]]);
        // s_2 x: (s_1 d_0 x, s_1 d_1 x, x, x)
        d2.push(tet_ix[&[s1(e0), s1(e1), x, x]]);
    }
    degens.push(d2);
    let three = SimplicialSet::new(sizes, faces, degens, None).expect("3-truncated nerve");
    let sset = three.coskeleton(3, trunc).expect("coskeleton of a nerve");
    Nerve { sset, triangles, tri_ix }
}

/// The simplicial map `NF: N𝔥 → N𝔊` of a weak functor.
pub fn nerve_of_weak_functor(
    dom: &impl TwoCategory,
    cod: &impl TwoCategory,
    ndom: &Nerve,
    ncod: &Nerve,
    f: &WeakFunctor,
) -> Result<SimplicialMap> {
    let t = ndom.sset.trunc().min(ncod.sset.trunc());
    let mut levels = vec![f.obj.clone(), f.one.clone()];
    let l2 = ndom
        .triangles
        .iter()
        .map(|&(a, b, al)| {
            let cell = cod.vcomp(f.eps(a, b), f.two[al]);
            ncod.triangle_index(f.one[a], f.one[b], cell)
                .ok_or_else(|| Error::Malformed("functor image is not a 2-simplex".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    levels.push(l2);
    let _ = dom;
    for n in 3..=t {
        let l = (0..ndom.sset.size(n))
            .map(|s| {
                let b: Vec<usize> = ndom.sset.boundary(n, s).iter().map(|&y| levels[n - 1][y]).collect();
                match ncod.sset.with_boundary(n, &b) {
                    [z] => Ok(*z),
                    _ => Err(Error::violation("ε coherence", vec![n, s])),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        levels.push(l);
    }
    let m = SimplicialMap { levels };
    check_simplicial_map(&ndom.sset, &ncod.sset, &m)?;
    Ok(m)
}

/// Reads a weak functor off a simplicial map between nerves: `ε_{a,b}` from
/// the image of the 2-simplex `(a, b, id)` and `F(α)` for `α: a ⇒ a'` from
/// the image of `(a, id, α)`.
pub fn simplicial_map_to_weak_functor(
    dom: &impl TwoCategory,
    cod: &impl TwoCategory,
    ndom: &Nerve,
    ncod: &Nerve,
    m: &SimplicialMap,
) -> Result<WeakFunctor> {
    let img = |f: usize, g: usize, a: usize| -> Result<(usize, usize, usize)> {
        let i = ndom.triangle_index(f, g, a).ok_or_else(|| Error::Malformed("2-simplex".into()))?;
        Ok(ncod.triangles[m.levels[2][i]])
    };
    let mut eps = std::collections::BTreeMap::new();
    for (&(a, b), &c) in &dom.data().comp1 {
        eps.insert((a, b), img(a, b, dom.id2(c))?.2);
    }
    let two = (0..dom.n2())
        .map(|al| {
            let a = dom.src2(al);
            Ok(img(a, dom.id1(dom.tgt1(a)), al)?.2)
        })
        .collect::<Result<Vec<_>>>()?;
    let f = WeakFunctor { obj: m.levels[0].clone(), one: m.levels[1].clone(), two, eps };
    check_weak_functor(dom, cod, &f)?;
    Ok(f)
}

/// Induced maps on `π₀`, `π₁`, `π₂`, with the group-level maps checked to be homomorphisms.
pub fn induced_pi(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &WeakFunctor) -> Result<PiMaps> {
    let maps = induced_pi_maps(dom, cod, &f.obj, &f.one, &f.two);
    for x in 0..dom.n0() {
        let y = f.obj[x];
        // class numbering of pi1_at follows loop_classes
        debug_assert_eq!(loop_classes(dom, x).0.len(), pi1_at(dom, x).order());
        make_hom(&pi1_at(dom, x), &pi1_at(cod, y), maps.pi1[x].clone())?;
        make_hom(&pi2_at(dom, x), &pi2_at(cod, y), maps.pi2[x].clone())?;
    }
    Ok(maps)
}

/// Index of the `Δ¹` simplex at level `n` with `zeros` leading zeros.
fn interval_index(n: usize, zeros: usize) -> usize {
    n + 1 - zeros
}

/// `Δ¹ × X` at the truncation used for homotopies.
fn cylinder(x: &SimplicialSet) -> SimplicialSet {
    SimplicialSet::standard_simplex(1, 3).product(&x.truncate(3))
}

/// Builds `H: Δ¹ × N𝔥 → N𝔊` from a transformation `(t, θ): P ⇒ Q`: the
/// diagonal of the prism over `c: A → B` goes to `t_A Q(c)`, its lower
/// triangle to `θ_c` and its upper triangle to the identity; the remaining
/// simplices are found by search.
#[allow(clippy::too_many_arguments)]
pub fn transformation_to_homotopy(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    ndom: &Nerve,
    ncod: &Nerve,
    p: &WeakFunctor,
    q: &WeakFunctor,
    tr: &Transformation,
    cap: usize,
) -> Result<SimplicialMap> {
    let x = &ndom.sset;
    let cyl = cylinder(x);
    let np = nerve_of_weak_functor(dom, cod, ndom, ncod, p)?;
    let nq = nerve_of_weak_functor(dom, cod, ndom, ncod, q)?;
    let mut fixed = Vec::new();
    for n in 0..=3 {
        let m = x.size(n);
        for s in 0..m {
            fixed.push((n, interval_index(n, n + 1) * m + s, np.levels[n][s]));
            fixed.push((n, interval_index(n, 0) * m + s, nq.levels[n][s]));
        }
    }
    let (m0, m1, m2) = (x.size(0), x.size(1), x.size(2));
    let _ = m0;
    for a in 0..dom.n0() {
        fixed.push((1, interval_index(1, 1) * m1 + x.degen(0, a, 0), tr.t[a]));
    }
    for c in 0..dom.n1() {
        let (a, b) = (dom.src1(c), dom.tgt1(c));
        let diag = cod.comp(tr.t[a], q.one[c]);
        fixed.push((1, interval_index(1, 1) * m1 + c, diag));
        let lower = ncod.triangle_index(p.one[c], tr.t[b], tr.theta[c]).ok_or_else(|| Error::Malformed("θ".into()))?;
        let upper = ncod.triangle_index(tr.t[a], q.one[c], cod.id2(diag)).unwrap();
        fixed.push((2, interval_index(2, 2) * m2 + x.degen(1, c, 1), lower));
        fixed.push((2, interval_index(2, 1) * m2 + x.degen(1, c, 0), upper));
    }
    let mut hs = simplicial_maps_extending(&cyl, &ncod.sset, &fixed, Some(1), cap)?;
    hs.pop().ok_or_else(|| Error::FillingFailure("no homotopy extends the prism data".into()))
}

/// Reads a transformation off a homotopy `H: NP ≃ NQ`: `t_A` is the image
/// of the vertical edge over `A` and `θ_c = [lower][upper]⁻¹`.
#[allow(clippy::too_many_arguments)]
pub fn homotopy_to_transformation(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    ndom: &Nerve,
    ncod: &Nerve,
    p: &WeakFunctor,
    q: &WeakFunctor,
    h: &SimplicialMap,
) -> Result<Transformation> {
    let x = &ndom.sset;
    let (m1, m2) = (x.size(1), x.size(2));
    let t: Vec<usize> = (0..dom.n0()).map(|a| h.levels[1][interval_index(1, 1) * m1 + x.degen(0, a, 0)]).collect();
    let theta = (0..dom.n1())
        .map(|c| {
            let lower = ncod.triangles[h.levels[2][interval_index(2, 2) * m2 + x.degen(1, c, 1)]].2;
            let upper = ncod.triangles[h.levels[2][interval_index(2, 1) * m2 + x.degen(1, c, 0)]].2;
            cod.vcomp(lower, cod.vinv(upper))
        })
        .collect();
    let tr = Transformation { t, theta };
    check_transformation(dom, cod, p, q, &tr)?;
    Ok(tr)
}

/// Both sides of `π₀ HOM(𝔥, 𝔊) ≅ [N𝔥, N𝔊]`, with every witnessing
/// transformation turned into a homotopy and every homotopy back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0Comparison {
    pub functors: Vec<WeakFunctor>,
    /// Classes under transformations.
    pub hom_classes: Vec<usize>,
    /// Classes of the nerves under simplicial homotopy.
    pub homotopy_classes: Vec<usize>,
}

impl Pi0Comparison {
    pub fn count(&self) -> usize {
        self.hom_classes.iter().max().map_or(0, |m| m + 1)
    }
    pub fn agree(&self) -> bool {
        self.hom_classes == self.homotopy_classes
    }
}

pub fn pi0_hom_vs_homotopy_classes(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    pointed: bool,
    cap: usize,
) -> Result<Pi0Comparison> {
    let functors = enumerate_weak_functors(dom, cod, false, pointed, cap)?;
    let (ndom, ncod) = (nerve(dom), nerve(cod));
    let maps = functors.iter().map(|f| nerve_of_weak_functor(dom, cod, &ndom, &ncod, f)).collect::<Result<Vec<_>>>()?;
    let base = if pointed { dom.basepoint() } else { None };
    let mut budget = Budget::new(cap);
    let n = functors.len();
    let (mut by_t, mut by_h) = (UnionFind::new(n), UnionFind::new(n));
    for i in 0..n {
        for j in i + 1..n {
            if by_t.find(i) != by_t.find(j) {
                if let Some(tr) =
                    transformations_upto(dom, cod, &functors[i], &functors[j], false, pointed, Some(1), &mut budget)?
                        .pop()
                {
                    let h = transformation_to_homotopy(dom, cod, &ndom, &ncod, &functors[i], &functors[j], &tr, cap)?;
                    check_simplicial_map(&cylinder(&ndom.sset), &ncod.sset, &h)?;
                    by_t.union(i, j);
                }
            }
            if by_h.find(i) != by_h.find(j) {
                if let Some(h) = find_homotopy(&ndom.sset, &ncod.sset, &maps[i], &maps[j], base, cap)? {
                    homotopy_to_transformation(dom, cod, &ndom, &ncod, &functors[i], &functors[j], &h)?;
                    by_h.union(i, j);
                }
            }
        }
    }
    Ok(Pi0Comparison { functors, hom_classes: by_t.labels(), homotopy_classes: by_h.labels() })
}

/// The strict pullback `A ×_C B` of strict functors `F: A → C`, `G: B → C`,
/// with projections. Cells are pairs over a common image.
pub fn pullback_2gpd(
    a: &TwoGroupoid,
    b: &TwoGroupoid,
    f: &crate::twogpd::TwoFunctor,
    g: &crate::twogpd::TwoFunctor,
) -> Result<(TwoGroupoid, crate::twogpd::TwoFunctor, crate::twogpd::TwoFunctor)> {
    let pairs = |fa: &[usize], gb: &[usize]| -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (x, &u) in fa.iter().enumerate() {
            for (y, &w) in gb.iter().enumerate() {
                if u == w {
                    v.push((x, y));
                }
            }
        }
        v
    };
    let (p0, p1, p2) = (pairs(&f.obj, &g.obj), pairs(&f.one, &g.one), pairs(&f.two, &g.two));
    let ix = |v: &[(usize, usize)]| -> HashMap<(usize, usize), usize> {
        v.iter().enumerate().map(|(i, &p)| (p, i)).collect()
    };
    let (i0, i1, i2) = (ix(&p0), ix(&p1), ix(&p2));
    let lift2 = |m: &HashMap<(usize, usize), usize>,
                 n: &HashMap<(usize, usize), usize>,
                 cells: &[(usize, usize)],
                 idx: &HashMap<(usize, usize), usize>| {
        let mut out = HashMap::new();
        for (i, &(x, y)) in cells.iter().enumerate() {
            for (j, &(u, w)) in cells.iter().enumerate() {
                if let (Some(&r), Some(&s)) = (m.get(&(x, u)), n.get(&(y, w))) {
                    out.insert((i, j), idx[&(r, s)]);
                }
            }
        }
        out
    };
    let (ad, bd) = (a.data(), b.data());
    let data = crate::twogpd::TwoCellData {
        objects: p0.len(),
        src1: p1.iter().map(|&(x, y)| i0[&(a.src1(x), b.src1(y))]).collect(),
        tgt1: p1.iter().map(|&(x, y)| i0[&(a.tgt1(x), b.tgt1(y))]).collect(),
        id1: p0.iter().map(|&(x, y)| i1[&(a.id1(x), b.id1(y))]).collect(),
        comp1: lift2(&ad.comp1, &bd.comp1, &p1, &i1),
        src2: p2.iter().map(|&(x, y)| i1[&(a.src2(x), b.src2(y))]).collect(),
        tgt2: p2.iter().map(|&(x, y)| i1[&(a.tgt2(x), b.tgt2(y))]).collect(),
        id2: p1.iter().map(|&(x, y)| i2[&(a.id2(x), b.id2(y))]).collect(),
        vcomp: lift2(&ad.vcomp, &bd.vcomp, &p2, &i2),
        hcomp: lift2(&ad.hcomp, &bd.hcomp, &p2, &i2),
        basepoint: None,
    };
    let pb = TwoGroupoid::new(data)?;
    let proj = |k: usize| crate::twogpd::TwoFunctor {
        obj: p0.iter().map(|p| if k == 0 { p.0 } else { p.1 }).collect(),
        one: p1.iter().map(|p| if k == 0 { p.0 } else { p.1 }).collect(),
        two: p2.iter().map(|p| if k == 0 { p.0 } else { p.1 }).collect(),
    };
    Ok((pb, proj(0), proj(1)))
}

/// Checks `N(A ×_C B) ≅ NA ×_{NC} NB` cellwise: the map induced by the two
/// projections is a bijection onto the pairs with equal image at every level.
pub fn nerve_preserves_fiber_products(
    a: &TwoGroupoid,
    b: &TwoGroupoid,
    c: &TwoGroupoid,
    f: &crate::twogpd::TwoFunctor,
    g: &crate::twogpd::TwoFunctor,
) -> Result<bool> {
    let (pb, pa, pbb) = pullback_2gpd(a, b, f, g)?;
    let (na, nb, nc, np) = (nerve(a), nerve(b), nerve(c), nerve(&pb));
    let wf = WeakFunctor::from_strict(a, c, f);
    let wg = WeakFunctor::from_strict(b, c, g);
    let nf = nerve_of_weak_functor(a, c, &na, &nc, &wf)?;
    let ng = nerve_of_weak_functor(b, c, &nb, &nc, &wg)?;
    let npa = nerve_of_weak_functor(&pb, a, &np, &na, &WeakFunctor::from_strict(&pb, a, &pa))?;
    let npb = nerve_of_weak_functor(&pb, b, &np, &nb, &WeakFunctor::from_strict(&pb, b, &pbb))?;
    for n in 0..=4 {
        let mut want: Vec<(usize, usize)> = Vec::new();
        for x in 0..na.sset.size(n) {
            for y in 0..nb.sset.size(n) {
                if nf.levels[n][x] == ng.levels[n][y] {
                    want.push((x, y));
                }
            }
        }
        let mut got: Vec<(usize, usize)> = (0..np.sset.size(n)).map(|s| (npa.levels[n][s], npb.levels[n][s])).collect();
        got.sort_unstable();
        if got.windows(2).any(|w| w[0] == w[1]) || got != want {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{FiniteGroup, GroupAction};
    use crate::twogpd::{xmod_to_2group, StrictTwoCategory, TwoFunctor};
    use crate::weakmaps::enumerate_weak_functors;
    use crate::xmod::CrossedModule;

    const CAP: usize = 50_000_000;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    #[test]
    fn nerve_sizes() {
        let b = xmod_to_2group(&CrossedModule::from_group(&z(2)));
        assert_eq!(nerve(&b).sset.sizes(), &[1, 2, 4, 8, 16]);
        let b = xmod_to_2group(&CrossedModule::from_abelian(&z(2)).unwrap());
        assert_eq!(&nerve(&b).sset.sizes()[..4], &[1, 1, 2, 8]);
        assert_eq!(nerve(&TwoGroupoid::point()).sset.sizes(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn nerves_are_in_sset2() {
        let g = xmod_to_2group(
            &CrossedModule::new(z(4), z(2), vec![0, 1, 0, 1], GroupAction::trivial(&z(2), &z(4))).unwrap(),
        );
        for x in [g, TwoGroupoid::interval()] {
            let r = nerve(&x).sset.in_sset2().unwrap();
            assert!(r.kan && r.cosk3 && r.minimal2 && r.cosk2_injective);
        }
    }

    #[test]
    fn simplices_are_functors_from_ordinals() {
        let g = xmod_to_2group(&CrossedModule::from_abelian(&z(2)).unwrap());
        let n = nerve(&g);
        for k in 0..=3 {
            let fs = enumerate_weak_functors(&StrictTwoCategory::ordinal(k), &g, false, false, CAP).unwrap();
            assert_eq!(fs.len(), n.sset.size(k));
        }
    }

    #[test]
    fn functor_round_trip() {
        let h = xmod_to_2group(&CrossedModule::from_group(&z(3)));
        let g = xmod_to_2group(&CrossedModule::from_abelian(&z(3)).unwrap());
        let (nh, ng) = (nerve(&h), nerve(&g));
        let fs = enumerate_weak_functors(&h, &g, false, true, CAP).unwrap();
        let maps = crate::simpset::simplicial_maps(&nh.sset, &ng.sset, CAP).unwrap();
        assert_eq!(fs.len(), maps.len());
        for f in &fs {
            let m = nerve_of_weak_functor(&h, &g, &nh, &ng, f).unwrap();
            assert!(maps.contains(&m));
            assert_eq!(&simplicial_map_to_weak_functor(&h, &g, &nh, &ng, &m).unwrap(), f);
        }
        let id = nerve_of_weak_functor(&h, &h, &nh, &nh, &WeakFunctor::identity(&h)).unwrap();
        assert_eq!(id, SimplicialMap::identity(&nh.sset));
    }

    #[test]
    fn homotopy_classes_match_transformations() {
        let h = xmod_to_2group(&CrossedModule::from_group(&z(2)));
        let g = xmod_to_2group(&CrossedModule::from_abelian(&z(2)).unwrap());
        let c = pi0_hom_vs_homotopy_classes(&h, &g, true, CAP).unwrap();
        assert!(c.agree());
        assert_eq!(c.count(), 2);
        let c = pi0_hom_vs_homotopy_classes(&h, &h, true, CAP).unwrap();
        assert!(c.agree());
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn fiber_products() {
        let b = xmod_to_2group(&CrossedModule::from_group(&z(2)));
        let p = TwoGroupoid::point();
        let to_p = TwoFunctor::to_point(&b);
        assert!(nerve_preserves_fiber_products(&b, &b, &p, &to_p, &to_p).unwrap());
        let id = TwoFunctor::identity(&b);
        assert!(nerve_preserves_fiber_products(&b, &b, &b, &id, &id).unwrap());
    }

    #[test]
    fn induced_maps() {
        let g = xmod_to_2group(&CrossedModule::from_abelian(&z(2)).unwrap());
        let m = induced_pi(&g, &g, &WeakFunctor::identity(&g)).unwrap();
        assert_eq!(m.pi2[0], vec![0, 1]);
    }
}
