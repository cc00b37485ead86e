//! Weak 2-groupoids, weak 2-functors, and their crossed-module form.
//!
//! Identities are strict throughout: associators and `ε` are identities as
//! soon as one argument is an identity 1-cell.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Budget, Error, Result};
use crate::search::backtrack;
use crate::twogpd::hom::{build_hom, transformations_upto, HomTwoGroupoid, Transformation};
use crate::twogpd::{validate_common, CellIndex, TwoCategory, TwoCellData, TwoFunctor, TwoGroupoid, UnionFind};
use crate::xmod::CrossedModule;

fn viol(axiom: &'static str, witness: Vec<usize>) -> Error {
    Error::violation(axiom, witness)
}

/// A 2-groupoid whose composition of 1-cells is associative only up to the
/// associator `φ_{a,b,c}: (ab)c ⇒ a(bc)`. 1-cells need only be invertible up
/// to a 2-cell, which is what reconstruction from arbitrary fillers gives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakTwoGroupoid {
    data: TwoCellData,
    index: CellIndex,
    assoc: HashMap<(usize, usize, usize), usize>,
}

impl TwoCategory for WeakTwoGroupoid {
    fn data(&self) -> &TwoCellData {
        &self.data
    }
    fn index(&self) -> &CellIndex {
        &self.index
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> usize {
        self.assoc[&(a, b, c)]
    }
}

/// Composable triples `(a, b, c)` in lexicographic order.
pub fn composable_triples(g: &impl TwoCategory) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.n1() {
        for b in 0..g.n1() {
            if g.tgt1(a) != g.src1(b) {
                continue;
            }
            for c in 0..g.n1() {
                if g.tgt1(b) == g.src1(c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Validates A1 (pentagon), A2 (unit associators), naturality of `φ` and
/// weak invertibility of 1-cells.
pub fn check_weak_2groupoid(
    data: TwoCellData,
    assoc: HashMap<(usize, usize, usize), usize>,
) -> Result<WeakTwoGroupoid> {
    let index = validate_common(&data)?;
    let g = WeakTwoGroupoid { data, index, assoc };
    let triples = composable_triples(&g);
    if triples.len() != g.assoc.len() {
        return Err(Error::Malformed("associator not defined exactly on composable triples".into()));
    }
    for &(a, b, c) in &triples {
        let Some(&p) = g.assoc.get(&(a, b, c)) else {
            return Err(viol("associator defined", vec![a, b, c]));
        };
        if p >= g.n2() || g.src2(p) != g.comp(g.comp(a, b), c) || g.tgt2(p) != g.comp(a, g.comp(b, c)) {
            return Err(viol("associator source/target", vec![a, b, c]));
        }
        if (g.is_id1(a) || g.is_id1(b) || g.is_id1(c)) && p != g.id2(g.src2(p)) {
            return Err(viol("A2", vec![a, b, c]));
        }
    }
    for &(a, b, c) in &triples {
        for d in 0..g.n1() {
            if g.tgt1(c) != g.src1(d) {
                continue;
            }
            let (ab, bc, cd) = (g.comp(a, b), g.comp(b, c), g.comp(c, d));
            let lhs =
                g.vcomp(g.vcomp(g.whisker_r(g.assoc(a, b, c), d), g.assoc(a, bc, d)), g.whisker_l(a, g.assoc(b, c, d)));
            let rhs = g.vcomp(g.assoc(ab, c, d), g.assoc(a, b, cd));
            if lhs != rhs {
                return Err(viol("A1", vec![a, b, c, d]));
            }
        }
    }
    for &(a, b, c) in &triples {
        for &x in g.out2(a) {
            for &y in g.out2(b) {
                let xy = g.hcomp(x, y);
                for &z in g.out2(c) {
                    let (a2, b2, c2) = (g.tgt2(x), g.tgt2(y), g.tgt2(z));
                    let lhs = g.vcomp(g.hcomp(xy, z), g.assoc(a2, b2, c2));
                    let rhs = g.vcomp(g.assoc(a, b, c), g.hcomp(x, g.hcomp(y, z)));
                    if lhs != rhs {
                        return Err(viol("associator naturality", vec![x, y, z]));
                    }
                }
            }
        }
    }
    for f in 0..g.n1() {
        let (x, y) = (g.src1(f), g.tgt1(f));
        let ok = g
            .hom1(y, x)
            .iter()
            .any(|&h| !g.hom2(g.comp(f, h), g.id1(x)).is_empty() && !g.hom2(g.comp(h, f), g.id1(y)).is_empty());
        if !ok {
            return Err(viol("weak invertibility", vec![f]));
        }
    }
    Ok(g)
}

impl WeakTwoGroupoid {
    /// A strict 2-groupoid with identity associators.
    pub fn from_strict(g: &TwoGroupoid) -> Self {
        let assoc = composable_triples(g).into_iter().map(|(a, b, c)| ((a, b, c), g.assoc(a, b, c))).collect();
        check_weak_2groupoid(g.data().clone(), assoc).expect("strict 2-groupoids are weak 2-groupoids")
    }

    pub fn assoc_table(&self) -> &HashMap<(usize, usize, usize), usize> {
        &self.assoc
    }

    pub fn into_parts(self) -> (TwoCellData, HashMap<(usize, usize, usize), usize>) {
        (self.data, self.assoc)
    }

    /// Whether every associator is an identity.
    pub fn is_strict(&self) -> bool {
        self.assoc.values().all(|&p| p == self.id2(self.src2(p)))
    }

    /// The strict 2-groupoid on the same cells, if every associator is an identity.
    pub fn to_strict(&self) -> Result<TwoGroupoid> {
        if !self.is_strict() {
            return Err(Error::Malformed("associators are not identities".into()));
        }
        TwoGroupoid::new(self.data.clone())
    }
}

/// A weak 2-functor: a functor on each hom-groupoid together with
/// `ε_{a,b}: F(a)F(b) ⇒ F(ab)` for composable `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakFunctor {
    pub obj: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
    pub eps: BTreeMap<(usize, usize), usize>,
}

impl WeakFunctor {
    pub fn eps(&self, a: usize, b: usize) -> usize {
        self.eps[&(a, b)]
    }

    /// A strict functor with identity `ε`.
    pub fn from_strict(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &TwoFunctor) -> Self {
        let eps = dom.data().comp1.iter().map(|(&(a, b), &c)| ((a, b), cod.id2(f.one[c]))).collect();
        WeakFunctor { obj: f.obj.clone(), one: f.one.clone(), two: f.two.clone(), eps }
    }

    pub fn identity(g: &impl TwoCategory) -> Self {
        Self::from_strict(g, g, &TwoFunctor::identity(g))
    }

    /// The cell maps, forgetting `ε`.
    pub fn underlying(&self) -> TwoFunctor {
        TwoFunctor { obj: self.obj.clone(), one: self.one.clone(), two: self.two.clone() }
    }

    pub fn is_strict(&self, cod: &impl TwoCategory) -> bool {
        self.eps.values().all(|&e| e == cod.id2(cod.src2(e)))
    }

    /// Diagrammatic composite of weak functors between strict 2-groupoids.
    pub fn then(&self, cod: &impl TwoCategory, other: &WeakFunctor) -> WeakFunctor {
        let eps = self
            .eps
            .iter()
            .map(|(&(a, b), &e)| {
                let (fa, fb) = (self.one[a], self.one[b]);
                ((a, b), cod.vcomp(other.eps(fa, fb), other.two[e]))
            })
            .collect();
        WeakFunctor {
            obj: self.obj.iter().map(|&x| other.obj[x]).collect(),
            one: self.one.iter().map(|&x| other.one[x]).collect(),
            two: self.two.iter().map(|&x| other.two[x]).collect(),
            eps,
        }
    }
}

/// Checks the weak functor axioms: preservation of sources, targets,
/// identities and vertical composition; naturality of `ε`; the coherence
/// hexagon (a square when both sides are strict); `ε` trivial on identities.
pub fn check_weak_functor(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &WeakFunctor) -> Result<()> {
    if f.obj.len() != dom.n0() || f.one.len() != dom.n1() || f.two.len() != dom.n2() {
        return Err(Error::Malformed("functor tables have the wrong length".into()));
    }
    if f.obj.iter().any(|&x| x >= cod.n0())
        || f.one.iter().any(|&x| x >= cod.n1())
        || f.two.iter().any(|&x| x >= cod.n2())
    {
        return Err(Error::Malformed("functor value out of range".into()));
    }
    if f.eps.len() != dom.data().comp1.len() || f.eps.values().any(|&e| e >= cod.n2()) {
        return Err(Error::Malformed("ε must be given on exactly the composable pairs".into()));
    }
    for x in 0..dom.n1() {
        let y = f.one[x];
        if cod.src1(y) != f.obj[dom.src1(x)] || cod.tgt1(y) != f.obj[dom.tgt1(x)] {
            return Err(viol("1-cell source/target", vec![x]));
        }
        if f.two[dom.id2(x)] != cod.id2(y) {
            return Err(viol("identity 2-cell", vec![x]));
        }
    }
    for x in 0..dom.n0() {
        if f.one[dom.id1(x)] != cod.id1(f.obj[x]) {
            return Err(viol("identity 1-cell", vec![x]));
        }
    }
    for a in 0..dom.n2() {
        let b = f.two[a];
        if cod.src2(b) != f.one[dom.src2(a)] || cod.tgt2(b) != f.one[dom.tgt2(a)] {
            return Err(viol("2-cell source/target", vec![a]));
        }
    }
    for (&(a, b), &c) in &dom.data().vcomp {
        if cod.vcomp(f.two[a], f.two[b]) != f.two[c] {
            return Err(viol("vertical composition", vec![a, b]));
        }
    }
    for (&(a, b), &c) in &dom.data().comp1 {
        let Some(&e) = f.eps.get(&(a, b)) else {
            return Err(viol("ε defined", vec![a, b]));
        };
        if cod.src2(e) != cod.comp(f.one[a], f.one[b]) || cod.tgt2(e) != f.one[c] {
            return Err(viol("ε source/target", vec![a, b]));
        }
        if (dom.is_id1(a) || dom.is_id1(b)) && e != cod.id2(f.one[c]) {
            return Err(viol("ε on identities", vec![a, b]));
        }
    }
    for (&(x, y), &z) in &dom.data().hcomp {
        if !eps_natural(dom, cod, f, x, y, z) {
            return Err(viol("ε naturality", vec![x, y]));
        }
    }
    for (a, b, c) in composable_triples(dom) {
        if !eps_coherent(dom, cod, f, a, b, c) {
            return Err(viol("ε coherence", vec![a, b, c]));
        }
    }
    Ok(())
}

/// `[ε_{a,b}][F(x*y)] = [F(x)*F(y)][ε_{a',b'}]` for `x: a ⇒ a'`, `y: b ⇒ b'`.
fn eps_natural(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &WeakFunctor, x: usize, y: usize, xy: usize) -> bool {
    let (a, b, a2, b2) = (dom.src2(x), dom.src2(y), dom.tgt2(x), dom.tgt2(y));
    cod.vcomp(f.eps(a, b), f.two[xy]) == cod.vcomp(cod.hcomp(f.two[x], f.two[y]), f.eps(a2, b2))
}

/// `[ε_{a,b}F(c)][ε_{ab,c}][F(φ_{a,b,c})] = [φ_{Fa,Fb,Fc}][F(a)ε_{b,c}][ε_{a,bc}]`.
fn eps_coherent(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &WeakFunctor, a: usize, b: usize, c: usize) -> bool {
    let (ab, bc) = (dom.comp(a, b), dom.comp(b, c));
    let lhs = cod.vcomp(cod.vcomp(cod.whisker_r(f.eps(a, b), f.one[c]), f.eps(ab, c)), f.two[dom.assoc(a, b, c)]);
    let rhs = cod
        .vcomp(cod.vcomp(cod.assoc(f.one[a], f.one[b], f.one[c]), cod.whisker_l(f.one[a], f.eps(b, c))), f.eps(a, bc));
    lhs == rhs
}

/// All weak functors `dom → cod` (all strict 2-functors when `strict`).
/// With `pointed`, basepoints are preserved whenever both sides have one.
pub fn enumerate_weak_functors(
    dom: &impl TwoCategory,
    cod: &impl TwoCategory,
    strict: bool,
    pointed: bool,
    cap: usize,
) -> Result<Vec<WeakFunctor>> {
    let (n0, n1, n2) = (dom.n0(), dom.n1(), dom.n2());
    let pairs: Vec<(usize, usize)> = {
        let mut v: Vec<_> = dom.data().comp1.keys().copied().collect();
        v.sort_unstable();
        v
    };
    let pair_pos: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let (o1, o2, o3) = (n0, n0 + n1, n0 + n1 + n2);
    let total = o3 + pairs.len();
    let base = match (pointed, dom.basepoint(), cod.basepoint()) {
        (true, Some(a), Some(b)) => Some((a, b)),
        _ => None,
    };

    // constraints keyed by their last variable
    #[derive(Clone, Copy)]
    enum Con {
        Comp1(usize, usize, usize),
        Vcomp(usize, usize, usize),
        Hcomp(usize, usize, usize),
        Natural(usize, usize, usize),
        Coherent(usize, usize, usize),
    }
    let mut cons: Vec<Vec<Con>> = vec![Vec::new(); total];
    if strict {
        for (&(a, b), &c) in &dom.data().comp1 {
            cons[o1 + a.max(b).max(c)].push(Con::Comp1(a, b, c));
        }
        for (&(a, b), &c) in &dom.data().hcomp {
            cons[o2 + a.max(b).max(c)].push(Con::Hcomp(a, b, c));
        }
    }
    for (&(a, b), &c) in &dom.data().vcomp {
        cons[o2 + a.max(b).max(c)].push(Con::Vcomp(a, b, c));
    }
    for (&(x, y), &z) in &dom.data().hcomp {
        let p = pair_pos[&(dom.src2(x), dom.src2(y))].max(pair_pos[&(dom.tgt2(x), dom.tgt2(y))]);
        cons[o3 + p].push(Con::Natural(x, y, z));
    }
    for (a, b, c) in composable_triples(dom) {
        let (ab, bc) = (dom.comp(a, b), dom.comp(b, c));
        let p = [(a, b), (ab, c), (b, c), (a, bc)].iter().map(|k| pair_pos[k]).max().unwrap();
        cons[o3 + p].push(Con::Coherent(a, b, c));
    }
    for v in &mut cons {
        v.sort_by_key(|c| match *c {
            Con::Comp1(a, b, c) | Con::Vcomp(a, b, c) | Con::Hcomp(a, b, c) => (0, a, b, c),
            Con::Natural(a, b, c) => (1, a, b, c),
            Con::Coherent(a, b, c) => (2, a, b, c),
        });
    }
    let split = |a: &[usize]| -> WeakFunctor {
        let eps = pairs.iter().enumerate().filter(|&(i, _)| o3 + i < a.len()).map(|(i, &p)| (p, a[o3 + i])).collect();
        WeakFunctor {
            obj: a[..o1.min(a.len())].to_vec(),
            one: a[o1.min(a.len())..o2.min(a.len())].to_vec(),
            two: a[o2.min(a.len())..o3.min(a.len())].to_vec(),
            eps,
        }
    };
    let mut budget = Budget::new(cap);
    let mut out = Vec::new();
    backtrack(
        total,
        &mut budget,
        &mut |v, a| {
            if v < o1 {
                return match base {
                    Some((x, y)) if x == v => vec![y],
                    _ => (0..cod.n0()).collect(),
                };
            }
            if v < o2 {
                let f = v - o1;
                let (x, y) = (a[dom.src1(f)], a[dom.tgt1(f)]);
                if dom.is_id1(f) {
                    return vec![cod.id1(x)];
                }
                return cod.hom1(x, y).to_vec();
            }
            if v < o3 {
                let al = v - o2;
                let (f, g) = (a[o1 + dom.src2(al)], a[o1 + dom.tgt2(al)]);
                if dom.id2(dom.src2(al)) == al {
                    return if f == g { vec![cod.id2(f)] } else { vec![] };
                }
                return cod.hom2(f, g).to_vec();
            }
            let (x, y) = pairs[v - o3];
            let s = cod.comp(a[o1 + x], a[o1 + y]);
            let t = a[o1 + dom.comp(x, y)];
            if strict || dom.is_id1(x) || dom.is_id1(y) {
                return if s == t { vec![cod.id2(s)] } else { vec![] };
            }
            cod.hom2(s, t).to_vec()
        },
        &mut |v, a| {
            if cons[v].is_empty() {
                return true;
            }
            let part = split(a);
            cons[v].iter().all(|c| match *c {
                Con::Comp1(x, y, z) => cod.comp(part.one[x], part.one[y]) == part.one[z],
                Con::Vcomp(x, y, z) => cod.vcomp(part.two[x], part.two[y]) == part.two[z],
                Con::Hcomp(x, y, z) => cod.hcomp(part.two[x], part.two[y]) == part.two[z],
                Con::Natural(x, y, z) => eps_natural(dom, cod, &part, x, y, z),
                Con::Coherent(x, y, z) => eps_coherent(dom, cod, &part, x, y, z),
            })
        },
        &mut |a| {
            out.push(split(a));
            Ok(true)
        },
    )?;
    Ok(out)
}

/// The hom-2-groupoid of weak functors, weak transformations and
/// modifications between strict 2-groupoids.
pub fn hom_full(dom: &TwoGroupoid, cod: &TwoGroupoid, pointed: bool, cap: usize) -> Result<HomTwoGroupoid> {
    let fs = enumerate_weak_functors(dom, cod, false, pointed, cap)?;
    build_hom(dom, cod, fs, false, pointed, cap)
}

/// `π₀` of the full hom-2-groupoid, without materializing its cells:
/// weak functors up to the existence of a transformation.
/// Returns the class label of every functor in enumeration order.
pub fn pi0_hom(
    dom: &TwoGroupoid,
    cod: &TwoGroupoid,
    pointed: bool,
    cap: usize,
) -> Result<(Vec<WeakFunctor>, Vec<usize>)> {
    let fs = enumerate_weak_functors(dom, cod, false, pointed, cap)?;
    let mut budget = Budget::new(cap);
    let mut uf = UnionFind::new(fs.len());
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if uf.find(i) == uf.find(j) {
                continue;
            }
            if !transformations_upto(dom, cod, &fs[i], &fs[j], false, pointed, Some(1), &mut budget)?.is_empty() {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.labels();
    Ok((fs, labels))
}

/// A weak map of crossed modules `H → G`: `p1: H₁ → G₁`, `p2: H₂ → G₂`, and
/// `eps[x*|H₁| + y] = ε_{x,y} ∈ G₂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XmodWeakMap {
    pub p1: Vec<usize>,
    pub p2: Vec<usize>,
    pub eps: Vec<usize>,
}

impl XmodWeakMap {
    pub fn eps(&self, h: &CrossedModule, x: usize, y: usize) -> usize {
        self.eps[x * h.g1.order() + y]
    }
}

/// Transformation `(a, θ)` between weak maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XmodTransformation {
    pub a: usize,
    pub theta: Vec<usize>,
}

impl XmodTransformation {
    pub fn is_pointed(&self, g: &CrossedModule) -> bool {
        self.a == g.g1.identity()
    }
}

/// Modification `μ ∈ G₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XmodModification {
    pub mu: usize,
}

/// Which equivariance axiom the weak-map search imposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivariance {
    W5,
    W5Prime,
    Neither,
}

struct WCtx<'a> {
    h: &'a CrossedModule,
    g: &'a CrossedModule,
    n1: usize,
    n2: usize,
}

impl WCtx<'_> {
    fn p1(&self, a: &[usize], x: usize) -> usize {
        a[x]
    }
    fn p2(&self, a: &[usize], al: usize) -> usize {
        a[self.n1 + al]
    }
    fn e(&self, a: &[usize], x: usize, y: usize) -> usize {
        a[self.n1 + self.n2 + x * self.n1 + y]
    }
    fn ve(&self, x: usize, y: usize) -> usize {
        self.n1 + self.n2 + x * self.n1 + y
    }

    fn w1(&self, a: &[usize], al: usize) -> bool {
        self.p1(a, self.h.phi(al)) == self.g.phi(self.p2(a, al))
    }
    fn w2(&self, a: &[usize], al: usize, be: usize) -> bool {
        let (h2, g2) = (&self.h.g2, &self.g.g2);
        let rhs = g2.mul(g2.mul(self.p2(a, al), self.p2(a, be)), self.e(a, self.h.phi(al), self.h.phi(be)));
        self.p2(a, h2.mul(al, be)) == rhs
    }
    fn w3(&self, a: &[usize], x: usize, y: usize) -> bool {
        let g1 = &self.g.g1;
        let rhs = g1.mul(g1.mul(self.p1(a, x), self.p1(a, y)), self.g.phi(self.e(a, x, y)));
        self.p1(a, self.h.g1.mul(x, y)) == rhs
    }
    fn w4(&self, a: &[usize], x: usize, y: usize, z: usize) -> bool {
        let (h1, g2) = (&self.h.g1, &self.g.g2);
        let lhs = g2.mul(self.g.act(self.e(a, x, y), self.p1(a, z)), self.e(a, h1.mul(x, y), z));
        let rhs = g2.mul(self.e(a, y, z), self.e(a, x, h1.mul(y, z)));
        lhs == rhs
    }
    fn w5(&self, a: &[usize], x: usize, be: usize) -> bool {
        let (h1, g2) = (&self.h.g1, &self.g.g2);
        let xi = h1.inv(x);
        let ub = self.h.phi(be);
        let lhs = g2.mul(self.e(a, xi, x), self.p2(a, self.h.act(be, x)));
        let rhs =
            g2.mul(g2.mul(self.g.act(self.p2(a, be), self.p1(a, x)), self.e(a, ub, x)), self.e(a, xi, h1.mul(ub, x)));
        lhs == rhs
    }
    fn w5p(&self, a: &[usize], x: usize, y: usize, be: usize) -> bool {
        let (h1, g2) = (&self.h.g1, &self.g.g2);
        let ub = self.h.phi(be);
        let lhs =
            g2.mul(g2.mul(self.e(a, y, x), self.p2(a, self.h.act(be, x))), self.e(a, h1.mul(y, x), h1.conj(ub, x)));
        let rhs =
            g2.mul(g2.mul(self.g.act(self.p2(a, be), self.p1(a, x)), self.e(a, ub, x)), self.e(a, y, h1.mul(ub, x)));
        lhs == rhs
    }
}

fn flat_map(a: &[usize], n1: usize, n2: usize) -> XmodWeakMap {
    XmodWeakMap { p1: a[..n1].to_vec(), p2: a[n1..n1 + n2].to_vec(), eps: a[n1 + n2..].to_vec() }
}

fn map_flat(m: &XmodWeakMap) -> Vec<usize> {
    m.p1.iter().chain(&m.p2).chain(&m.eps).copied().collect()
}

/// Checks W1–W5 and the normalization `ε_{1,y} = ε_{x,1} = 1`.
pub fn check_xmod_weak_map(h: &CrossedModule, g: &CrossedModule, m: &XmodWeakMap) -> Result<()> {
    let (n1, n2) = (h.g1.order(), h.g2.order());
    if m.p1.len() != n1 || m.p2.len() != n2 || m.eps.len() != n1 * n1 {
        return Err(Error::Malformed("weak map tables have the wrong length".into()));
    }
    if m.p1.iter().any(|&x| x >= g.g1.order()) || m.p2.iter().chain(&m.eps).any(|&x| x >= g.g2.order()) {
        return Err(Error::Malformed("weak map value out of range".into()));
    }
    let a = map_flat(m);
    let c = WCtx { h, g, n1, n2 };
    let (e1, e2) = (h.g1.identity(), g.g2.identity());
    if m.p1[e1] != g.g1.identity() || m.p2[h.g2.identity()] != e2 {
        return Err(viol("pointed", vec![]));
    }
    for x in 0..n1 {
        if c.e(&a, x, e1) != e2 || c.e(&a, e1, x) != e2 {
            return Err(viol("normalization", vec![x]));
        }
    }
    for al in 0..n2 {
        if !c.w1(&a, al) {
            return Err(viol("W1", vec![al]));
        }
    }
    for al in 0..n2 {
        for be in 0..n2 {
            if !c.w2(&a, al, be) {
                return Err(viol("W2", vec![al, be]));
            }
        }
    }
    for x in 0..n1 {
        for y in 0..n1 {
            if !c.w3(&a, x, y) {
                return Err(viol("W3", vec![x, y]));
            }
            for z in 0..n1 {
                if !c.w4(&a, x, y, z) {
                    return Err(viol("W4", vec![x, y, z]));
                }
            }
        }
    }
    for x in 0..n1 {
        for be in 0..n2 {
            if !c.w5(&a, x, be) {
                return Err(viol("W5", vec![x, be]));
            }
        }
    }
    Ok(())
}

/// Weak maps `H → G`. The normalization of `ε` forces `p₁`, `p₂` to be
/// pointed, so `pointed_only` does not change the result; it only widens
/// the candidate domains.
pub fn enumerate_xmod_weak_maps(h: &CrossedModule, g: &CrossedModule, pointed_only: bool) -> Vec<XmodWeakMap> {
    enumerate_xmod_maps_with(h, g, pointed_only, Equivariance::W5, Budget::DEFAULT_CAP * 100)
        .expect("weak-map search within the default budget")
}

/// Search over `(p₁, p₂, ε)` under W1–W4, normalization, and the chosen equivariance axiom.
pub fn enumerate_xmod_maps_with(
    h: &CrossedModule,
    g: &CrossedModule,
    pointed_only: bool,
    equiv: Equivariance,
    cap: usize,
) -> Result<Vec<XmodWeakMap>> {
    let (n1, n2) = (h.g1.order(), h.g2.order());
    let c = WCtx { h, g, n1, n2 };
    let total = n1 + n2 + n1 * n1;
    #[derive(Clone, Copy)]
    enum Ax {
        W1(usize),
        W2(usize, usize),
        W3(usize, usize),
        W4(usize, usize, usize),
        W5(usize, usize),
        W5p(usize, usize, usize),
    }
    let mut cons: Vec<Vec<Ax>> = vec![Vec::new(); total];
    let h1 = &h.g1;
    for al in 0..n2 {
        cons[h.phi(al).max(n1 + al)].push(Ax::W1(al));
        for be in 0..n2 {
            let v = (n1 + h.g2.mul(al, be)).max(n1 + al).max(n1 + be).max(c.ve(h.phi(al), h.phi(be)));
            cons[v].push(Ax::W2(al, be));
        }
    }
    for x in 0..n1 {
        for y in 0..n1 {
            cons[h1.mul(x, y).max(x).max(y).max(c.ve(x, y))].push(Ax::W3(x, y));
            for z in 0..n1 {
                let v = [c.ve(x, y), c.ve(h1.mul(x, y), z), c.ve(y, z), c.ve(x, h1.mul(y, z)), z]
                    .into_iter()
                    .max()
                    .unwrap();
                cons[v].push(Ax::W4(x, y, z));
            }
        }
    }
    for x in 0..n1 {
        for be in 0..n2 {
            let ub = h.phi(be);
            match equiv {
                Equivariance::W5 => {
                    let xi = h1.inv(x);
                    let v = [c.ve(xi, x), n1 + h.act(be, x), n1 + be, x, c.ve(ub, x), c.ve(xi, h1.mul(ub, x))]
                        .into_iter()
                        .max()
                        .unwrap();
                    cons[v].push(Ax::W5(x, be));
                }
                Equivariance::W5Prime => {
                    for y in 0..n1 {
                        let v = [
                            c.ve(y, x),
                            n1 + h.act(be, x),
                            c.ve(h1.mul(y, x), h1.conj(ub, x)),
                            n1 + be,
                            x,
                            c.ve(ub, x),
                            c.ve(y, h1.mul(ub, x)),
                        ]
                        .into_iter()
                        .max()
                        .unwrap();
                        cons[v].push(Ax::W5p(x, y, be));
                    }
                }
                Equivariance::Neither => {}
            }
        }
    }
    let (e1, e2) = (h1.identity(), g.g2.identity());
    let mut out = Vec::new();
    backtrack(
        total,
        &mut Budget::new(cap),
        &mut |v, _| {
            if v < n1 {
                return if pointed_only && v == e1 { vec![g.g1.identity()] } else { g.g1.elements().collect() };
            }
            if v < n1 + n2 {
                return if pointed_only && v - n1 == h.g2.identity() { vec![e2] } else { g.g2.elements().collect() };
            }
            let k = v - n1 - n2;
            if k / n1 == e1 || k % n1 == e1 {
                vec![e2]
            } else {
                g.g2.elements().collect()
            }
        },
        &mut |v, a| {
            cons[v].iter().all(|ax| match *ax {
                Ax::W1(al) => c.w1(a, al),
                Ax::W2(al, be) => c.w2(a, al, be),
                Ax::W3(x, y) => c.w3(a, x, y),
                Ax::W4(x, y, z) => c.w4(a, x, y, z),
                Ax::W5(x, be) => c.w5(a, x, be),
                Ax::W5p(x, y, be) => c.w5p(a, x, y, be),
            })
        },
        &mut |a| {
            out.push(flat_map(a, n1, n2));
            Ok(true)
        },
    )?;
    Ok(out)
}

/// Over every candidate satisfying W1–W4, W5 holds exactly when W5′ does.
pub fn check_w5_equivalence(h: &CrossedModule, g: &CrossedModule) -> bool {
    let cands = enumerate_xmod_maps_with(h, g, true, Equivariance::Neither, Budget::DEFAULT_CAP * 100)
        .expect("candidate search within budget");
    let (n1, n2) = (h.g1.order(), h.g2.order());
    let c = WCtx { h, g, n1, n2 };
    cands.iter().all(|m| {
        let a = map_flat(m);
        let w5 = (0..n1).all(|x| (0..n2).all(|be| c.w5(&a, x, be)));
        let w5p = (0..n1).all(|x| (0..n1).all(|y| (0..n2).all(|be| c.w5p(&a, x, y, be))));
        w5 == w5p
    })
}

/// Checks T0–T2 for `(a, θ): P ⇒ Q`.
pub fn check_xmod_transformation(
    h: &CrossedModule,
    g: &CrossedModule,
    p: &XmodWeakMap,
    q: &XmodWeakMap,
    t: &XmodTransformation,
) -> Result<()> {
    let (n1, n2) = (h.g1.order(), h.g2.order());
    if t.theta.len() != n1 || t.a >= g.g1.order() || t.theta.iter().any(|&v| v >= g.g2.order()) {
        return Err(Error::Malformed("transformation tables out of range".into()));
    }
    for x in 0..n1 {
        if !t1(g, p, q, t.a, &t.theta, x) {
            return Err(viol("T1", vec![x]));
        }
        for y in 0..n1 {
            if !t0(h, g, p, q, t.a, &t.theta, x, y) {
                return Err(viol("T0", vec![x, y]));
            }
        }
    }
    for al in 0..n2 {
        if !t2(h, g, p, q, t.a, &t.theta, al) {
            return Err(viol("T2", vec![al]));
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn t0(
    h: &CrossedModule,
    g: &CrossedModule,
    p: &XmodWeakMap,
    q: &XmodWeakMap,
    a: usize,
    th: &[usize],
    x: usize,
    y: usize,
) -> bool {
    let (g1, g2) = (&g.g1, &g.g2);
    let xy = h.g1.mul(x, y);
    let lhs = g2.mul(g.act(p.eps(h, x, y), a), th[xy]);
    let rhs = g2.mul(g2.mul(g.act(th[x], g1.conj(p.p1[y], a)), th[y]), q.eps(h, x, y));
    lhs == rhs
}

fn t1(g: &CrossedModule, p: &XmodWeakMap, q: &XmodWeakMap, a: usize, th: &[usize], x: usize) -> bool {
    g.g1.mul(g.g1.conj(p.p1[x], a), g.phi(th[x])) == q.p1[x]
}

fn t2(
    h: &CrossedModule,
    g: &CrossedModule,
    p: &XmodWeakMap,
    q: &XmodWeakMap,
    a: usize,
    th: &[usize],
    al: usize,
) -> bool {
    g.g2.mul(g.act(p.p2[al], a), th[h.phi(al)]) == q.p2[al]
}

/// Transformations `P ⇒ Q`; with `pointed_only`, only `a = 1`.
pub fn enumerate_xmod_transformations(
    h: &CrossedModule,
    g: &CrossedModule,
    p: &XmodWeakMap,
    q: &XmodWeakMap,
    pointed_only: bool,
) -> Vec<XmodTransformation> {
    xmod_transformations_upto(h, g, p, q, pointed_only, None)
}

fn xmod_transformations_upto(
    h: &CrossedModule,
    g: &CrossedModule,
    p: &XmodWeakMap,
    q: &XmodWeakMap,
    pointed_only: bool,
    limit: Option<usize>,
) -> Vec<XmodTransformation> {
    let n1 = h.g1.order();
    let mut t0s: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n1];
    for x in 0..n1 {
        for y in 0..n1 {
            t0s[x.max(y).max(h.g1.mul(x, y))].push((x, y));
        }
    }
    let mut t2s: Vec<Vec<usize>> = vec![Vec::new(); n1];
    for al in h.g2.elements() {
        t2s[h.phi(al)].push(al);
    }
    let actors: Vec<usize> = if pointed_only { vec![g.g1.identity()] } else { g.g1.elements().collect() };
    let mut out = Vec::new();
    for a in actors {
        backtrack(
            n1,
            &mut Budget::new(usize::MAX),
            &mut |_, _| g.g2.elements().collect(),
            &mut |v, th| {
                t1(g, p, q, a, th, v)
                    && t2s[v].iter().all(|&al| t2(h, g, p, q, a, th, al))
                    && t0s[v].iter().all(|&(x, y)| t0(h, g, p, q, a, th, x, y))
            },
            &mut |th| {
                out.push(XmodTransformation { a, theta: th.to_vec() });
                Ok(limit.is_none_or(|l| out.len() < l))
            },
        )
        .expect("unbounded budget");
        if limit.is_some_and(|l| out.len() >= l) {
            break;
        }
    }
    out
}

/// Checks M1 and M2 for `μ: (a, θ) ⇛ (b, σ)` where the transformations go to `Q`.
pub fn check_xmod_modification(
    g: &CrossedModule,
    q: &XmodWeakMap,
    t: &XmodTransformation,
    s: &XmodTransformation,
    mu: usize,
) -> bool {
    let (g1, g2) = (&g.g1, &g.g2);
    g1.mul(t.a, g.phi(mu)) == s.a
        && (0..t.theta.len()).all(|x| g2.mul(mu, s.theta[x]) == g2.mul(t.theta[x], g.act(mu, q.p1[x])))
}

/// Modifications between two transformations into `Q`; with `pointed_only`, only `μ = 1`.
pub fn enumerate_xmod_modifications(
    g: &CrossedModule,
    q: &XmodWeakMap,
    t: &XmodTransformation,
    s: &XmodTransformation,
    pointed_only: bool,
) -> Vec<XmodModification> {
    g.g2.elements()
        .filter(|&mu| !pointed_only || mu == g.g2.identity())
        .filter(|&mu| check_xmod_modification(g, q, t, s, mu))
        .map(|mu| XmodModification { mu })
        .collect()
}

/// Classes of weak maps under existence of a transformation.
pub fn xmod_homotopy_classes(h: &CrossedModule, g: &CrossedModule, pointed: bool) -> (Vec<XmodWeakMap>, Vec<usize>) {
    let maps = enumerate_xmod_weak_maps(h, g, true);
    let mut uf = UnionFind::new(maps.len());
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            if uf.find(i) != uf.find(j)
                && !xmod_transformations_upto(h, g, &maps[i], &maps[j], pointed, Some(1)).is_empty()
            {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.labels();
    (maps, labels)
}

/// The weak functor of 2-groups `BH → BG` corresponding to a weak map.
/// Cell indices are those of [`crate::twogpd::xmod_to_2group`].
pub fn xmod_map_to_functor(h: &CrossedModule, g: &CrossedModule, m: &XmodWeakMap) -> WeakFunctor {
    let (hn1, hn2, gn2) = (h.g1.order(), h.g2.order(), g.g2.order());
    let two = (0..hn1 * hn2)
        .map(|c| {
            let (x, al) = (c / hn2, c % hn2);
            m.p1[x] * gn2 + g.g2.mul(m.p2[al], m.eps(h, x, h.phi(al)))
        })
        .collect();
    let mut eps = BTreeMap::new();
    for x in 0..hn1 {
        for y in 0..hn1 {
            eps.insert((x, y), g.g1.mul(m.p1[x], m.p1[y]) * gn2 + m.eps(h, x, y));
        }
    }
    WeakFunctor { obj: vec![0], one: m.p1.clone(), two, eps }
}

/// Inverse of [`xmod_map_to_functor`].
pub fn functor_to_xmod_map(h: &CrossedModule, g: &CrossedModule, f: &WeakFunctor) -> XmodWeakMap {
    let (hn1, hn2, gn2) = (h.g1.order(), h.g2.order(), g.g2.order());
    let e = h.g1.identity();
    XmodWeakMap {
        p1: f.one.clone(),
        p2: (0..hn2).map(|al| f.two[e * hn2 + al] % gn2).collect(),
        eps: (0..hn1 * hn1).map(|k| f.eps(k / hn1, k % hn1) % gn2).collect(),
    }
}

/// The transformation of 2-group functors corresponding to `(a, θ): P ⇒ Q`.
pub fn xmod_transformation_to_2cells(g: &CrossedModule, p: &XmodWeakMap, t: &XmodTransformation) -> Transformation {
    let gn2 = g.g2.order();
    Transformation {
        t: vec![t.a],
        theta: p.p1.iter().zip(&t.theta).map(|(&px, &th)| g.g1.mul(px, t.a) * gn2 + th).collect(),
    }
}

/// Inverse of [`xmod_transformation_to_2cells`].
pub fn transformation_to_xmod(g: &CrossedModule, t: &Transformation) -> XmodTransformation {
    let gn2 = g.g2.order();
    XmodTransformation { a: t.t[0], theta: t.theta.iter().map(|&c| c % gn2).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::{FiniteGroup, GroupAction};
    use crate::twogpd::hom::{check_transformation, enumerate_transformations};
    use crate::twogpd::xmod_to_2group;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }
    fn one_to(n: usize) -> CrossedModule {
        CrossedModule::from_group(&z(n))
    }
    fn to_one(n: usize) -> CrossedModule {
        CrossedModule::from_abelian(&z(n)).unwrap()
    }

    #[test]
    fn weak_map_counts() {
        assert_eq!(enumerate_xmod_weak_maps(&one_to(2), &to_one(2), true).len(), 2);
        assert_eq!(enumerate_xmod_weak_maps(&one_to(3), &to_one(3), true).len(), 9);
        let triv = one_to(1);
        assert_eq!(enumerate_xmod_weak_maps(&triv, &triv, true).len(), 1);
        assert_eq!(enumerate_xmod_weak_maps(&one_to(2), &to_one(2), false).len(), 2);
    }

    #[test]
    fn w5_forms_agree() {
        assert!(check_w5_equivalence(&one_to(2), &to_one(2)));
        assert!(check_w5_equivalence(&one_to(3), &to_one(3)));
        assert!(check_w5_equivalence(&one_to(1), &to_one(2)));
    }

    #[test]
    fn self_transformations_of_cocycles() {
        let (h, g) = (one_to(2), to_one(2));
        let maps = enumerate_xmod_weak_maps(&h, &g, true);
        for p in &maps {
            let ts = enumerate_xmod_transformations(&h, &g, p, p, true);
            assert_eq!(ts.len(), 2);
            assert!(ts.contains(&XmodTransformation { a: 0, theta: vec![0; 2] }));
        }
        assert!(enumerate_xmod_transformations(&h, &g, &maps[0], &maps[1], false).is_empty());
    }

    #[test]
    fn dictionary_is_a_bijection_onto_weak_functors() {
        let pairs = [(one_to(2), to_one(2)), (one_to(3), to_one(3)), (to_one(2), one_to(2))];
        for (h, g) in pairs {
            let (bh, bg) = (xmod_to_2group(&h), xmod_to_2group(&g));
            let maps = enumerate_xmod_weak_maps(&h, &g, true);
            let funs = enumerate_weak_functors(&bh, &bg, false, true, 1 << 24).unwrap();
            assert_eq!(maps.len(), funs.len());
            for m in &maps {
                let f = xmod_map_to_functor(&h, &g, m);
                check_weak_functor(&bh, &bg, &f).unwrap();
                assert!(funs.contains(&f));
                assert_eq!(&functor_to_xmod_map(&h, &g, &f), m);
            }
        }
    }

    #[test]
    fn transformations_match_the_dictionary() {
        let z4 = z(4);
        let h = one_to(2);
        let g = CrossedModule::new(z4.clone(), z(2), vec![0, 1, 0, 1], GroupAction::trivial(&z(2), &z4)).unwrap();
        let (bh, bg) = (xmod_to_2group(&h), xmod_to_2group(&g));
        let maps = enumerate_xmod_weak_maps(&h, &g, true);
        assert!(!maps.is_empty());
        for p in &maps {
            for q in &maps {
                let (fp, fq) = (xmod_map_to_functor(&h, &g, p), xmod_map_to_functor(&h, &g, q));
                let xs = enumerate_xmod_transformations(&h, &g, p, q, false);
                let ts = enumerate_transformations(&bh, &bg, &fp, &fq, false, false, &mut Budget::default()).unwrap();
                assert_eq!(xs.len(), ts.len());
                for x in &xs {
                    let t = xmod_transformation_to_2cells(&g, p, x);
                    check_transformation(&bh, &bg, &fp, &fq, &t).unwrap();
                    assert_eq!(&transformation_to_xmod(&g, &t), x);
                }
            }
        }
    }

    #[test]
    fn strict_functor_counts() {
        let b = xmod_to_2group(&one_to(2));
        assert_eq!(crate::twogpd::enumerate_2functors(&b, &b, false, 1 << 20).unwrap().len(), 2);
        let c = xmod_to_2group(&to_one(2));
        assert_eq!(crate::twogpd::enumerate_2functors(&b, &c, true, 1 << 20).unwrap().len(), 1);
        let p = TwoGroupoid::point();
        let i = TwoGroupoid::interval();
        assert_eq!(crate::twogpd::enumerate_2functors(&p, &i, false, 1 << 20).unwrap().len(), 2);
    }

    #[test]
    fn perturbed_associator_breaks_pentagon() {
        let g =
            xmod_to_2group(&CrossedModule::new(z(3), z(3), vec![0; 3], GroupAction::trivial(&z(3), &z(3))).unwrap());
        let base = WeakTwoGroupoid::from_strict(&g);
        let (data, assoc) = base.into_parts();
        let mut found = false;
        for (&k, &v) in &assoc {
            if !data.src1.is_empty() && [k.0, k.1, k.2].iter().any(|&f| data.id1.contains(&f)) {
                continue;
            }
            for alt in 0..data.src2.len() {
                if alt == v || data.src2[alt] != data.src2[v] || data.tgt2[alt] != data.tgt2[v] {
                    continue;
                }
                let mut a2 = assoc.clone();
                a2.insert(k, alt);
                if let Err(Error::Violation { axiom: "A1", witness }) = check_weak_2groupoid(data.clone(), a2) {
                    assert_eq!(witness.len(), 4);
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn flipped_eps_breaks_coherence() {
        let (h, g) = (one_to(3), to_one(3));
        let (bh, bg) = (xmod_to_2group(&h), xmod_to_2group(&g));
        let m = enumerate_xmod_weak_maps(&h, &g, true).into_iter().find(|m| m.eps.iter().any(|&e| e != 0)).unwrap();
        let mut f = xmod_map_to_functor(&h, &g, &m);
        check_weak_functor(&bh, &bg, &f).unwrap();
        // ε_{1,2} is a 2-cell on the identity 1-cell; move it to another one
        let e = f.eps[&(1, 2)];
        f.eps.insert((1, 2), e - e % 3 + (e + 1) % 3);
        assert!(matches!(check_weak_functor(&bh, &bg, &f), Err(Error::Violation { axiom: "ε coherence", .. })));
    }

    #[test]
    fn pi0_hom_matches_gcd() {
        for (n, m, want) in [(2, 2, 2), (2, 3, 1), (3, 3, 3)] {
            let (bh, bg) = (xmod_to_2group(&one_to(n)), xmod_to_2group(&to_one(m)));
            let (_, labels) = pi0_hom(&bh, &bg, true, 1 << 24).unwrap();
            assert_eq!(labels.iter().max().unwrap() + 1, want);
            let (_, l2) = xmod_homotopy_classes(&one_to(n), &to_one(m), true);
            assert_eq!(l2, labels);
        }
    }
}
