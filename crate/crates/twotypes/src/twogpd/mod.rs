//! Strict 2-groupoids as finite tables, 2-groups and crossed modules,
//! homotopy invariants, fibrations and equivalences.
//!
//! Composition is written diagrammatically: `comp(f, g)` is "f then g",
//! defined when `tgt(f) = src(g)`. Vertical composition `vcomp(α, β)` is
//! `[α][β]`, defined when `tgt(α) = src(β)`.

pub mod hom;

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::fingroup::{make_action, semidirect, FiniteGroup};
use crate::xmod::{check_crossed_module, CrossedModule, XmodMorphism};

/// Raw cell tables shared by strict and weak 2-groupoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCellData {
    pub objects: usize,
    pub src1: Vec<usize>,
    pub tgt1: Vec<usize>,
    /// Identity 1-cell of each object.
    pub id1: Vec<usize>,
    pub comp1: HashMap<(usize, usize), usize>,
    pub src2: Vec<usize>,
    pub tgt2: Vec<usize>,
    /// Identity 2-cell of each 1-cell.
    pub id2: Vec<usize>,
    pub vcomp: HashMap<(usize, usize), usize>,
    pub hcomp: HashMap<(usize, usize), usize>,
    pub basepoint: Option<usize>,
}

/// Lookup tables derived from [`TwoCellData`] at validation time.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellIndex {
    pub hom1: BTreeMap<(usize, usize), Vec<usize>>,
    pub hom2: BTreeMap<(usize, usize), Vec<usize>>,
    pub out2: Vec<Vec<usize>>,
    pub vinv: Vec<usize>,
    pub is_id1: Vec<bool>,
}

/// Read access shared by [`TwoGroupoid`] and weak 2-groupoids.
pub trait TwoCategory {
    fn data(&self) -> &TwoCellData;
    fn index(&self) -> &CellIndex;
    /// The associator `(ab)c ⇒ a(bc)`.
    fn assoc(&self, a: usize, b: usize, c: usize) -> usize;

    fn n0(&self) -> usize {
        self.data().objects
    }
    fn n1(&self) -> usize {
        self.data().src1.len()
    }
    fn n2(&self) -> usize {
        self.data().src2.len()
    }
    fn src1(&self, f: usize) -> usize {
        self.data().src1[f]
    }
    fn tgt1(&self, f: usize) -> usize {
        self.data().tgt1[f]
    }
    fn src2(&self, a: usize) -> usize {
        self.data().src2[a]
    }
    fn tgt2(&self, a: usize) -> usize {
        self.data().tgt2[a]
    }
    fn id1(&self, x: usize) -> usize {
        self.data().id1[x]
    }
    fn id2(&self, f: usize) -> usize {
        self.data().id2[f]
    }
    fn is_id1(&self, f: usize) -> bool {
        self.index().is_id1[f]
    }
    fn comp(&self, f: usize, g: usize) -> usize {
        self.data().comp1[&(f, g)]
    }
    fn vcomp(&self, a: usize, b: usize) -> usize {
        self.data().vcomp[&(a, b)]
    }
    fn hcomp(&self, a: usize, b: usize) -> usize {
        self.data().hcomp[&(a, b)]
    }
    fn vinv(&self, a: usize) -> usize {
        self.index().vinv[a]
    }
    /// `fα`.
    fn whisker_l(&self, f: usize, a: usize) -> usize {
        self.hcomp(self.id2(f), a)
    }
    /// `αf`.
    fn whisker_r(&self, a: usize, f: usize) -> usize {
        self.hcomp(a, self.id2(f))
    }
    fn hom1(&self, x: usize, y: usize) -> &[usize] {
        self.index().hom1.get(&(x, y)).map(|v| v.as_slice()).unwrap_or(&[])
    }
    fn hom2(&self, f: usize, g: usize) -> &[usize] {
        self.index().hom2.get(&(f, g)).map(|v| v.as_slice()).unwrap_or(&[])
    }
    fn out2(&self, f: usize) -> &[usize] {
        &self.index().out2[f]
    }
    fn basepoint(&self) -> Option<usize> {
        self.data().basepoint
    }
}

/// A strict 2-groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGroupoid {
    data: TwoCellData,
    index: CellIndex,
    inv1: Vec<usize>,
}

impl TwoCategory for TwoGroupoid {
    fn data(&self) -> &TwoCellData {
        &self.data
    }
    fn index(&self) -> &CellIndex {
        &self.index
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> usize {
        self.id2(self.comp(self.comp(a, b), c))
    }
}

fn viol(axiom: &'static str, witness: Vec<usize>) -> Error {
    Error::violation(axiom, witness)
}

/// Checks everything a (weak) 2-groupoid with strict units must satisfy
/// besides associativity of 1-cells, and builds the lookup index.
pub(crate) fn validate_common(d: &TwoCellData) -> Result<CellIndex> {
    let (n0, n1, n2) = (d.objects, d.src1.len(), d.src2.len());
    if d.tgt1.len() != n1 || d.tgt2.len() != n2 || d.id1.len() != n0 || d.id2.len() != n1 {
        return Err(Error::Malformed("table lengths disagree".into()));
    }
    if d.src1.iter().chain(&d.tgt1).any(|&x| x >= n0)
        || d.src2.iter().chain(&d.tgt2).any(|&f| f >= n1)
        || d.id1.iter().any(|&f| f >= n1)
        || d.id2.iter().any(|&a| a >= n2)
        || d.basepoint.is_some_and(|b| b >= n0)
    {
        return Err(Error::Malformed("index out of range".into()));
    }
    let mut idx = CellIndex { out2: vec![Vec::new(); n1], is_id1: vec![false; n1], ..Default::default() };
    for f in 0..n1 {
        idx.hom1.entry((d.src1[f], d.tgt1[f])).or_default().push(f);
    }
    for a in 0..n2 {
        let (f, g) = (d.src2[a], d.tgt2[a]);
        if d.src1[f] != d.src1[g] || d.tgt1[f] != d.tgt1[g] {
            return Err(viol("2-cell between non-parallel 1-cells", vec![a]));
        }
        idx.hom2.entry((f, g)).or_default().push(a);
        idx.out2[f].push(a);
    }
    for x in 0..n0 {
        let e = d.id1[x];
        if d.src1[e] != x || d.tgt1[e] != x {
            return Err(viol("identity 1-cell", vec![x]));
        }
        idx.is_id1[e] = true;
    }
    for f in 0..n1 {
        let a = d.id2[f];
        if d.src2[a] != f || d.tgt2[a] != f {
            return Err(viol("identity 2-cell", vec![f]));
        }
    }
    // composition tables are defined exactly on composable pairs
    let mut composable1 = 0;
    for f in 0..n1 {
        for g in idx_from(&idx, d.tgt1[f]) {
            composable1 += 1;
            let h = *d.comp1.get(&(f, g)).ok_or_else(|| viol("composition defined", vec![f, g]))?;
            if h >= n1 || d.src1[h] != d.src1[f] || d.tgt1[h] != d.tgt1[g] {
                return Err(viol("composition source/target", vec![f, g]));
            }
        }
    }
    if composable1 != d.comp1.len() {
        return Err(Error::Malformed("composition defined on non-composable pairs".into()));
    }
    let mut composable_v = 0;
    for a in 0..n2 {
        for &b in &idx.out2[d.tgt2[a]] {
            composable_v += 1;
            let c = *d.vcomp.get(&(a, b)).ok_or_else(|| viol("vertical composition defined", vec![a, b]))?;
            if c >= n2 || d.src2[c] != d.src2[a] || d.tgt2[c] != d.tgt2[b] {
                return Err(viol("vertical composition source/target", vec![a, b]));
            }
        }
    }
    if composable_v != d.vcomp.len() {
        return Err(Error::Malformed("vertical composition on non-composable pairs".into()));
    }
    let mut composable_h = 0;
    for a in 0..n2 {
        let f = d.src2[a];
        for g in idx_from(&idx, d.tgt1[f]) {
            for &b in &idx.out2[g] {
                composable_h += 1;
                let c = *d.hcomp.get(&(a, b)).ok_or_else(|| viol("horizontal composition defined", vec![a, b]))?;
                let s = d.comp1[&(f, g)];
                let t = d.comp1[&(d.tgt2[a], d.tgt2[b])];
                if c >= n2 || d.src2[c] != s || d.tgt2[c] != t {
                    return Err(viol("horizontal composition source/target", vec![a, b]));
                }
            }
        }
    }
    if composable_h != d.hcomp.len() {
        return Err(Error::Malformed("horizontal composition on non-composable pairs".into()));
    }
    // units
    for f in 0..n1 {
        let (s, t) = (d.id1[d.src1[f]], d.id1[d.tgt1[f]]);
        if d.comp1[&(s, f)] != f || d.comp1[&(f, t)] != f {
            return Err(viol("unit law for 1-cells", vec![f]));
        }
    }
    for a in 0..n2 {
        let (f, g) = (d.src2[a], d.tgt2[a]);
        if d.vcomp[&(d.id2[f], a)] != a || d.vcomp[&(a, d.id2[g])] != a {
            return Err(viol("unit law for vertical composition", vec![a]));
        }
        let (s, t) = (d.id2[d.id1[d.src1[f]]], d.id2[d.id1[d.tgt1[f]]]);
        if d.hcomp[&(s, a)] != a || d.hcomp[&(a, t)] != a {
            return Err(viol("unit law for horizontal composition", vec![a]));
        }
    }
    // vertical associativity and inverses
    for a in 0..n2 {
        for &b in &idx.out2[d.tgt2[a]] {
            let ab = d.vcomp[&(a, b)];
            for &c in &idx.out2[d.tgt2[b]] {
                if d.vcomp[&(ab, c)] != d.vcomp[&(a, d.vcomp[&(b, c)])] {
                    return Err(viol("vertical associativity", vec![a, b, c]));
                }
            }
        }
    }
    idx.vinv = vec![0; n2];
    for a in 0..n2 {
        let (f, g) = (d.src2[a], d.tgt2[a]);
        idx.vinv[a] = *idx
            .hom2
            .get(&(g, f))
            .and_then(|v| v.iter().find(|&&b| d.vcomp[&(a, b)] == d.id2[f] && d.vcomp[&(b, a)] == d.id2[g]))
            .ok_or_else(|| viol("2-cell invertibility", vec![a]))?;
    }
    // horizontal composition of identities, and interchange
    for f in 0..n1 {
        for g in idx_from(&idx, d.tgt1[f]) {
            if d.hcomp[&(d.id2[f], d.id2[g])] != d.id2[d.comp1[&(f, g)]] {
                return Err(viol("horizontal composite of identities", vec![f, g]));
            }
            for &a in &idx.out2[f] {
                for &a2 in &idx.out2[d.tgt2[a]] {
                    let va = d.vcomp[&(a, a2)];
                    for &b in &idx.out2[g] {
                        let hab = d.hcomp[&(a, b)];
                        for &b2 in &idx.out2[d.tgt2[b]] {
                            let lhs = d.hcomp[&(va, d.vcomp[&(b, b2)])];
                            let rhs = d.vcomp[&(hab, d.hcomp[&(a2, b2)])];
                            if lhs != rhs {
                                return Err(viol("interchange", vec![a, a2, b, b2]));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(idx)
}

fn idx_from(idx: &CellIndex, x: usize) -> Vec<usize> {
    idx.hom1.range((x, 0)..(x + 1, 0)).flat_map(|(_, v)| v.iter().copied()).collect()
}

impl TwoGroupoid {
    /// Validates all strict 2-groupoid axioms: strict category laws at both
    /// levels, interchange, and strict invertibility of every cell.
    pub fn new(data: TwoCellData) -> Result<Self> {
        let index = validate_common(&data)?;
        let d = &data;
        let n1 = d.src1.len();
        for f in 0..n1 {
            for g in idx_from(&index, d.tgt1[f]) {
                let fg = d.comp1[&(f, g)];
                for h in idx_from(&index, d.tgt1[g]) {
                    if d.comp1[&(fg, h)] != d.comp1[&(f, d.comp1[&(g, h)])] {
                        return Err(viol("associativity of 1-cells", vec![f, g, h]));
                    }
                }
            }
        }
        for f in 0..n1 {
            for g in idx_from(&index, d.tgt1[f]) {
                for h in idx_from(&index, d.tgt1[g]) {
                    for &a in &index.out2[f] {
                        for &b in &index.out2[g] {
                            let ab = d.hcomp[&(a, b)];
                            for &c in &index.out2[h] {
                                if d.hcomp[&(ab, c)] != d.hcomp[&(a, d.hcomp[&(b, c)])] {
                                    return Err(viol("associativity of 2-cells", vec![a, b, c]));
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut inv1 = vec![0; n1];
        for f in 0..n1 {
            let (x, y) = (d.src1[f], d.tgt1[f]);
            inv1[f] = *index
                .hom1
                .get(&(y, x))
                .and_then(|v| v.iter().find(|&&g| d.comp1[&(f, g)] == d.id1[x] && d.comp1[&(g, f)] == d.id1[y]))
                .ok_or_else(|| viol("1-cell invertibility", vec![f]))?;
        }
        Ok(TwoGroupoid { data, index, inv1 })
    }

    pub fn inv1(&self, f: usize) -> usize {
        self.inv1[f]
    }

    pub fn into_data(self) -> TwoCellData {
        self.data
    }

    pub fn with_basepoint(&self, base: Option<usize>) -> Self {
        let mut g = self.clone();
        g.data.basepoint = base;
        g
    }

    /// The terminal 2-groupoid.
    pub fn point() -> Self {
        Self::codiscrete(1)
    }

    /// A 1-groupoid (identity 2-cells only) from 1-cell data.
    pub fn from_1groupoid(
        objects: usize,
        src1: Vec<usize>,
        tgt1: Vec<usize>,
        comp1: HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let n1 = src1.len();
        let id1 = (0..objects)
            .map(|x| {
                (0..n1)
                    .find(|&e| {
                        src1[e] == x
                            && tgt1[e] == x
                            && (0..n1).all(|f| {
                                (src1[f] != x || comp1.get(&(e, f)) == Some(&f))
                                    && (tgt1[f] != x || comp1.get(&(f, e)) == Some(&f))
                            })
                    })
                    .ok_or_else(|| viol("identity 1-cell", vec![x]))
            })
            .collect::<Result<Vec<_>>>()?;
        let vcomp = (0..n1).map(|f| ((f, f), f)).collect();
        let hcomp = comp1.clone();
        Self::new(TwoCellData {
            objects,
            src1: src1.clone(),
            tgt1,
            id1,
            comp1,
            src2: (0..n1).collect(),
            tgt2: (0..n1).collect(),
            id2: (0..n1).collect(),
            vcomp,
            hcomp,
            basepoint: None,
        })
    }

    /// The groupoid with `n` objects and exactly one 1-cell between any two.
    /// The 1-cell `x → y` has index `x*n + y`.
    pub fn codiscrete(n: usize) -> Self {
        let src1 = (0..n * n).map(|f| f / n).collect();
        let tgt1 = (0..n * n).map(|f| f % n).collect();
        let mut comp1 = HashMap::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    comp1.insert((x * n + y, y * n + z), x * n + z);
                }
            }
        }
        Self::from_1groupoid(n, src1, tgt1, comp1).expect("codiscrete groupoid")
    }

    /// Two objects joined by an isomorphism.
    pub fn interval() -> Self {
        Self::codiscrete(2)
    }

    pub fn disjoint_union(&self, other: &TwoGroupoid) -> Self {
        let (a, b) = (&self.data, &other.data);
        let (o0, o1, o2) = (a.objects, a.src1.len(), a.src2.len());
        let shift = |m: &HashMap<(usize, usize), usize>, k: usize| -> Vec<((usize, usize), usize)> {
            m.iter().map(|(&(x, y), &z)| ((x + k, y + k), z + k)).collect()
        };
        let mut d = a.clone();
        d.objects += b.objects;
        d.src1.extend(b.src1.iter().map(|x| x + o0));
        d.tgt1.extend(b.tgt1.iter().map(|x| x + o0));
        d.id1.extend(b.id1.iter().map(|f| f + o1));
        d.comp1.extend(shift(&b.comp1, o1));
        d.src2.extend(b.src2.iter().map(|f| f + o1));
        d.tgt2.extend(b.tgt2.iter().map(|f| f + o1));
        d.id2.extend(b.id2.iter().map(|x| x + o2));
        d.vcomp.extend(shift(&b.vcomp, o2));
        d.hcomp.extend(shift(&b.hcomp, o2));
        Self::new(d).expect("disjoint union of 2-groupoids")
    }

    /// Cartesian product; cells `(x, y)` have index `x*|other| + y` at each level.
    pub fn product(&self, other: &TwoGroupoid) -> Self {
        let (a, b) = (&self.data, &other.data);
        let (m0, m1, m2) = (b.objects, b.src1.len(), b.src2.len());
        let pair = |m: &HashMap<(usize, usize), usize>, n: &HashMap<(usize, usize), usize>, k: usize| {
            let mut out = HashMap::new();
            for (&(x, y), &z) in m {
                for (&(u, v), &w) in n {
                    out.insert((x * k + u, y * k + v), z * k + w);
                }
            }
            out
        };
        let lift = |va: &[usize], vb: &[usize], k: usize| -> Vec<usize> {
            va.iter().flat_map(|&x| vb.iter().map(move |&y| x * k + y)).collect()
        };
        let d = TwoCellData {
            objects: a.objects * m0,
            src1: lift(&a.src1, &b.src1, m0),
            tgt1: lift(&a.tgt1, &b.tgt1, m0),
            id1: lift(&a.id1, &b.id1, m1),
            comp1: pair(&a.comp1, &b.comp1, m1),
            src2: lift(&a.src2, &b.src2, m1),
            tgt2: lift(&a.tgt2, &b.tgt2, m1),
            id2: lift(&a.id2, &b.id2, m2),
            vcomp: pair(&a.vcomp, &b.vcomp, m2),
            hcomp: pair(&a.hcomp, &b.hcomp, m2),
            basepoint: match (a.basepoint, b.basepoint) {
                (Some(x), Some(y)) => Some(x * m0 + y),
                _ => None,
            },
        };
        Self::new(d).expect("product of 2-groupoids")
    }
}

/// A strict 2-category whose cells need not be invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictTwoCategory {
    data: TwoCellData,
    index: CellIndex,
}

impl TwoCategory for StrictTwoCategory {
    fn data(&self) -> &TwoCellData {
        &self.data
    }
    fn index(&self) -> &CellIndex {
        &self.index
    }
    fn assoc(&self, a: usize, b: usize, c: usize) -> usize {
        self.id2(self.comp(self.comp(a, b), c))
    }
}

impl StrictTwoCategory {
    /// The ordered set `[n]` as a category: one 1-cell `i → j` for `i ≤ j`,
    /// identity 2-cells only. 1-cells are numbered lexicographically in `(i, j)`.
    pub fn ordinal(n: usize) -> Self {
        let arrows: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
        let pos: HashMap<(usize, usize), usize> = arrows.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let mut comp1 = HashMap::new();
        for &(i, j) in &arrows {
            for k in j..=n {
                comp1.insert((pos[&(i, j)], pos[&(j, k)]), pos[&(i, k)]);
            }
        }
        let m = arrows.len();
        let data = TwoCellData {
            objects: n + 1,
            src1: arrows.iter().map(|a| a.0).collect(),
            tgt1: arrows.iter().map(|a| a.1).collect(),
            id1: (0..=n).map(|i| pos[&(i, i)]).collect(),
            hcomp: comp1.clone(),
            comp1,
            src2: (0..m).collect(),
            tgt2: (0..m).collect(),
            id2: (0..m).collect(),
            vcomp: (0..m).map(|f| ((f, f), f)).collect(),
            basepoint: None,
        };
        let index = validate_common(&data).expect("ordinal category");
        StrictTwoCategory { data, index }
    }

    /// The 1-cell `i → j`.
    pub fn arrow(&self, i: usize, j: usize) -> usize {
        self.hom1(i, j)[0]
    }
}

/// One object, 1-cells `G₁`, 2-cells `G₁ ⋉ G₂` indexed `g·|G₂| + α`, with
/// `(g, α): g ⇒ gφ(α)`.
pub fn xmod_to_2group(xm: &CrossedModule) -> TwoGroupoid {
    let (g1, g2) = (&xm.g1, &xm.g2);
    let m = g2.order();
    let sd = semidirect(g1, g2, &xm.action);
    let n2 = sd.order();
    let mut comp1 = HashMap::new();
    for a in g1.elements() {
        for b in g1.elements() {
            comp1.insert((a, b), g1.mul(a, b));
        }
    }
    let src2: Vec<usize> = (0..n2).map(|x| x / m).collect();
    let tgt2: Vec<usize> = (0..n2).map(|x| g1.mul(x / m, xm.phi(x % m))).collect();
    let mut vcomp = HashMap::new();
    for x in 0..n2 {
        let t = tgt2[x];
        for b in g2.elements() {
            vcomp.insert((x, t * m + b), src2[x] * m + g2.mul(x % m, b));
        }
    }
    let mut hcomp = HashMap::new();
    for x in 0..n2 {
        for y in 0..n2 {
            hcomp.insert((x, y), sd.mul(x, y));
        }
    }
    let d = TwoCellData {
        objects: 1,
        src1: vec![0; g1.order()],
        tgt1: vec![0; g1.order()],
        id1: vec![g1.identity()],
        comp1,
        src2,
        tgt2,
        id2: g1.elements().map(|g| g * m + g2.identity()).collect(),
        vcomp,
        hcomp,
        basepoint: Some(0),
    };
    TwoGroupoid::new(d).expect("2-group of a crossed module")
}

/// The strict 2-functor `xmod_to_2group(dom) → xmod_to_2group(cod)` of a
/// crossed-module morphism.
pub fn xmod_morphism_to_2functor(m: &XmodMorphism) -> TwoFunctor {
    let (n2, m2) = (m.dom.g2.order(), m.cod.g2.order());
    let two = (0..m.dom.g1.order() * n2).map(|x| m.p1.apply(x / n2) * m2 + m.p2.apply(x % n2)).collect();
    TwoFunctor { obj: vec![0], one: m.dom.g1.elements().map(|g| m.p1.apply(g)).collect(), two }
}

/// `G₁` = 1-cells, `G₂` = 2-cells out of the identity (numbered in index
/// order) under horizontal composition, `φ` = target, action by conjugation.
pub fn two_group_to_xmod(g: &impl TwoCategory) -> Result<CrossedModule> {
    if g.n0() != 1 {
        return Err(Error::NotATwoGroup(format!("{} objects", g.n0())));
    }
    let n1 = g.n1();
    let g1 = FiniteGroup::from_flat(n1, (0..n1 * n1).map(|i| g.comp(i / n1, i % n1)).collect())
        .map_err(|e| Error::NotATwoGroup(format!("1-cells: {e}")))?;
    let e = g.id1(0);
    let k: Vec<usize> = g.out2(e).to_vec();
    let pos = |a: usize| k.binary_search(&a).expect("closed under composition");
    let n2 = k.len();
    let g2 = FiniteGroup::from_flat(n2, (0..n2 * n2).map(|i| pos(g.hcomp(k[i / n2], k[i % n2]))).collect())
        .map_err(|e| Error::NotATwoGroup(format!("2-cells: {e}")))?;
    let phi: Vec<usize> = k.iter().map(|&a| g.tgt2(a)).collect();
    let phi = crate::fingroup::make_hom(&g2, &g1, phi)?;
    let rows: Vec<Vec<usize>> = k
        .iter()
        .map(|&a| g1.elements().map(|x| pos(g.hcomp(g.hcomp(g.id2(g1.inv(x)), a), g.id2(x)))).collect())
        .collect();
    let action = make_action(&g1, &g2, &rows)?;
    check_crossed_module(&g2, &g1, &phi, &action)
}

/// Component label of each object, numbered by first occurrence.
pub fn pi0(g: &impl TwoCategory) -> Vec<usize> {
    let mut uf = UnionFind::new(g.n0());
    for f in 0..g.n1() {
        uf.union(g.src1(f), g.tgt1(f));
    }
    uf.labels()
}

/// Loops at `x` modulo 2-cells, under composition.
pub fn pi1_at(g: &impl TwoCategory, x: usize) -> FiniteGroup {
    let (loops, class) = loop_classes(g, x);
    let n = loops.len();
    let table = (0..n * n).map(|i| class[&g.comp(loops[i / n], loops[i % n])]).collect();
    FiniteGroup::from_flat(n, table).expect("fundamental group")
}

/// Representative loops (smallest index per class) and class of every loop.
pub fn loop_classes(g: &impl TwoCategory, x: usize) -> (Vec<usize>, HashMap<usize, usize>) {
    let mut reps: Vec<usize> = Vec::new();
    let mut class = HashMap::new();
    for &f in g.hom1(x, x) {
        if class.contains_key(&f) {
            continue;
        }
        let c = reps.len();
        reps.push(f);
        for &a in g.out2(f) {
            class.insert(g.tgt2(a), c);
        }
    }
    (reps, class)
}

/// Automorphisms of the identity at `x` under vertical composition.
pub fn pi2_at(g: &impl TwoCategory, x: usize) -> FiniteGroup {
    let e = g.id1(x);
    let cells = g.hom2(e, e).to_vec();
    let n = cells.len();
    let pos = |a: usize| cells.binary_search(&a).unwrap();
    let table = (0..n * n).map(|i| pos(g.vcomp(cells[i / n], cells[i % n]))).collect();
    FiniteGroup::from_flat(n, table).expect("second homotopy group")
}

/// 1-cells modulo 2-cells, with identity 2-cells only.
pub fn fundamental_groupoid(g: &impl TwoCategory) -> TwoGroupoid {
    let mut class = vec![usize::MAX; g.n1()];
    let mut reps = Vec::new();
    for f in 0..g.n1() {
        if class[f] != usize::MAX {
            continue;
        }
        for &a in g.out2(f) {
            class[g.tgt2(a)] = reps.len();
        }
        reps.push(f);
    }
    let mut comp1 = HashMap::new();
    for (i, &f) in reps.iter().enumerate() {
        for (j, &h) in reps.iter().enumerate() {
            if g.tgt1(f) == g.src1(h) {
                comp1.insert((i, j), class[g.comp(f, h)]);
            }
        }
    }
    let src1 = reps.iter().map(|&f| g.src1(f)).collect();
    let tgt1 = reps.iter().map(|&f| g.tgt1(f)).collect();
    TwoGroupoid::from_1groupoid(g.n0(), src1, tgt1, comp1).expect("fundamental groupoid")
}

/// A strict 2-functor, stored as cell maps relative to a `(dom, cod)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoFunctor {
    pub obj: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

impl TwoFunctor {
    pub fn identity(g: &impl TwoCategory) -> Self {
        TwoFunctor { obj: (0..g.n0()).collect(), one: (0..g.n1()).collect(), two: (0..g.n2()).collect() }
    }

    /// The unique functor to the point.
    pub fn to_point(g: &impl TwoCategory) -> Self {
        TwoFunctor { obj: vec![0; g.n0()], one: vec![0; g.n1()], two: vec![0; g.n2()] }
    }

    pub fn then(&self, other: &TwoFunctor) -> TwoFunctor {
        TwoFunctor {
            obj: self.obj.iter().map(|&x| other.obj[x]).collect(),
            one: self.one.iter().map(|&x| other.one[x]).collect(),
            two: self.two.iter().map(|&x| other.two[x]).collect(),
        }
    }

    pub fn to_weak(&self, dom: &impl TwoCategory, cod: &impl TwoCategory) -> crate::weakmaps::WeakFunctor {
        crate::weakmaps::WeakFunctor::from_strict(dom, cod, self)
    }
}

/// Checks that the maps form a strict 2-functor. Basepoints are not consulted.
pub fn check_2functor(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &TwoFunctor) -> Result<()> {
    if f.obj.len() != dom.n0() || f.one.len() != dom.n1() || f.two.len() != dom.n2() {
        return Err(Error::Malformed("functor tables have the wrong length".into()));
    }
    if f.obj.iter().any(|&x| x >= cod.n0())
        || f.one.iter().any(|&x| x >= cod.n1())
        || f.two.iter().any(|&x| x >= cod.n2())
    {
        return Err(Error::Malformed("functor value out of range".into()));
    }
    for x in 0..dom.n1() {
        let y = f.one[x];
        if cod.src1(y) != f.obj[dom.src1(x)] || cod.tgt1(y) != f.obj[dom.tgt1(x)] {
            return Err(viol("1-cell source/target", vec![x]));
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
    for (&(x, y), &z) in &dom.data().comp1 {
        if cod.comp(f.one[x], f.one[y]) != f.one[z] {
            return Err(viol("composition of 1-cells", vec![x, y]));
        }
    }
    for (&(a, b), &c) in &dom.data().vcomp {
        if cod.vcomp(f.two[a], f.two[b]) != f.two[c] {
            return Err(viol("vertical composition", vec![a, b]));
        }
    }
    for (&(a, b), &c) in &dom.data().hcomp {
        if cod.hcomp(f.two[a], f.two[b]) != f.two[c] {
            return Err(viol("horizontal composition", vec![a, b]));
        }
    }
    for x in 0..dom.n1() {
        if f.two[dom.id2(x)] != cod.id2(f.one[x]) {
            return Err(viol("identity 2-cell", vec![x]));
        }
    }
    Ok(())
}

/// Arrow lifting (F1) and 2-cell lifting (F2), checked exhaustively.
pub fn is_fibration_2gpd(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &TwoFunctor) -> bool {
    // F1: every a: A₀ → A₁ and every B₁ over A₁ admit b: B₀ → B₁ over a.
    for a in 0..cod.n1() {
        for b1 in 0..dom.n0() {
            if f.obj[b1] == cod.tgt1(a) && !(0..dom.n1()).any(|b| dom.tgt1(b) == b1 && f.one[b] == a) {
                return false;
            }
        }
    }
    // F2: every α: a₀ ⇒ a₁ and every b₁ over a₁ admit β: b₀ ⇒ b₁ over α.
    for alpha in 0..cod.n2() {
        for b1 in 0..dom.n1() {
            if f.one[b1] == cod.tgt2(alpha) && !(0..dom.n2()).any(|b| dom.tgt2(b) == b1 && f.two[b] == alpha) {
                return false;
            }
        }
    }
    true
}

/// Maps induced on `π₀`, and on `π₁`, `π₂` at every object of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMaps {
    /// Component of the image of each domain component.
    pub pi0: Vec<usize>,
    /// Per domain object: class-to-class table on `π₁`.
    pub pi1: Vec<Vec<usize>>,
    /// Per domain object: table on `π₂` positions.
    pub pi2: Vec<Vec<usize>>,
}

/// Induced maps of a functor given by its object, 1-cell and 2-cell tables.
/// Works for weak functors too, since those preserve identities strictly.
pub fn induced_pi_maps(
    dom: &impl TwoCategory,
    cod: &impl TwoCategory,
    obj: &[usize],
    one: &[usize],
    two: &[usize],
) -> PiMaps {
    let (cd, cc) = (pi0(dom), pi0(cod));
    let ncomp = cd.iter().max().map_or(0, |m| m + 1);
    let mut p0 = vec![usize::MAX; ncomp];
    for x in 0..dom.n0() {
        p0[cd[x]] = cc[obj[x]];
    }
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for x in 0..dom.n0() {
        let y = obj[x];
        let (reps, _) = loop_classes(dom, x);
        let (_, cls) = loop_classes(cod, y);
        p1.push(reps.iter().map(|&f| cls[&one[f]]).collect());
        let (ed, ec) = (dom.id1(x), cod.id1(y));
        let cc2 = cod.hom2(ec, ec);
        p2.push(dom.hom2(ed, ed).iter().map(|&a| cc2.binary_search(&two[a]).expect("π₂ maps to π₂")).collect());
    }
    PiMaps { pi0: p0, pi1: p1, pi2: p2 }
}

fn is_bijection(t: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    t.len() == n && t.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

impl PiMaps {
    /// Bijective on `π₀` and on `π₁`, `π₂` at every basepoint.
    pub fn is_equivalence(&self, dom: &impl TwoCategory, cod: &impl TwoCategory, obj: &[usize]) -> bool {
        let ncod = pi0(cod).iter().max().map_or(0, |m| m + 1);
        if !is_bijection(&self.pi0, ncod) {
            return false;
        }
        (0..dom.n0()).all(|x| {
            let y = obj[x];
            is_bijection(&self.pi1[x], loop_classes(cod, y).0.len())
                && is_bijection(&self.pi2[x], cod.hom2(cod.id1(y), cod.id1(y)).len())
        })
    }
}

pub fn is_equivalence_2functor(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &TwoFunctor) -> bool {
    induced_pi_maps(dom, cod, &f.obj, &f.one, &f.two).is_equivalence(dom, cod, &f.obj)
}

/// Whether a strict functor is an isomorphism of 2-groupoids.
pub fn is_isomorphism(dom: &impl TwoCategory, cod: &impl TwoCategory, f: &TwoFunctor) -> bool {
    check_2functor(dom, cod, f).is_ok()
        && is_bijection(&f.obj, cod.n0())
        && is_bijection(&f.one, cod.n1())
        && is_bijection(&f.two, cod.n2())
}

/// Strict 2-functors `dom → cod`, by exhaustive search.
pub fn enumerate_2functors(
    dom: &impl TwoCategory,
    cod: &impl TwoCategory,
    pointed: bool,
    cap: usize,
) -> Result<Vec<TwoFunctor>> {
    let ws = crate::weakmaps::enumerate_weak_functors(dom, cod, true, pointed, cap)?;
    Ok(ws.into_iter().map(|w| w.underlying()).collect())
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Class labels numbered by first occurrence.
    pub fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut map = HashMap::new();
        (0..n)
            .map(|x| {
                let r = self.find(x);
                let k = map.len();
                *map.entry(r).or_insert(k)
            })
            .collect()
    }
}
