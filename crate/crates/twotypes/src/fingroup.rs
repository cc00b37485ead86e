//! Finite groups as Cayley tables, homomorphisms, right actions,
//! semidirect products and reduced words in free groups.

use std::collections::VecDeque;

use crate::error::{Error, GroupFailure, Result};

/// A finite group on the elements `0..order`, stored as a full Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

/// Validates a square multiplication table and derives identity and inverses.
pub fn make_group(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = rows.len();
    let mut flat = Vec::with_capacity(n * n);
    for row in rows {
        if row.len() != n {
            return Err(Error::NotAGroup(GroupFailure::NotSquare));
        }
        flat.extend_from_slice(row);
    }
    FiniteGroup::from_flat(n, flat)
}

impl FiniteGroup {
    pub fn from_flat(n: usize, mul: Vec<usize>) -> Result<Self> {
        if n == 0 || mul.len() != n * n {
            return Err(Error::NotAGroup(GroupFailure::NotSquare));
        }
        if let Some(pos) = mul.iter().position(|&v| v >= n) {
            return Err(Error::NotAGroup(GroupFailure::OutOfRange { row: pos / n, col: pos % n }));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or(Error::NotAGroup(GroupFailure::NoIdentity))?;
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[x] = (0..n)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or(Error::NotAGroup(GroupFailure::NoInverse(x)))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NotAGroup(GroupFailure::NotAssociative(a, b, c)));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, mul, identity, inv })
    }

    /// Builds a group from a multiplication closure without re-validating.
    /// Only used for constructions that are groups by design.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(f(a, b));
            }
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| mul[e * n + x] == x)).expect("identity");
        let inv = (0..n).map(|x| (0..n).find(|&y| mul[x * n + y] == identity).expect("inverse")).collect();
        FiniteGroup { n, mul, identity, inv }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Z/n written additively on `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        Self::from_fn_unchecked(n, |a, b| (a + b) % n)
    }

    /// Permutations of `0..k` in lexicographic order; `p*q` applies `p` first.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let n = perms.len();
        Self::from_fn_unchecked(n, |a, b| {
            let c: Vec<usize> = (0..k).map(|i| perms[b][perms[a][i]]).collect();
            index(&c)
        })
    }

    /// Klein four-group, `Z/2 x Z/2`.
    pub fn klein() -> Self {
        Self::cyclic(2).direct_product(&Self::cyclic(2))
    }

    /// Elements are pairs `(a, b)` indexed as `a*|other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let m = other.n;
        Self::from_fn_unchecked(self.n * m, |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `x^a = a⁻¹ x a`.
    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(self.inv(a), x), a)
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|x| self.element_order(x) == self.n)
    }

    /// Sorted list of the subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&x| seen[x]).collect()
    }

    /// A small generating set, chosen greedily by descending element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.elements().filter(|&x| x != self.identity).collect();
        order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for x in order {
            if span.len() == self.n {
                break;
            }
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Independent re-check of every group axiom on the stored tables.
    pub fn check_axioms(&self) -> Result<()> {
        FiniteGroup::from_flat(self.n, self.mul.clone()).map(|_| ())
    }

    /// Short structural description such as `trivial` or `Z/2-order-2`.
    pub fn describe(&self) -> String {
        if self.n == 1 {
            "trivial".to_string()
        } else if self.is_cyclic() {
            format!("Z/{}-order-{}", self.n, self.n)
        } else if self.is_abelian() {
            format!("abelian-order-{}", self.n)
        } else {
            format!("nonabelian-order-{}", self.n)
        }
    }

    /// Rows of the Cayley table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Subgroup on the given sorted, closed element list, renumbered `0..k`.
    pub fn subgroup(&self, elems: &[usize]) -> (FiniteGroup, GroupHom) {
        let pos = |x: usize| elems.binary_search(&x).expect("subset is closed");
        let sub = FiniteGroup::from_fn_unchecked(elems.len(), |a, b| pos(self.mul(elems[a], elems[b])));
        let incl = GroupHom { dom: sub.clone(), cod: self.clone(), image: elems.to_vec() };
        (sub, incl)
    }

    /// Quotient by a normal subgroup given as a sorted element list.
    /// Cosets are numbered by increasing minimal representative.
    pub fn quotient(&self, normal: &[usize]) -> (FiniteGroup, GroupHom) {
        let rep = |x: usize| normal.iter().map(|&k| self.mul(x, k)).min().unwrap();
        let mut reps: Vec<usize> = self.elements().map(rep).collect();
        reps.sort_unstable();
        reps.dedup();
        let idx = |x: usize| reps.binary_search(&rep(x)).unwrap();
        let q = FiniteGroup::from_fn_unchecked(reps.len(), |a, b| idx(self.mul(reps[a], reps[b])));
        let proj = GroupHom { dom: self.clone(), cod: q.clone(), image: self.elements().map(idx).collect() };
        (q, proj)
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// A homomorphism given by its value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub dom: FiniteGroup,
    pub cod: FiniteGroup,
    pub image: Vec<usize>,
}

pub fn make_hom(dom: &FiniteGroup, cod: &FiniteGroup, values: Vec<usize>) -> Result<GroupHom> {
    if values.len() != dom.order() || values.iter().any(|&v| v >= cod.order()) {
        return Err(Error::Malformed(format!("hom table needs {} entries below {}", dom.order(), cod.order())));
    }
    for x in dom.elements() {
        for y in dom.elements() {
            if values[dom.mul(x, y)] != cod.mul(values[x], values[y]) {
                return Err(Error::NotAHom(x, y));
            }
        }
    }
    Ok(GroupHom { dom: dom.clone(), cod: cod.clone(), image: values })
}

impl GroupHom {
    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom { dom: g.clone(), cod: g.clone(), image: g.elements().collect() }
    }

    pub fn trivial(dom: &FiniteGroup, cod: &FiniteGroup) -> Self {
        GroupHom { dom: dom.clone(), cod: cod.clone(), image: vec![cod.identity(); dom.order()] }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        for &y in &self.image {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.order() == self.cod.order() && self.is_injective()
    }

    /// Sorted image subgroup.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v = self.image.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            image: self.image.iter().map(|&y| other.apply(y)).collect(),
        }
    }
}

/// Kernel of `hom` with its inclusion.
pub fn kernel(hom: &GroupHom) -> (FiniteGroup, GroupHom) {
    let elems: Vec<usize> = hom.dom.elements().filter(|&x| hom.apply(x) == hom.cod.identity()).collect();
    hom.dom.subgroup(&elems)
}

/// Cokernel `cod / im(hom)` with its projection; the image must be normal.
pub fn cokernel_of_image(hom: &GroupHom) -> Result<(FiniteGroup, GroupHom)> {
    let image = hom.image_set();
    for &x in &image {
        for a in hom.cod.elements() {
            if image.binary_search(&hom.cod.conj(x, a)).is_err() {
                return Err(Error::ImageNotNormal { element: x, by: a });
            }
        }
    }
    Ok(hom.cod.quotient(&image))
}

/// Every homomorphism `g -> h`, determined by images of `g.generators()`.
/// Cost is exponential in the number of generators.
pub fn homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    fn rec(
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        orders: &[usize],
        imgs: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if imgs.len() == gens.len() {
            if let Some(map) = extend_on_generators(g, h, gens, imgs) {
                out.push(map);
            }
            return;
        }
        let ord = orders[imgs.len()];
        for y in h.elements() {
            if ord.is_multiple_of(h.element_order(y)) {
                imgs.push(y);
                rec(g, h, gens, orders, imgs, out);
                imgs.pop();
            }
        }
    }
    rec(g, h, &gens, &orders, &mut imgs, &mut out);
    out
}

/// Extends generator images to a homomorphism if one exists.
pub fn extend_on_generators(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = h.identity();
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let v = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push_back(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        None
    } else {
        Some(map)
    }
}

/// Brute-force isomorphism search over generator images.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let gens = g.generators();
    let mut imgs = Vec::new();
    fn rec(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], imgs: &mut Vec<usize>) -> Option<Vec<usize>> {
        if imgs.len() == gens.len() {
            let map = extend_on_generators(g, h, gens, imgs)?;
            let mut seen = vec![false; h.order()];
            for &y in &map {
                if std::mem::replace(&mut seen[y], true) {
                    return None;
                }
            }
            return Some(map);
        }
        let ord = g.element_order(gens[imgs.len()]);
        for y in h.elements() {
            if h.element_order(y) == ord {
                imgs.push(y);
                if let Some(m) = rec(g, h, gens, imgs) {
                    return Some(m);
                }
                imgs.pop();
            }
        }
        None
    }
    rec(g, h, &gens, &mut imgs)
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A right action of `actor` on `space` by automorphisms, `act(α, g) = α^g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub actor: FiniteGroup,
    pub space: FiniteGroup,
    table: Vec<usize>,
}

/// `rows[α][g] = α^g`.
pub fn make_action(actor: &FiniteGroup, space: &FiniteGroup, rows: &[Vec<usize>]) -> Result<GroupAction> {
    let (na, ns) = (actor.order(), space.order());
    if rows.len() != ns || rows.iter().any(|r| r.len() != na || r.iter().any(|&v| v >= ns)) {
        return Err(Error::Malformed(format!("action table must be {ns} rows of {na} entries below {ns}")));
    }
    let table: Vec<usize> = rows.iter().flatten().copied().collect();
    let act = GroupAction { actor: actor.clone(), space: space.clone(), table };
    act.validate()?;
    Ok(act)
}

impl GroupAction {
    pub fn trivial(actor: &FiniteGroup, space: &FiniteGroup) -> Self {
        let table = space.elements().flat_map(|a| std::iter::repeat_n(a, actor.order())).collect();
        GroupAction { actor: actor.clone(), space: space.clone(), table }
    }

    /// Conjugation action of a group on itself, `α^g = g⁻¹αg`.
    pub fn conjugation(g: &FiniteGroup) -> Self {
        let table = g.elements().flat_map(|a| g.elements().map(move |x| (a, x))).map(|(a, x)| g.conj(a, x)).collect();
        GroupAction { actor: g.clone(), space: g.clone(), table }
    }

    /// Action through a homomorphism into `Aut(space)` given as `auto[g][α]`.
    pub fn from_fn(actor: &FiniteGroup, space: &FiniteGroup, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = space.elements().map(|a| actor.elements().map(|g| f(a, g)).collect()).collect();
        make_action(actor, space, &rows)
    }

    pub fn act(&self, alpha: usize, g: usize) -> usize {
        self.table[alpha * self.actor.order() + g]
    }

    pub fn is_trivial(&self) -> bool {
        self.space.elements().all(|a| self.actor.elements().all(|g| self.act(a, g) == a))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.actor.order()).map(|r| r.to_vec()).collect()
    }

    fn validate(&self) -> Result<()> {
        let (g1, g2) = (&self.actor, &self.space);
        for a in g2.elements() {
            if self.act(a, g1.identity()) != a {
                return Err(Error::NotAnAction { axiom: "identity", witness: vec![a] });
            }
        }
        for a in g2.elements() {
            for g in g1.elements() {
                for h in g1.elements() {
                    if self.act(self.act(a, g), h) != self.act(a, g1.mul(g, h)) {
                        return Err(Error::NotAnAction { axiom: "compatibility", witness: vec![a, g, h] });
                    }
                }
            }
        }
        for a in g2.elements() {
            for b in g2.elements() {
                for g in g1.elements() {
                    if self.act(g2.mul(a, b), g) != g2.mul(self.act(a, g), self.act(b, g)) {
                        return Err(Error::NotAnAction { axiom: "automorphism", witness: vec![a, b, g] });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `G₁ ⋉ G₂` with `(g,α)(h,β) = (gh, α^h β)`; the pair `(g,α)` has index `g·|G₂| + α`.
pub fn semidirect(g1: &FiniteGroup, g2: &FiniteGroup, action: &GroupAction) -> FiniteGroup {
    let m = g2.order();
    FiniteGroup::from_fn_unchecked(g1.order() * m, |x, y| {
        let (g, a) = (x / m, x % m);
        let (h, b) = (y / m, y % m);
        g1.mul(g, h) * m + g2.mul(action.act(a, h), b)
    })
}

/// A letter of a free group: generator index and whether it is inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord(Vec<Letter>);

/// Cancels adjacent inverse pairs, scanning left to right with a stack.
pub fn free_reduce(letters: &[Letter]) -> FreeWord {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    FreeWord(out)
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn generator(i: usize) -> Self {
        FreeWord(vec![Letter::new(i, false)])
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        free_reduce(&v)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverted())
    }

    /// Evaluates the word in `g`, sending generator `i` to `images[i]`.
    pub fn eval(&self, g: &FiniteGroup, images: &[usize]) -> usize {
        self.0.iter().fold(g.identity(), |acc, l| {
            let x = images[l.generator];
            g.mul(acc, if l.inverse { g.inv(x) } else { x })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    #[test]
    fn z2_table_is_a_group() {
        let g = make_group(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn missing_inverse_is_rejected() {
        let err = make_group(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NotAGroup(GroupFailure::NoInverse(1)));
    }

    #[test]
    fn s3_is_associative_over_all_triples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        let mut checked = 0;
        for a in s3.elements() {
            for b in s3.elements() {
                for c in s3.elements() {
                    assert_eq!(s3.mul(s3.mul(a, b), c), s3.mul(a, s3.mul(b, c)));
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 216);
        assert!(!s3.is_abelian());
        make_group(&s3.table()).unwrap();
    }

    #[test]
    fn hom_examples() {
        make_hom(&z(2), &z(2), vec![0, 0]).unwrap();
        make_hom(&z(4), &z(2), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(make_hom(&z(3), &z(3), vec![0, 1, 1]).unwrap_err(), Error::NotAHom(1, 1));
    }

    #[test]
    fn action_examples() {
        GroupAction::trivial(&FiniteGroup::symmetric(3), &z(4)).validate().unwrap();
        let inv = GroupAction::from_fn(&z(2), &z(3), |a, g| if g == 0 { a } else { (3 - a) % 3 }).unwrap();
        assert!(!inv.is_trivial());
        let bad: Vec<Vec<usize>> = (0..4).map(|_| vec![1, 1]).collect();
        let err = make_action(&z(2), &z(4), &bad).unwrap_err();
        assert!(matches!(err, Error::NotAnAction { axiom: "identity", .. }));
    }

    #[test]
    fn semidirect_examples() {
        let triv = GroupAction::trivial(&z(2), &z(2));
        let v4 = semidirect(&z(2), &z(2), &triv);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert_eq!(v4.elements().filter(|&x| v4.element_order(x) == 2).count(), 3);

        let inv = GroupAction::from_fn(&z(2), &z(3), |a, g| if g == 0 { a } else { (3 - a) % 3 }).unwrap();
        let s = semidirect(&z(2), &z(3), &inv);
        assert_eq!(s.order(), 6);
        let witness =
            s.elements().flat_map(|a| s.elements().map(move |b| (a, b))).find(|&(a, b)| s.mul(a, b) != s.mul(b, a));
        assert!(witness.is_some());
        assert!(is_isomorphic(&s, &FiniteGroup::symmetric(3)));
        s.check_axioms().unwrap();
    }

    #[test]
    fn free_reduction_examples() {
        let a = Letter::new(0, false);
        let b = Letter::new(1, false);
        assert!(free_reduce(&[a, a.inverted()]).is_empty());
        assert_eq!(free_reduce(&[a, b, b.inverted(), a]).letters(), &[a, a]);
    }

    #[test]
    fn kernel_and_cokernel() {
        let red = make_hom(&z(4), &z(2), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(kernel(&red).0.order(), 2);
        let triv = GroupHom::trivial(&FiniteGroup::trivial(), &z(2));
        assert_eq!(cokernel_of_image(&triv).unwrap().0.order(), 2);

        let s3 = FiniteGroup::symmetric(3);
        let t = s3.elements().find(|&x| x != s3.identity() && s3.element_order(x) == 2).unwrap();
        let incl = make_hom(&z(2), &s3, vec![s3.identity(), t]).unwrap();
        assert!(matches!(cokernel_of_image(&incl), Err(Error::ImageNotNormal { .. })));
    }

    #[test]
    fn endomorphism_counts() {
        assert_eq!(homomorphisms(&z(2), &z(2)).len(), 2);
        assert_eq!(homomorphisms(&z(4), &z(2)).len(), 2);
        assert_eq!(homomorphisms(&FiniteGroup::klein(), &FiniteGroup::klein()).len(), 16);
        assert_eq!(homomorphisms(&FiniteGroup::symmetric(3), &z(2)).len(), 2);
    }
}
