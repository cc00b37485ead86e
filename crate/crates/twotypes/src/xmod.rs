//! Crossed modules `[φ: G₂ → G₁]` with a right action of `G₁` on `G₂`.

use crate::error::{Error, Result};
use crate::fingroup::{
    cokernel_of_image, find_isomorphism, homomorphisms, kernel, make_hom, FiniteGroup, FreeWord, GroupAction, GroupHom,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub g2: FiniteGroup,
    pub g1: FiniteGroup,
    pub phi: GroupHom,
    pub action: GroupAction,
}

/// Checks CM1 and CM2 exhaustively.
pub fn check_crossed_module(
    g2: &FiniteGroup,
    g1: &FiniteGroup,
    phi: &GroupHom,
    action: &GroupAction,
) -> Result<CrossedModule> {
    if phi.dom != *g2 || phi.cod != *g1 || action.actor != *g1 || action.space != *g2 {
        return Err(Error::Malformed("components do not fit together".into()));
    }
    for a in g2.elements() {
        for b in g2.elements() {
            if action.act(b, phi.apply(a)) != g2.conj(b, a) {
                return Err(Error::violation("CM1", vec![a, b]));
            }
        }
    }
    for b in g2.elements() {
        for a in g1.elements() {
            if phi.apply(action.act(b, a)) != g1.conj(phi.apply(b), a) {
                return Err(Error::violation("CM2", vec![b, a]));
            }
        }
    }
    let xm = CrossedModule { g2: g2.clone(), g1: g1.clone(), phi: phi.clone(), action: action.clone() };
    debug_assert!(xm.kernel_is_central());
    Ok(xm)
}

impl CrossedModule {
    pub fn new(g2: FiniteGroup, g1: FiniteGroup, phi: Vec<usize>, action: GroupAction) -> Result<Self> {
        let phi = make_hom(&g2, &g1, phi)?;
        check_crossed_module(&g2, &g1, &phi, &action)
    }

    /// `[1 → G]`.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let one = FiniteGroup::trivial();
        Self::new(one.clone(), g.clone(), vec![g.identity()], GroupAction::trivial(g, &one)).unwrap()
    }

    /// `[A → 1]` for abelian `A`.
    pub fn from_abelian(a: &FiniteGroup) -> Result<Self> {
        let one = FiniteGroup::trivial();
        Self::new(a.clone(), one.clone(), vec![0; a.order()], GroupAction::trivial(&one, a))
    }

    /// `[N → G]` for a normal subgroup (sorted element list) with conjugation action.
    pub fn normal_inclusion(g: &FiniteGroup, normal: &[usize]) -> Result<Self> {
        let (n, incl) = g.subgroup(normal);
        let pos = |x: usize| normal.binary_search(&x).map_err(|_| Error::ImageNotNormal { element: x, by: 0 });
        let mut rows = Vec::new();
        for &a in normal {
            let mut row = Vec::new();
            for x in g.elements() {
                row.push(pos(g.conj(a, x))?);
            }
            rows.push(row);
        }
        let action = crate::fingroup::make_action(g, &n, &rows)?;
        check_crossed_module(&n, g, &incl, &action)
    }

    /// `[G →id G]` with conjugation action; contractible.
    pub fn identity_on(g: &FiniteGroup) -> Self {
        let all: Vec<usize> = g.elements().collect();
        Self::normal_inclusion(g, &all).unwrap()
    }

    pub fn phi(&self, a: usize) -> usize {
        self.phi.apply(a)
    }

    /// `β^a`.
    pub fn act(&self, beta: usize, a: usize) -> usize {
        self.action.act(beta, a)
    }

    pub fn pi1(&self) -> FiniteGroup {
        cokernel_of_image(&self.phi).expect("image of a crossed module boundary is normal").0
    }

    pub fn pi2(&self) -> FiniteGroup {
        let (k, _) = kernel(&self.phi);
        assert!(k.is_abelian(), "kernel of a crossed module boundary is abelian");
        k
    }

    /// Elements of `ker φ` as a sorted list.
    pub fn pi2_elements(&self) -> Vec<usize> {
        self.g2.elements().filter(|&a| self.phi(a) == self.g1.identity()).collect()
    }

    pub fn kernel_is_central(&self) -> bool {
        self.pi2_elements().iter().all(|&k| self.g2.elements().all(|b| self.g2.mul(k, b) == self.g2.mul(b, k)))
    }

    pub fn identity_morphism(&self) -> XmodMorphism {
        XmodMorphism {
            dom: self.clone(),
            cod: self.clone(),
            p2: GroupHom::identity(&self.g2),
            p1: GroupHom::identity(&self.g1),
        }
    }

    pub fn order_pair(&self) -> (usize, usize) {
        (self.g2.order(), self.g1.order())
    }

    /// Whether `G₁` is free. No nontrivial finite group is.
    pub fn is_cofibrant(&self) -> bool {
        self.g1.order() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XmodMorphism {
    pub dom: CrossedModule,
    pub cod: CrossedModule,
    pub p2: GroupHom,
    pub p1: GroupHom,
}

pub fn check_morphism(dom: &CrossedModule, cod: &CrossedModule, p2: &GroupHom, p1: &GroupHom) -> Result<XmodMorphism> {
    for b in dom.g2.elements() {
        if p1.apply(dom.phi(b)) != cod.phi(p2.apply(b)) {
            return Err(Error::violation("phi-square", vec![b]));
        }
    }
    for b in dom.g2.elements() {
        for a in dom.g1.elements() {
            if p2.apply(dom.act(b, a)) != cod.act(p2.apply(b), p1.apply(a)) {
                return Err(Error::violation("equivariance", vec![b, a]));
            }
        }
    }
    Ok(XmodMorphism { dom: dom.clone(), cod: cod.clone(), p2: p2.clone(), p1: p1.clone() })
}

impl XmodMorphism {
    pub fn new(dom: &CrossedModule, cod: &CrossedModule, p2: Vec<usize>, p1: Vec<usize>) -> Result<Self> {
        let p2 = make_hom(&dom.g2, &cod.g2, p2)?;
        let p1 = make_hom(&dom.g1, &cod.g1, p1)?;
        check_morphism(dom, cod, &p2, &p1)
    }

    /// Induced map on `π₁`, as a table on coset indices.
    pub fn induced_pi1(&self) -> Vec<usize> {
        let (_, pd) = cokernel_of_image(&self.dom.phi).unwrap();
        let (q, pc) = cokernel_of_image(&self.cod.phi).unwrap();
        let mut out = vec![usize::MAX; pd.cod.order()];
        for x in self.dom.g1.elements() {
            out[pd.apply(x)] = pc.apply(self.p1.apply(x));
        }
        debug_assert!(out.iter().all(|&v| v < q.order()));
        out
    }

    /// Induced map on `π₂`, as a table on kernel positions.
    pub fn induced_pi2(&self) -> Vec<usize> {
        let kd = self.dom.pi2_elements();
        let kc = self.cod.pi2_elements();
        kd.iter().map(|&a| kc.binary_search(&self.p2.apply(a)).expect("kernel maps to kernel")).collect()
    }

    pub fn is_equivalence(&self) -> bool {
        let bij = |t: &[usize], n: usize| {
            let mut seen = vec![false; n];
            t.len() == n && t.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        };
        bij(&self.induced_pi1(), self.cod.pi1().order()) && bij(&self.induced_pi2(), self.cod.pi2_elements().len())
    }

    pub fn is_fibration(&self) -> bool {
        self.p2.is_surjective() && self.p1.is_surjective()
    }

    /// Fibration whose comparison map `H₂ → H₁ ×_{G₁} G₂` is bijective.
    pub fn is_trivial_fibration(&self) -> bool {
        if !self.is_fibration() {
            return false;
        }
        let (h, g) = (&self.dom, &self.cod);
        let fiber: Vec<(usize, usize)> =
            h.g1.elements()
                .flat_map(|x| g.g2.elements().map(move |b| (x, b)))
                .filter(|&(x, b)| self.p1.apply(x) == g.phi(b))
                .collect();
        let mut hit = vec![false; fiber.len()];
        for a in h.g2.elements() {
            let key = (h.phi(a), self.p2.apply(a));
            let i = fiber.binary_search(&key).expect("comparison lands in the fiber product");
            if std::mem::replace(&mut hit[i], true) {
                return false;
            }
        }
        hit.into_iter().all(|x| x)
    }
}

/// Enumerates all strict morphisms `dom → cod`.
pub fn morphisms(dom: &CrossedModule, cod: &CrossedModule) -> Vec<XmodMorphism> {
    let mut out = Vec::new();
    for p1 in homomorphisms(&dom.g1, &cod.g1) {
        let p1 = GroupHom { dom: dom.g1.clone(), cod: cod.g1.clone(), image: p1 };
        for p2 in homomorphisms(&dom.g2, &cod.g2) {
            let p2 = GroupHom { dom: dom.g2.clone(), cod: cod.g2.clone(), image: p2 };
            if let Ok(m) = check_morphism(dom, cod, &p2, &p1) {
                out.push(m);
            }
        }
    }
    out
}

/// An isomorphism of crossed modules, if one exists, found by brute force.
pub fn find_xmod_isomorphism(a: &CrossedModule, b: &CrossedModule) -> Option<XmodMorphism> {
    if a.order_pair() != b.order_pair() {
        return None;
    }
    find_isomorphism(&a.g1, &b.g1)?;
    find_isomorphism(&a.g2, &b.g2)?;
    morphisms(a, b).into_iter().find(|m| m.p1.is_bijective() && m.p2.is_bijective())
}

/// Strict transformation `(a, θ)` between strict morphisms `P, Q: H → G`.
pub fn check_strict_transformation(p: &XmodMorphism, q: &XmodMorphism, a: usize, theta: &[usize]) -> bool {
    let (h, g) = (&p.dom, &p.cod);
    if theta.len() != h.g1.order() {
        return false;
    }
    let tw = |x: usize| g.g1.conj(p.p1.apply(x), a);
    for x in h.g1.elements() {
        for y in h.g1.elements() {
            let lhs = theta[h.g1.mul(x, y)];
            let rhs = g.g2.mul(g.act(theta[x], tw(y)), theta[y]);
            if lhs != rhs {
                return false;
            }
        }
    }
    let t1 = h.g1.elements().all(|x| g.g1.mul(tw(x), g.phi(theta[x])) == q.p1.apply(x));
    let t2 = h.g2.elements().all(|b| g.g2.mul(g.act(p.p2.apply(b), a), theta[h.phi(b)]) == q.p2.apply(b));
    t1 && t2
}

/// All strict transformations `P ⇒ Q`, by exhaustive search over `(a, θ)`.
pub fn strict_transformations(p: &XmodMorphism, q: &XmodMorphism, pointed_only: bool) -> Vec<(usize, Vec<usize>)> {
    let (h, g) = (&p.dom, &p.cod);
    let mut out = Vec::new();
    let n = h.g1.order();
    let m = g.g2.order();
    for a in g.g1.elements() {
        if pointed_only && a != g.g1.identity() {
            continue;
        }
        let mut theta = vec![0; n];
        loop {
            if check_strict_transformation(p, q, a, &theta) {
                out.push((a, theta.clone()));
            }
            let mut i = 0;
            while i < n {
                theta[i] += 1;
                if theta[i] < m {
                    break;
                }
                theta[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out
}

/// Element of `F₂ = F₁ ×_{G₁} G₂`: a reduced word and an element of `G₂` over the same point of `G₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresentedElement {
    pub word: FreeWord,
    pub gamma: usize,
}

/// The cofibrant replacement `[F₂ → F₁]` of a crossed module, kept symbolic.
/// It depends on the chosen generating set.
#[derive(Clone, Debug)]
pub struct PresentedCrossedModule {
    pub base: CrossedModule,
    pub generators: Vec<usize>,
}

pub fn cofibrant_replacement(xm: &CrossedModule, generating_set: &[usize]) -> Result<PresentedCrossedModule> {
    if xm.g1.generated(generating_set).len() != xm.g1.order() {
        return Err(Error::NotGenerating);
    }
    Ok(PresentedCrossedModule { base: xm.clone(), generators: generating_set.to_vec() })
}

impl PresentedCrossedModule {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// The surjection `F₁ → G₁`.
    pub fn evaluate(&self, w: &FreeWord) -> usize {
        w.eval(&self.base.g1, &self.generators)
    }

    /// Builds the pair `(w, γ)` if `eval(w) = φ(γ)`.
    pub fn pair(&self, word: FreeWord, gamma: usize) -> Option<PresentedElement> {
        (self.evaluate(&word) == self.base.phi(gamma)).then_some(PresentedElement { word, gamma })
    }

    pub fn mul(&self, x: &PresentedElement, y: &PresentedElement) -> PresentedElement {
        PresentedElement { word: x.word.concat(&y.word), gamma: self.base.g2.mul(x.gamma, y.gamma) }
    }

    pub fn boundary(&self, x: &PresentedElement) -> FreeWord {
        x.word.clone()
    }

    /// `(w, γ)^u = (u⁻¹wu, γ^{eval u})`.
    pub fn act(&self, x: &PresentedElement, u: &FreeWord) -> PresentedElement {
        PresentedElement {
            word: u.inverse().concat(&x.word).concat(u),
            gamma: self.base.act(x.gamma, self.evaluate(u)),
        }
    }

    /// The evaluation morphism on representatives: `(w, γ) ↦ γ` and `w ↦ eval(w)`.
    pub fn evaluation(&self, x: &PresentedElement) -> (usize, usize) {
        (x.gamma, self.evaluate(&x.word))
    }

    /// A word over the generators evaluating to each element of `G₁`, found by breadth-first search.
    pub fn section(&self) -> Vec<FreeWord> {
        let g = &self.base.g1;
        let mut words: Vec<Option<FreeWord>> = vec![None; g.order()];
        words[g.identity()] = Some(FreeWord::empty());
        let mut frontier = vec![g.identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in frontier {
                for (i, &s) in self.generators.iter().enumerate() {
                    let y = g.mul(x, s);
                    if words[y].is_none() {
                        words[y] = Some(words[x].as_ref().unwrap().concat(&FreeWord::generator(i)));
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        words.into_iter().map(|w| w.expect("generating set reaches every element")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::Letter;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n)
    }

    fn z4_to_z2() -> CrossedModule {
        CrossedModule::new(z(4), z(2), vec![0, 1, 0, 1], GroupAction::trivial(&z(2), &z(4))).unwrap()
    }

    fn z2_id() -> CrossedModule {
        CrossedModule::identity_on(&z(2))
    }

    #[test]
    fn s3_to_trivial_violates_cm1() {
        let s3 = FiniteGroup::symmetric(3);
        let one = FiniteGroup::trivial();
        let err = CrossedModule::new(s3.clone(), one.clone(), vec![0; 6], GroupAction::trivial(&one, &s3)).unwrap_err();
        match err {
            Error::Violation { axiom: "CM1", witness } => {
                let (a, b) = (witness[0], witness[1]);
                assert_ne!(s3.mul(a, b), s3.mul(b, a));
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn homotopy_groups() {
        assert_eq!(CrossedModule::from_group(&z(2)).pi1().order(), 2);
        assert_eq!(CrossedModule::from_group(&z(2)).pi2().order(), 1);
        assert_eq!(z2_id().pi1().order(), 1);
        assert_eq!(CrossedModule::from_abelian(&z(2)).unwrap().pi2().order(), 2);
        assert_eq!(z4_to_z2().pi1().order(), 1);
        assert_eq!(z4_to_z2().pi2().order(), 2);
    }

    #[test]
    fn morphism_examples() {
        let (h, g) = (z4_to_z2(), z2_id());
        let m = XmodMorphism::new(&h, &g, vec![0, 1, 0, 1], vec![0, 1]).unwrap();
        assert!(m.is_fibration());
        assert!(!m.is_trivial_fibration());
        assert!(matches!(XmodMorphism::new(&h, &g, vec![0, 1, 0, 1], vec![0, 0]), Err(Error::Violation { .. })));
        assert!(h.identity_morphism().is_trivial_fibration());
        assert!(h.identity_morphism().is_equivalence());
    }

    #[test]
    fn equivalence_examples() {
        let one = CrossedModule::from_group(&FiniteGroup::trivial());
        let m = XmodMorphism::new(&z2_id(), &one, vec![0, 0], vec![0, 0]).unwrap();
        assert!(m.is_equivalence());
        let m = XmodMorphism::new(&CrossedModule::from_abelian(&z(2)).unwrap(), &one, vec![0, 0], vec![0]).unwrap();
        assert!(!m.is_equivalence());
    }

    #[test]
    fn cofibrant_replacement_examples() {
        let xm = z2_id();
        assert_eq!(cofibrant_replacement(&xm, &[]).unwrap_err(), Error::NotGenerating);
        let p = cofibrant_replacement(&xm, &[1]).unwrap();
        assert_eq!(p.rank(), 1);
        let a = Letter::new(0, false);
        let a3 = crate::fingroup::free_reduce(&[a, a, a]);
        assert!(p.pair(a3.clone(), 0).is_none());
        assert!(p.pair(a3, 1).is_some());
        let one = CrossedModule::from_group(&FiniteGroup::trivial());
        assert_eq!(cofibrant_replacement(&one, &[]).unwrap().rank(), 0);
    }

    #[test]
    fn no_strict_transformation_between_distinct_endomorphisms() {
        let b = CrossedModule::from_group(&z(2));
        let id = b.identity_morphism();
        let zero = XmodMorphism::new(&b, &b, vec![0], vec![0, 0]).unwrap();
        assert!(strict_transformations(&id, &zero, false).is_empty());
        assert!(check_strict_transformation(&id, &id, 0, &[0, 0]));
    }
}
