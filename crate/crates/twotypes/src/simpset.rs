//! Finite truncated simplicial sets: coskeleta, horns, Kan and minimality
//! checks, products, simplicial maps and homotopies.
//!
//! Level `n` holds `size(n)` simplices numbered `0..size(n)`. Faces are
//! stored flat: `d_i x` is `faces[n][x*(n+1) + i]`, likewise `s_j x` for
//! `n < trunc`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Budget, Error, Result};
use crate::search::backtrack;
use crate::twogpd::UnionFind;

#[derive(Clone, Debug)]
pub struct SimplicialSet {
    trunc: usize,
    sizes: Vec<usize>,
    faces: Vec<Vec<usize>>,
    degens: Vec<Vec<usize>>,
    cosk: Option<usize>,
    by_boundary: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    horn_ix: Vec<Vec<OnceLock<HashMap<Vec<usize>, Vec<usize>>>>>,
}

impl PartialEq for SimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        self.trunc == other.trunc
            && self.sizes == other.sizes
            && self.faces == other.faces
            && self.degens == other.degens
            && self.cosk == other.cosk
    }
}

impl Eq for SimplicialSet {}

/// A horn `Λⁿ_k`: faces at every position except `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Horn {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<Option<usize>>,
}

/// The three defining conditions plus the redundant injectivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sset2Report {
    pub kan: bool,
    pub cosk3: bool,
    pub minimal2: bool,
    pub cosk2_injective: bool,
    pub kan_counterexample: Option<Horn>,
    pub minimality_witness: Option<(usize, usize, usize)>,
}

impl Sset2Report {
    pub fn in_sset2(&self) -> bool {
        self.kan && self.cosk3 && self.minimal2
    }
}

impl SimplicialSet {
    /// Builds and audits all simplicial identities, plus the coskeletal
    /// condition above `cosk` when given.
    pub fn new(
        sizes: Vec<usize>,
        faces: Vec<Vec<usize>>,
        degens: Vec<Vec<usize>>,
        cosk: Option<usize>,
    ) -> Result<Self> {
        let x = Self::new_unchecked(sizes, faces, degens, cosk)?;
        x.audit()?;
        if let Some(k) = cosk {
            x.audit_coskeletal(k)?;
        }
        Ok(x)
    }

    fn new_unchecked(
        sizes: Vec<usize>,
        mut faces: Vec<Vec<usize>>,
        degens: Vec<Vec<usize>>,
        cosk: Option<usize>,
    ) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Malformed("no levels".into()));
        }
        let trunc = sizes.len() - 1;
        if faces.len() == trunc {
            faces.insert(0, Vec::new());
        }
        if faces.len() != trunc + 1 || degens.len() != trunc {
            return Err(Error::Malformed("face/degeneracy table count".into()));
        }
        for n in 1..=trunc {
            if faces[n].len() != sizes[n] * (n + 1) || faces[n].iter().any(|&v| v >= sizes[n - 1]) {
                return Err(Error::Malformed(format!("face table at level {n}")));
            }
        }
        for n in 0..trunc {
            if degens[n].len() != sizes[n] * (n + 1) || degens[n].iter().any(|&v| v >= sizes[n + 1]) {
                return Err(Error::Malformed(format!("degeneracy table at level {n}")));
            }
        }
        let mut by_boundary = vec![HashMap::new()];
        for n in 1..=trunc {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for x in 0..sizes[n] {
                m.entry(faces[n][x * (n + 1)..(x + 1) * (n + 1)].to_vec()).or_default().push(x);
            }
            by_boundary.push(m);
        }
        let horn_ix = (0..=trunc).map(|n| (0..=n).map(|_| OnceLock::new()).collect()).collect();
        Ok(SimplicialSet { trunc, sizes, faces, degens, cosk, by_boundary, horn_ix })
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }
    pub fn size(&self, n: usize) -> usize {
        self.sizes[n]
    }
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
    pub fn cosk(&self) -> Option<usize> {
        self.cosk
    }
    pub fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x * (n + 1) + i]
    }
    pub fn degen(&self, n: usize, x: usize, j: usize) -> usize {
        self.degens[n][x * (n + 1) + j]
    }
    pub fn boundary(&self, n: usize, x: usize) -> &[usize] {
        &self.faces[n][x * (n + 1)..(x + 1) * (n + 1)]
    }
    /// Simplices at level `n ≥ 1` with the given boundary.
    pub fn with_boundary(&self, n: usize, b: &[usize]) -> &[usize] {
        self.by_boundary[n].get(b).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Whether `x` at level `n` is in the image of some degeneracy.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|j| self.degen(n - 1, self.face(n, x, j), j) == x)
    }

    /// `s_{j_k} ⋯ s_{j_1} x`, applying `js` left to right starting at level `n`.
    pub fn degen_path(&self, n: usize, x: usize, js: &[usize]) -> usize {
        js.iter().enumerate().fold(x, |y, (k, &j)| self.degen(n + k, y, j))
    }

    /// The totally degenerate `n`-simplex on a vertex.
    pub fn vertex_degen(&self, v: usize, n: usize) -> usize {
        (0..n).fold(v, |y, m| self.degen(m, y, 0))
    }

    fn audit(&self) -> Result<()> {
        let bad =
            |what: &str, n: usize, x: usize| Err(Error::Malformed(format!("{what} fails at level {n}, simplex {x}")));
        for n in 2..=self.trunc {
            for x in 0..self.sizes[n] {
                for j in 1..=n {
                    for i in 0..j {
                        if self.face(n - 1, self.face(n, x, j), i) != self.face(n - 1, self.face(n, x, i), j - 1) {
                            return bad("d_i d_j = d_{j-1} d_i", n, x);
                        }
                    }
                }
            }
        }
        for n in 0..self.trunc {
            for x in 0..self.sizes[n] {
                for j in 0..=n {
                    let y = self.degen(n, x, j);
                    if self.face(n + 1, y, j) != x || self.face(n + 1, y, j + 1) != x {
                        return bad("d_j s_j = d_{j+1} s_j = id", n, x);
                    }
                    for i in 0..=n + 1 {
                        if i == j || i == j + 1 {
                            continue;
                        }
                        let lhs = self.face(n + 1, y, i);
                        let rhs = if i < j {
                            self.degen(n - 1, self.face(n, x, i), j - 1)
                        } else {
                            self.degen(n - 1, self.face(n, x, i - 1), j)
                        };
                        if lhs != rhs {
                            return bad("d_i s_j", n, x);
                        }
                    }
                    if n + 1 < self.trunc {
                        for i in 0..=j {
                            if self.degen(n + 1, y, i) != self.degen(n + 1, self.degen(n, x, i), j + 1) {
                                return bad("s_i s_j = s_{j+1} s_i", n, x);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn audit_coskeletal(&self, k: usize) -> Result<()> {
        for m in k + 1..=self.trunc {
            if self.by_boundary[m].values().any(|v| v.len() > 1) {
                return Err(Error::Malformed(format!("two simplices share a boundary at level {m}")));
            }
            if self.compatible_tuples(m, usize::MAX)?.len() != self.sizes[m] {
                return Err(Error::Malformed(format!("missing compatible boundary at level {m}")));
            }
        }
        Ok(())
    }

    /// Whether every level above `k` is given bijectively by compatible boundaries.
    pub fn is_coskeletal_at(&self, k: usize) -> bool {
        self.audit_coskeletal(k).is_ok()
    }

    /// Face-compatible `(n+1)`-tuples of `(n-1)`-simplices, with position
    /// `skip` left empty (pass `usize::MAX` for full boundaries).
    fn tuples(&self, n: usize, skip: usize, budget: &mut Budget) -> Result<Vec<Vec<usize>>> {
        let lower = n - 1;
        let positions: Vec<usize> = (0..=n).filter(|&j| j != skip).collect();
        // index of (n-1)-simplices by (face index, value)
        let mut by_face: Vec<HashMap<usize, Vec<usize>>> = vec![HashMap::new(); n];
        if lower > 0 {
            for y in 0..self.sizes[lower] {
                for i in 0..=lower {
                    by_face[i].entry(self.face(lower, y, i)).or_default().push(y);
                }
            }
        }
        let all: Vec<usize> = (0..self.sizes[lower]).collect();
        let mut out = Vec::new();
        backtrack(
            positions.len(),
            budget,
            &mut |v, a| {
                let j = positions[v];
                if lower == 0 || v == 0 {
                    return all.clone();
                }
                // constraint with the first placed face i = positions[0] < j: d_i y_j = d_{j-1} y_i
                let i = positions[0];
                let want = self.face(lower, a[0], j - 1);
                by_face[i].get(&want).cloned().unwrap_or_default()
            },
            &mut |v, a| {
                if lower == 0 {
                    return true;
                }
                let j = positions[v];
                (0..v).all(|u| {
                    let i = positions[u];
                    self.face(lower, a[v], i) == self.face(lower, a[u], j - 1)
                })
            },
            &mut |a| {
                out.push(a.to_vec());
                Ok(true)
            },
        )?;
        Ok(out)
    }

    /// All compatible boundary tuples at level `n ≥ 1`.
    pub fn compatible_tuples(&self, n: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
        self.tuples(n, usize::MAX, &mut Budget::new(cap))
    }

    /// All horns `Λⁿ_k` (as face lists with `None` at `k`).
    pub fn horns(&self, n: usize, k: usize, cap: usize) -> Result<Vec<Horn>> {
        Ok(self
            .tuples(n, k, &mut Budget::new(cap))?
            .into_iter()
            .map(|t| {
                let mut faces: Vec<Option<usize>> = t.into_iter().map(Some).collect();
                faces.insert(k, None);
                Horn { n, k, faces }
            })
            .collect())
    }

    fn horn_index(&self, n: usize, k: usize) -> &HashMap<Vec<usize>, Vec<usize>> {
        self.horn_ix[n][k].get_or_init(|| {
            let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for x in 0..self.sizes[n] {
                let mut key = self.boundary(n, x).to_vec();
                key.remove(k);
                m.entry(key).or_default().push(x);
            }
            m
        })
    }

    /// Simplices filling a horn, in index order.
    pub fn fillers(&self, horn: &Horn) -> &[usize] {
        let key: Vec<usize> =
            horn.faces.iter().enumerate().filter(|&(i, _)| i != horn.k).map(|(_, f)| f.unwrap()).collect();
        self.horn_index(horn.n, horn.k).get(&key).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Horn filling in dimensions `1..=min(4, trunc)`. Above dimension 4 a
    /// 3-coskeletal complex fills automatically: such a horn already contains
    /// the full 3-skeleton of the simplex, so the missing face and the filler
    /// are the unique compatible boundaries.
    pub fn kan_counterexample(&self) -> Result<Option<Horn>> {
        for n in 1..=self.trunc.min(4) {
            for k in 0..=n {
                for h in self.horns(n, k, usize::MAX)? {
                    if self.fillers(&h).is_empty() {
                        return Ok(Some(h));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_kan(&self) -> bool {
        matches!(self.kan_counterexample(), Ok(None))
    }

    /// First pair `(n, x, y)` of distinct `n`-simplices, `k ≤ n ≤ 3`, with a
    /// common boundary that are homotopic relative to it: some `z` has
    /// `d_n z = x`, `d_{n+1} z = y` and `d_i z = s_{n-1} d_i x` for `i < n`.
    pub fn minimality_witness(&self, k: usize) -> Option<(usize, usize, usize)> {
        for n in k.max(1)..=3.min(self.trunc.saturating_sub(1)) {
            let mut groups: Vec<&Vec<usize>> = self.by_boundary[n].values().filter(|v| v.len() > 1).collect();
            groups.sort();
            for g in groups {
                for &x in g {
                    for &y in g {
                        if x == y {
                            continue;
                        }
                        let mut b: Vec<usize> = (0..n).map(|i| self.degen(n - 1, self.face(n, x, i), n - 1)).collect();
                        b.push(x);
                        b.push(y);
                        if !self.with_boundary(n + 1, &b).is_empty() {
                            return Some((n, x, y));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_k_minimal(&self, k: usize) -> bool {
        self.minimality_witness(k).is_none()
    }

    /// Whether `X → Cosk₂ X` is injective on levels 3 and above.
    pub fn cosk2_injective(&self) -> bool {
        for n in 3..=self.trunc {
            let mut seen = HashSet::new();
            for x in 0..self.sizes[n] {
                if !seen.insert(self.two_skeleton_key(n, x)) {
                    return false;
                }
            }
        }
        true
    }

    fn two_skeleton_key(&self, n: usize, x: usize) -> Vec<usize> {
        if n == 2 {
            return vec![x];
        }
        self.boundary(n, x).iter().flat_map(|&y| self.two_skeleton_key(n - 1, y)).collect()
    }

    pub fn in_sset2(&self) -> Result<Sset2Report> {
        let kan_counterexample = self.kan_counterexample()?;
        let minimality_witness = self.minimality_witness(2);
        Ok(Sset2Report {
            kan: kan_counterexample.is_none(),
            cosk3: self.is_coskeletal_at(3),
            minimal2: minimality_witness.is_none(),
            cosk2_injective: self.cosk2_injective(),
            kan_counterexample,
            minimality_witness,
        })
    }

    /// Levels `≤ k` copied, levels `k+1..=trunc` given by compatible boundaries.
    pub fn coskeleton(&self, k: usize, trunc: usize) -> Result<SimplicialSet> {
        if k > self.trunc {
            return Err(Error::Malformed("coskeleton level above truncation".into()));
        }
        let mut sizes = self.sizes[..=k].to_vec();
        let mut faces = self.faces[..=k].to_vec();
        let mut degens = self.degens[..k].to_vec();
        for m in k + 1..=trunc {
            let partial = SimplicialSet::new_unchecked(sizes.clone(), faces.clone(), degens.clone(), None)?;
            let tuples = partial.compatible_tuples(m, usize::MAX)?;
            let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
            let lower = m - 1;
            let mut dg = Vec::with_capacity(sizes[lower] * m);
            for x in 0..sizes[lower] {
                for j in 0..m {
                    let b: Vec<usize> = (0..=m)
                        .map(|i| {
                            if i == j || i == j + 1 {
                                x
                            } else if i < j {
                                partial.degen(lower - 1, partial.face(lower, x, i), j - 1)
                            } else {
                                partial.degen(lower - 1, partial.face(lower, x, i - 1), j)
                            }
                        })
                        .collect();
                    dg.push(*index.get(b.as_slice()).ok_or_else(|| Error::Malformed("degenerate boundary".into()))?);
                }
            }
            sizes.push(tuples.len());
            faces.push(tuples.concat());
            degens.push(dg);
        }
        SimplicialSet::new(sizes, faces, degens, Some(k))
    }

    /// The `n`-truncation.
    pub fn truncate(&self, n: usize) -> SimplicialSet {
        let cosk = self.cosk.filter(|&k| k < n);
        SimplicialSet::new_unchecked(
            self.sizes[..=n].to_vec(),
            self.faces[..=n].to_vec(),
            self.degens[..n].to_vec(),
            cosk,
        )
        .expect("truncation")
    }

    /// Sub-simplicial set of `Δⁿ` on the nondecreasing sequences accepted by `keep`.
    fn simplex_like(n: usize, trunc: usize, keep: impl Fn(&[usize]) -> bool) -> SimplicialSet {
        let levels: Vec<Vec<Vec<usize>>> =
            (0..=trunc).map(|m| nondecreasing(m + 1, n).into_iter().filter(|s| keep(s)).collect()).collect();
        let pos: Vec<HashMap<&Vec<usize>, usize>> =
            levels.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        let sizes = levels.iter().map(|l| l.len()).collect();
        let mut faces = vec![Vec::new()];
        let mut degens = Vec::new();
        for m in 1..=trunc {
            faces.push(
                levels[m]
                    .iter()
                    .flat_map(|s| {
                        (0..=m).map(|i| {
                            let mut t = s.clone();
                            t.remove(i);
                            pos[m - 1][&t]
                        })
                    })
                    .collect::<Vec<_>>(),
            );
        }
        for m in 0..trunc {
            degens.push(
                levels[m]
                    .iter()
                    .flat_map(|s| {
                        (0..=m).map(|j| {
                            let mut t = s.clone();
                            t.insert(j, s[j]);
                            pos[m + 1][&t]
                        })
                    })
                    .collect::<Vec<_>>(),
            );
        }
        SimplicialSet::new(sizes, faces, degens, None).expect("subcomplex of a standard simplex")
    }

    /// `Δⁿ`, with `m`-simplices the nondecreasing maps `[m] → [n]` in lexicographic order.
    pub fn standard_simplex(n: usize, trunc: usize) -> SimplicialSet {
        Self::simplex_like(n, trunc, |_| true)
    }

    /// `Λⁿ_k`: simplices of `Δⁿ` missing some vertex other than `k`.
    pub fn horn(n: usize, k: usize, trunc: usize) -> SimplicialSet {
        Self::simplex_like(n, trunc, |s| (0..=n).any(|v| v != k && !s.contains(&v)))
    }

    /// `∂Δⁿ`: simplices of `Δⁿ` missing some vertex.
    pub fn boundary_of_simplex(n: usize, trunc: usize) -> SimplicialSet {
        Self::simplex_like(n, trunc, |s| (0..=n).any(|v| !s.contains(&v)))
    }

    /// Levelwise product; the pair `(a, b)` has index `a*|Y_n| + b`.
    pub fn product(&self, other: &SimplicialSet) -> SimplicialSet {
        let trunc = self.trunc.min(other.trunc);
        let sizes: Vec<usize> = (0..=trunc).map(|n| self.sizes[n] * other.sizes[n]).collect();
        let mut faces = vec![Vec::new()];
        let mut degens = Vec::new();
        for n in 1..=trunc {
            let (m, m1) = (other.sizes[n], other.sizes[n - 1]);
            let mut f = Vec::with_capacity(sizes[n] * (n + 1));
            for x in 0..sizes[n] {
                let (a, b) = (x / m, x % m);
                for i in 0..=n {
                    f.push(self.face(n, a, i) * m1 + other.face(n, b, i));
                }
            }
            faces.push(f);
        }
        for n in 0..trunc {
            let (m, m1) = (other.sizes[n], other.sizes[n + 1]);
            let mut d = Vec::with_capacity(sizes[n] * (n + 1));
            for x in 0..sizes[n] {
                let (a, b) = (x / m, x % m);
                for j in 0..=n {
                    d.push(self.degen(n, a, j) * m1 + other.degen(n, b, j));
                }
            }
            degens.push(d);
        }
        SimplicialSet::new(sizes, faces, degens, None).expect("product of simplicial sets")
    }

    /// Renumbers level `n` by `perm[n]` (old index to new index).
    pub fn relabel(&self, perm: &[Vec<usize>]) -> Result<SimplicialSet> {
        let t = self.trunc;
        if perm.len() != t + 1 || (0..=t).any(|n| !is_permutation(&perm[n], self.sizes[n])) {
            return Err(Error::Malformed("relabeling must be a permutation at every level".into()));
        }
        let mut faces = vec![Vec::new()];
        let mut degens = Vec::new();
        for n in 1..=t {
            let mut f = vec![0; self.faces[n].len()];
            for x in 0..self.sizes[n] {
                for i in 0..=n {
                    f[perm[n][x] * (n + 1) + i] = perm[n - 1][self.face(n, x, i)];
                }
            }
            faces.push(f);
        }
        for n in 0..t {
            let mut d = vec![0; self.degens[n].len()];
            for x in 0..self.sizes[n] {
                for j in 0..=n {
                    d[perm[n][x] * (n + 1) + j] = perm[n + 1][self.degen(n, x, j)];
                }
            }
            degens.push(d);
        }
        SimplicialSet::new(self.sizes.clone(), faces, degens, self.cosk)
    }

    /// Text form read back by the CLI parser.
    pub fn to_text(&self, name: &str) -> String {
        let mut s = format!("sset {name} trunc {}\n", self.trunc);
        if let Some(k) = self.cosk {
            let _ = writeln!(s, "cosk {k}");
        }
        for n in 0..=self.trunc {
            let _ = writeln!(s, "level {n} size {}", self.sizes[n]);
            for x in 0..self.sizes[n] {
                let f: Vec<String> =
                    if n == 0 { vec![] } else { self.boundary(n, x).iter().map(|v| v.to_string()).collect() };
                let d: Vec<String> =
                    if n < self.trunc { (0..=n).map(|j| self.degen(n, x, j).to_string()).collect() } else { vec![] };
                let _ = writeln!(s, "{} | {}", f.join(" "), d.join(" ").trim_end());
            }
        }
        s.push_str("end\n");
        s
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Nondecreasing sequences of length `len` in `0..=top`, lexicographic.
fn nondecreasing(len: usize, top: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, top: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=top {
            cur.push(v);
            rec(len, top, v, cur, out);
            cur.pop();
        }
    }
    rec(len, top, 0, &mut cur, &mut out);
    out
}

/// Per-level simplex maps, up to the smaller truncation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialMap {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap { levels: x.sizes.iter().map(|&n| (0..n).collect()).collect() }
    }

    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        let t = self.levels.len().min(other.levels.len());
        SimplicialMap { levels: (0..t).map(|n| self.levels[n].iter().map(|&x| other.levels[n][x]).collect()).collect() }
    }
}

/// Checks commutation with every face and degeneracy.
pub fn check_simplicial_map(x: &SimplicialSet, y: &SimplicialSet, f: &SimplicialMap) -> Result<()> {
    let t = x.trunc.min(y.trunc);
    if f.levels.len() != t + 1
        || (0..=t).any(|n| f.levels[n].len() != x.sizes[n] || f.levels[n].iter().any(|&v| v >= y.sizes[n]))
    {
        return Err(Error::Malformed("simplicial map tables".into()));
    }
    for n in 1..=t {
        for s in 0..x.sizes[n] {
            for i in 0..=n {
                if f.levels[n - 1][x.face(n, s, i)] != y.face(n, f.levels[n][s], i) {
                    return Err(Error::violation("faces", vec![n, s, i]));
                }
            }
        }
    }
    for n in 0..t {
        for s in 0..x.sizes[n] {
            for j in 0..=n {
                if f.levels[n + 1][x.degen(n, s, j)] != y.degen(n, f.levels[n][s], j) {
                    return Err(Error::violation("degeneracies", vec![n, s, j]));
                }
            }
        }
    }
    Ok(())
}

/// Simplicial maps `X → Y` extending the `fixed` values `(level, simplex, image)`.
///
/// Levels up to 3 are searched; `Y` must be coskeletal at 3 or below, so
/// that level 4 (when both sides have it) is read off from boundaries.
pub fn simplicial_maps_extending(
    x: &SimplicialSet,
    y: &SimplicialSet,
    fixed: &[(usize, usize, usize)],
    limit: Option<usize>,
    cap: usize,
) -> Result<Vec<SimplicialMap>> {
    let t = x.trunc.min(y.trunc);
    let top = t.min(3);
    if t > 3 && !y.cosk.is_some_and(|k| k <= 3) {
        return Err(Error::Malformed("target must be coskeletal at 3 or below".into()));
    }
    let mut pinned: Vec<HashMap<usize, usize>> = vec![HashMap::new(); top + 1];
    for &(n, s, v) in fixed {
        if n <= top {
            pinned[n].insert(s, v);
        }
    }
    // degenerate simplices: one (face, j) witness each
    let mut degen_of: Vec<HashMap<usize, (usize, usize)>> = vec![HashMap::new(); top + 1];
    for n in 0..top {
        for s in 0..x.sizes[n] {
            for j in 0..=n {
                degen_of[n + 1].entry(x.degen(n, s, j)).or_insert((s, j));
            }
        }
    }
    // variable order: levels 0, 1; level 2 greedily by completed 3-simplices; level 3
    let mut order: Vec<(usize, usize)> = Vec::new();
    for n in 0..=top.min(1) {
        order.extend((0..x.sizes[n]).map(|s| (n, s)));
    }
    if top >= 2 {
        let mut placed = vec![false; x.sizes[2]];
        let mut cof: Vec<Vec<usize>> = vec![Vec::new(); x.sizes[2]];
        if top >= 3 {
            for z in 0..x.sizes[3] {
                for &f in x.boundary(3, z) {
                    cof[f].push(z);
                }
            }
        }
        let mut l2: Vec<usize> =
            (0..x.sizes[2]).filter(|s| degen_of[2].contains_key(s) || pinned[2].contains_key(s)).collect();
        for &s in &l2 {
            placed[s] = true;
        }
        let mut done3: Vec<usize> = if top >= 3 {
            (0..x.sizes[3]).map(|z| x.boundary(3, z).iter().filter(|&&f| placed[f]).count()).collect()
        } else {
            Vec::new()
        };
        while l2.len() < x.sizes[2] {
            let best = (0..x.sizes[2])
                .filter(|&s| !placed[s])
                .max_by_key(|&s| (cof[s].iter().map(|&z| done3[z]).sum::<usize>(), std::cmp::Reverse(s)))
                .unwrap();
            placed[best] = true;
            for &z in &cof[best] {
                done3[z] += 1;
            }
            l2.push(best);
        }
        order.extend(l2.into_iter().map(|s| (2, s)));
    }
    if top >= 3 {
        order.extend((0..x.sizes[3]).map(|s| (3, s)));
    }
    let mut pos: Vec<Vec<usize>> = (0..=top).map(|n| vec![0; x.sizes[n]]).collect();
    for (v, &(n, s)) in order.iter().enumerate() {
        pos[n][s] = v;
    }
    // 3-simplices whose last 2-face is variable v: forward check
    let mut fwd: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    if top >= 3 {
        for z in 0..x.sizes[3] {
            let last = x.boundary(3, z).iter().map(|&f| pos[2][f]).max().unwrap();
            fwd[last].push(z);
        }
    }
    let value = |a: &[usize], n: usize, s: usize| a[pos[n][s]];
    let mut out = Vec::new();
    backtrack(
        order.len(),
        &mut Budget::new(cap),
        &mut |v, a| {
            let (n, s) = order[v];
            let mut cands: Vec<usize> = if n == 0 {
                (0..y.sizes[0]).collect()
            } else if n == 1 {
                let (d0, d1) = (value(a, 0, x.face(1, s, 0)), value(a, 0, x.face(1, s, 1)));
                y.with_boundary(1, &[d0, d1]).to_vec()
            } else {
                let b: Vec<usize> = x.boundary(n, s).iter().map(|&f| value(a, n - 1, f)).collect();
                y.with_boundary(n, &b).to_vec()
            };
            if let Some(&(f, j)) = degen_of[n].get(&s) {
                let want = y.degen(n - 1, value(a, n - 1, f), j);
                cands.retain(|&c| c == want);
            }
            if let Some(&p) = pinned[n].get(&s) {
                cands.retain(|&c| c == p);
            }
            cands
        },
        &mut |v, a| {
            fwd[v].iter().all(|&z| {
                let b: Vec<usize> = x.boundary(3, z).iter().map(|&f| a[pos[2][f]]).collect();
                !y.with_boundary(3, &b).is_empty()
            })
        },
        &mut |a| {
            let mut levels: Vec<Vec<usize>> =
                (0..=top).map(|n| (0..x.sizes[n]).map(|s| value(a, n, s)).collect()).collect();
            for n in top + 1..=t {
                let mut l = Vec::with_capacity(x.sizes[n]);
                for s in 0..x.sizes[n] {
                    let b: Vec<usize> = x.boundary(n, s).iter().map(|&f| levels[n - 1][f]).collect();
                    match y.with_boundary(n, &b) {
                        [z] => l.push(*z),
                        _ => return Ok(true),
                    }
                }
                levels.push(l);
            }
            out.push(SimplicialMap { levels });
            Ok(limit.is_none_or(|l| out.len() < l))
        },
    )?;
    Ok(out)
}

pub fn simplicial_maps(x: &SimplicialSet, y: &SimplicialSet, cap: usize) -> Result<Vec<SimplicialMap>> {
    simplicial_maps_extending(x, y, &[], None, cap)
}

/// Some `H: Δ¹ × X → Y` with `H|{0}×X = f` and `H|{1}×X = g`. With
/// `base`, `H` is also constant on `Δ¹ × {base}`.
pub fn find_homotopy(
    x: &SimplicialSet,
    y: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
    base: Option<usize>,
    cap: usize,
) -> Result<Option<SimplicialMap>> {
    let t = x.trunc.min(y.trunc).min(3);
    let cyl = SimplicialSet::standard_simplex(1, t).product(&x.truncate(t));
    let mut fixed = Vec::new();
    for n in 0..=t {
        let m = x.sizes[n];
        for s in 0..m {
            fixed.push((n, s, f.levels[n][s]));
            fixed.push((n, (n + 1) * m + s, g.levels[n][s]));
        }
    }
    if let Some(b) = base {
        // the edge 01 of Δ¹ has index 1 at level 1
        fixed.push((1, x.sizes[1] + x.degen(0, b, 0), y.degen(0, f.levels[0][b], 0)));
    }
    Ok(simplicial_maps_extending(&cyl, y, &fixed, Some(1), cap)?.pop())
}

pub fn homotopic(
    x: &SimplicialSet,
    y: &SimplicialSet,
    f: &SimplicialMap,
    g: &SimplicialMap,
    base: Option<usize>,
    cap: usize,
) -> Result<bool> {
    Ok(find_homotopy(x, y, f, g, base, cap)?.is_some())
}

/// Class labels of `maps` under the equivalence closure of homotopy.
pub fn homotopy_classes(
    x: &SimplicialSet,
    y: &SimplicialSet,
    maps: &[SimplicialMap],
    base: Option<usize>,
    cap: usize,
) -> Result<Vec<usize>> {
    let mut uf = UnionFind::new(maps.len());
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            if uf.find(i) != uf.find(j) && homotopic(x, y, &maps[i], &maps[j], base, cap)? {
                uf.union(i, j);
            }
        }
    }
    Ok(uf.labels())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 10_000_000;

    #[test]
    fn standard_simplices() {
        let d1 = SimplicialSet::standard_simplex(1, 4);
        assert_eq!(d1.sizes(), &[2, 3, 4, 5, 6]);
        assert_eq!(d1.boundary(1, 1), &[1, 0]);
        let d0 = SimplicialSet::standard_simplex(0, 4);
        assert_eq!(d0.sizes(), &[1, 1, 1, 1, 1]);
        assert!(d0.is_kan());
        assert!(d0.is_k_minimal(0));
        assert_eq!(d1.product(&d1).size(2), 16);
        let h = SimplicialSet::horn(2, 1, 2);
        assert_eq!((0..h.size(1)).filter(|&e| !h.is_degenerate(1, e)).count(), 2);
        let b = SimplicialSet::boundary_of_simplex(2, 2);
        assert_eq!((0..b.size(2)).filter(|&e| !b.is_degenerate(2, e)).count(), 0);
    }

    #[test]
    fn product_with_point() {
        let d0 = SimplicialSet::standard_simplex(0, 3);
        let d2 = SimplicialSet::standard_simplex(2, 3);
        assert_eq!(d0.product(&d2), d2);
    }

    #[test]
    fn coskeleton_of_point_and_idempotence() {
        let p = SimplicialSet::standard_simplex(0, 0).coskeleton(0, 4).unwrap();
        assert_eq!(p.sizes(), &[1, 1, 1, 1, 1]);
        let d1 = SimplicialSet::standard_simplex(1, 1).coskeleton(1, 4).unwrap();
        let again = d1.coskeleton(1, 4).unwrap();
        assert_eq!(d1, again);
        // no edge 1 → 0, so the horn (·, 0→0, 0→1) at vertex 0 has no filler
        let r = d1.in_sset2().unwrap();
        assert!(!r.kan && r.cosk3 && r.minimal2);
        assert_eq!(r.kan_counterexample.map(|h| (h.n, h.k)), Some((2, 0)));
    }

    #[test]
    fn interval_groupoid_from_its_edges() {
        // edge x → y is 2x + y
        let e =
            SimplicialSet::new(vec![2, 4], vec![vec![], vec![0, 0, 1, 0, 0, 1, 1, 1]], vec![vec![0, 3]], None).unwrap();
        let i = e.coskeleton(1, 4).unwrap();
        assert_eq!(i.sizes(), &[2, 4, 8, 16, 32]);
        let r = i.in_sset2().unwrap();
        assert!(r.kan && r.cosk3 && r.minimal2 && r.cosk2_injective);
    }

    fn sphere_fixture() -> SimplicialSet {
        // one vertex, one (degenerate) edge, two 2-simplices
        let base = SimplicialSet::new(
            vec![1, 1, 2],
            vec![vec![], vec![0, 0], vec![0, 0, 0, 0, 0, 0]],
            vec![vec![0], vec![0, 0]],
            None,
        )
        .unwrap();
        base.coskeleton(2, 4).unwrap()
    }

    #[test]
    fn non_minimal_fixture() {
        let x = sphere_fixture();
        assert_eq!(x.size(3), 16);
        let r = x.in_sset2().unwrap();
        assert_eq!((r.kan, r.cosk3, r.minimal2, r.cosk2_injective), (true, true, false, true));
        assert_eq!(r.minimality_witness.map(|w| w.0), Some(2));
    }

    #[test]
    fn boundary_of_tetrahedron_is_not_kan() {
        let b = SimplicialSet::boundary_of_simplex(3, 3).coskeleton(3, 4).unwrap();
        let h = b.kan_counterexample().unwrap();
        assert!(h.is_some());
    }

    #[test]
    fn maps_and_homotopies() {
        let d0 = SimplicialSet::standard_simplex(0, 4).coskeleton(0, 4).unwrap();
        let d1 = SimplicialSet::standard_simplex(1, 1).coskeleton(1, 4).unwrap();
        let maps = simplicial_maps(&d0, &d1, CAP).unwrap();
        assert_eq!(maps.len(), 2);
        assert_eq!(simplicial_maps(&d1, &d0, CAP).unwrap().len(), 1);
        // the two vertices of the interval are connected
        assert!(homotopic(&d0, &d1, &maps[0], &maps[1], None, CAP).unwrap());
        assert!(homotopic(&d0, &d1, &maps[0], &maps[0], None, CAP).unwrap());
        assert_eq!(homotopy_classes(&d0, &d1, &maps, None, CAP).unwrap(), vec![0, 0]);
        check_simplicial_map(&d1, &d1, &SimplicialMap::identity(&d1)).unwrap();
    }

    #[test]
    fn text_round_trip_shape() {
        let t = SimplicialSet::standard_simplex(1, 2).to_text("i");
        assert!(t.starts_with("sset i trunc 2\nlevel 0 size 2\n | 0\n | 2\nlevel 1 size 3\n0 0 | 0 0\n"));
    }
}
