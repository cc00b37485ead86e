//! The line-oriented text format: parsing into a [`Workspace`] and printing.
//!
//! Blank lines and `#` comments are ignored. Blocks:
//!
//! ```text
//! group <name> order <n>          followed by n rows of n indices
//! group <name> cyclic <n> | symmetric <k> | klein | trivial
//! hom <name> <dom> <cod>          followed by one row of |dom| values
//! action <name> <actor> <space>   followed by |space| rows; row α lists α^g for each g
//! xmod <name> <g2> <g1>           then `phi <values>|<hom>`, `action trivial|<action>`, `end`
//! 2group <name> <xmod>            the one-object 2-groupoid of a crossed module
//! 2gpd <name>                     then the cell tables (see below), `end`
//! sset <name> trunc <N>           then optional `cosk <k>`, `level <n> size <k>` sections, `end`
//! ```
//!
//! A `2gpd` block has `objects <n>`, optional `basepoint <x>`, the rows
//! `src1`, `tgt1`, `id1`, `src2`, `tgt2`, `id2`, and one line per table
//! entry: `comp1 f g fg`, `vcomp a b c`, `hcomp a b c`. Lines
//! `assoc f g h p` make it a weak 2-groupoid. In a `sset` block every simplex
//! is a row `faces | degeneracies`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fingroup::{make_action, make_group, make_hom, FiniteGroup, GroupAction, GroupHom};
use crate::simpset::SimplicialSet;
use crate::twogpd::{xmod_to_2group, TwoCategory, TwoCellData, TwoGroupoid};
use crate::weakmaps::{check_weak_2groupoid, WeakTwoGroupoid};
use crate::xmod::CrossedModule;

#[derive(Clone, Debug)]
pub enum Object {
    Group(FiniteGroup),
    Hom(GroupHom),
    Action(GroupAction),
    Xmod(CrossedModule),
    TwoGpd(TwoGroupoid),
    WeakTwoGpd(WeakTwoGroupoid),
    Sset(SimplicialSet),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Hom(_) => "hom",
            Object::Action(_) => "action",
            Object::Xmod(_) => "xmod",
            Object::TwoGpd(_) => "2gpd",
            Object::WeakTwoGpd(_) => "weak 2gpd",
            Object::Sset(_) => "sset",
        }
    }
}

/// Named objects in definition order; every object passed its validator.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    objects: Vec<(String, Object)>,
    index: HashMap<String, usize>,
}

fn perr(line: usize, expected: impl Into<String>) -> Error {
    Error::Parse { line, expected: expected.into() }
}

struct Lines<'a> {
    lines: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, t)| !t.is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }
    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let l = self.lines.get(self.pos).cloned();
        self.pos += 1;
        l
    }
    fn last_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.0)
    }
    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let end = self.last_line();
        self.next().ok_or_else(|| perr(end, what))
    }
}

fn nums(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter().map(|t| t.parse().map_err(|_| perr(line, format!("a number, found `{t}`")))).collect()
}

fn num(line: usize, tok: Option<&&str>, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse().ok()).ok_or_else(|| perr(line, what.to_string()))
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.index.get(name).map(|&i| &self.objects[i].1)
    }

    pub fn objects(&self) -> &[(String, Object)] {
        &self.objects
    }

    /// The named object, or else the last one defined.
    pub fn target(&self, name: Option<&str>) -> Result<&(String, Object)> {
        match name {
            Some(n) => self
                .index
                .get(n)
                .map(|&i| &self.objects[i])
                .ok_or_else(|| Error::Malformed(format!("no object named `{n}`"))),
            None => self.objects.last().ok_or_else(|| Error::Malformed("no objects".into())),
        }
    }

    fn insert(&mut self, line: usize, name: &str, obj: Object) -> Result<()> {
        if self.index.contains_key(name) {
            return Err(perr(line, format!("a new name, `{name}` is already defined")));
        }
        self.index.insert(name.to_string(), self.objects.len());
        self.objects.push((name.to_string(), obj));
        Ok(())
    }

    fn group(&self, line: usize, name: &str) -> Result<FiniteGroup> {
        match self.get(name) {
            Some(Object::Group(g)) => Ok(g.clone()),
            _ => Err(perr(line, format!("a group name, found `{name}`"))),
        }
    }

    pub fn parse_str(&mut self, text: &str) -> Result<()> {
        let mut ls = Lines::new(text);
        while let Some((line, toks)) = ls.next() {
            let name = toks.get(1).copied().ok_or_else(|| perr(line, "a name"))?;
            let obj = match toks[0] {
                "group" => self.parse_group(&mut ls, line, &toks)?,
                "hom" => {
                    if toks.len() != 4 {
                        return Err(perr(line, "hom <name> <dom> <cod>"));
                    }
                    let (d, c) = (self.group(line, toks[2])?, self.group(line, toks[3])?);
                    let (l, row) = ls.expect("a row of hom values")?;
                    Object::Hom(make_hom(&d, &c, nums(l, &row)?)?)
                }
                "action" => {
                    if toks.len() != 4 {
                        return Err(perr(line, "action <name> <actor> <space>"));
                    }
                    let (a, s) = (self.group(line, toks[2])?, self.group(line, toks[3])?);
                    let mut rows = Vec::new();
                    for _ in 0..s.order() {
                        let (l, row) = ls.expect("an action row")?;
                        rows.push(nums(l, &row)?);
                    }
                    Object::Action(make_action(&a, &s, &rows)?)
                }
                "xmod" => self.parse_xmod(&mut ls, line, &toks)?,
                "2group" => match (toks.get(2).and_then(|n| self.get(n)), toks.len()) {
                    (Some(Object::Xmod(xm)), 3) => Object::TwoGpd(xmod_to_2group(xm)),
                    _ => return Err(perr(line, "2group <name> <xmod>")),
                },
                "2gpd" => parse_2gpd(&mut ls, line)?,
                "sset" => parse_sset(&mut ls, line, &toks)?,
                other => return Err(perr(line, format!("a block keyword, found `{other}`"))),
            };
            self.insert(line, name, obj)?;
        }
        Ok(())
    }

    fn parse_group(&self, ls: &mut Lines, line: usize, toks: &[&str]) -> Result<Object> {
        let g = match toks.get(2).copied() {
            Some("order") => {
                let n = num(line, toks.get(3), "group order")?;
                let mut rows = Vec::new();
                for _ in 0..n {
                    let (l, row) = ls.expect("a Cayley table row")?;
                    rows.push(nums(l, &row)?);
                }
                make_group(&rows)?
            }
            Some("cyclic") => FiniteGroup::cyclic(num(line, toks.get(3), "cyclic order")?.max(1)),
            Some("symmetric") => FiniteGroup::symmetric(num(line, toks.get(3), "symmetric degree")?),
            Some("klein") => FiniteGroup::klein(),
            Some("trivial") => FiniteGroup::trivial(),
            _ => return Err(perr(line, "group <name> order|cyclic|symmetric|klein|trivial")),
        };
        Ok(Object::Group(g))
    }

    fn parse_xmod(&self, ls: &mut Lines, line: usize, toks: &[&str]) -> Result<Object> {
        if toks.len() != 4 {
            return Err(perr(line, "xmod <name> <g2> <g1>"));
        }
        let (g2, g1) = (self.group(line, toks[2])?, self.group(line, toks[3])?);
        let (mut phi, mut action) = (None, None);
        loop {
            let (l, row) = ls.expect("end")?;
            match row[0] {
                "phi" => {
                    phi = Some(match (row.len(), row.get(1).and_then(|n| self.get(n))) {
                        (2, Some(Object::Hom(h))) => h.image.clone(),
                        _ => nums(l, &row[1..])?,
                    })
                }
                "action" => {
                    action = Some(match row.get(1).copied() {
                        Some("trivial") => GroupAction::trivial(&g1, &g2),
                        Some(n) => match self.get(n) {
                            Some(Object::Action(a)) => a.clone(),
                            _ => return Err(perr(l, format!("an action name, found `{n}`"))),
                        },
                        None => return Err(perr(l, "action trivial|<name>")),
                    })
                }
                "end" => break,
                other => return Err(perr(l, format!("phi, action or end, found `{other}`"))),
            }
        }
        let phi = phi.ok_or_else(|| perr(line, "a phi line"))?;
        let action = action.ok_or_else(|| perr(line, "an action line"))?;
        Ok(Object::Xmod(CrossedModule::new(g2, g1, phi, action)?))
    }

    pub fn load(&mut self, path: &std::path::Path) -> Result<()> {
        let text =
            std::fs::read_to_string(path).map_err(|e| perr(0, format!("a readable file {}: {e}", path.display())))?;
        self.parse_str(&text)
    }
}

fn parse_2gpd(ls: &mut Lines, line: usize) -> Result<Object> {
    let mut d = TwoCellData {
        objects: 0,
        src1: vec![],
        tgt1: vec![],
        id1: vec![],
        comp1: HashMap::new(),
        src2: vec![],
        tgt2: vec![],
        id2: vec![],
        vcomp: HashMap::new(),
        hcomp: HashMap::new(),
        basepoint: None,
    };
    let mut assoc = HashMap::new();
    let mut weak = false;
    loop {
        let (l, row) = ls.expect("end")?;
        let rest = || nums(l, &row[1..]);
        let triple = |m: &mut HashMap<(usize, usize), usize>| -> Result<()> {
            match rest()?.as_slice() {
                &[a, b, c] => {
                    m.insert((a, b), c);
                    Ok(())
                }
                _ => Err(perr(l, format!("{} <a> <b> <c>", row[0]))),
            }
        };
        match row[0] {
            "objects" => d.objects = num(l, row.get(1), "object count")?,
            "basepoint" => d.basepoint = Some(num(l, row.get(1), "basepoint")?),
            "src1" => d.src1 = rest()?,
            "tgt1" => d.tgt1 = rest()?,
            "id1" => d.id1 = rest()?,
            "src2" => d.src2 = rest()?,
            "tgt2" => d.tgt2 = rest()?,
            "id2" => d.id2 = rest()?,
            "comp1" => triple(&mut d.comp1)?,
            "vcomp" => triple(&mut d.vcomp)?,
            "hcomp" => triple(&mut d.hcomp)?,
            "assoc" => {
                weak = true;
                match rest()?.as_slice() {
                    &[a, b, c, p] => {
                        assoc.insert((a, b, c), p);
                    }
                    _ => return Err(perr(l, "assoc <f> <g> <h> <cell>")),
                }
            }
            "end" => break,
            other => return Err(perr(l, format!("a 2gpd table line, found `{other}`"))),
        }
    }
    if d.objects == 0 {
        return Err(perr(line, "an objects line"));
    }
    Ok(if weak { Object::WeakTwoGpd(check_weak_2groupoid(d, assoc)?) } else { Object::TwoGpd(TwoGroupoid::new(d)?) })
}

fn parse_sset(ls: &mut Lines, line: usize, toks: &[&str]) -> Result<Object> {
    if toks.len() != 4 || toks[2] != "trunc" {
        return Err(perr(line, "sset <name> trunc <N>"));
    }
    let trunc = num(line, toks.get(3), "truncation")?;
    let mut cosk = None;
    let (mut sizes, mut faces, mut degens) = (Vec::new(), Vec::new(), Vec::new());
    loop {
        let (l, row) = ls.expect("end")?;
        match row[0] {
            "cosk" => cosk = Some(num(l, row.get(1), "coskeletal level")?),
            "level" => {
                let n = num(l, row.get(1), "level number")?;
                if n != sizes.len() || row.get(2) != Some(&"size") {
                    return Err(perr(l, format!("level {} size <k>", sizes.len())));
                }
                let k = num(l, row.get(3), "level size")?;
                let (mut f, mut s) = (Vec::new(), Vec::new());
                for _ in 0..k {
                    let (l2, r) = ls.expect("a simplex row")?;
                    let bar = r.iter().position(|&t| t == "|").ok_or_else(|| perr(l2, "`faces | degeneracies`"))?;
                    f.extend(nums(l2, &r[..bar])?);
                    s.extend(nums(l2, &r[bar + 1..])?);
                }
                sizes.push(k);
                faces.push(f);
                if n < trunc {
                    degens.push(s);
                }
            }
            "end" => break,
            other => return Err(perr(l, format!("cosk, level or end, found `{other}`"))),
        }
    }
    if sizes.len() != trunc + 1 {
        return Err(perr(line, format!("{} levels", trunc + 1)));
    }
    Ok(Object::Sset(SimplicialSet::new(sizes, faces, degens, cosk)?))
}

pub fn group_to_text(name: &str, g: &FiniteGroup) -> String {
    let mut s = format!("group {name} order {}\n", g.order());
    for row in g.table() {
        s.push_str(&join(&row));
        s.push('\n');
    }
    s
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// The two groups, the action if nontrivial, and the `xmod` block.
pub fn xmod_to_text(name: &str, xm: &CrossedModule) -> String {
    let (n2, n1) = (format!("{name}_g2"), format!("{name}_g1"));
    let mut s = group_to_text(&n2, &xm.g2);
    s.push_str(&group_to_text(&n1, &xm.g1));
    let act = if xm.action.is_trivial() {
        "trivial".to_string()
    } else {
        let an = format!("{name}_act");
        let _ = writeln!(s, "action {an} {n1} {n2}");
        for row in xm.action.rows() {
            let _ = writeln!(s, "{}", join(&row));
        }
        an
    };
    let _ = writeln!(s, "xmod {name} {n2} {n1}\nphi {}\naction {act}\nend", join(&xm.phi.image));
    s
}

fn sorted_triples(m: &HashMap<(usize, usize), usize>) -> Vec<(usize, usize, usize)> {
    let mut v: Vec<_> = m.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
    v.sort_unstable();
    v
}

/// A `2gpd` block; associators are written when any is not an identity.
pub fn twogpd_to_text(name: &str, g: &impl TwoCategory, weak: bool) -> String {
    let d = g.data();
    let mut s = format!("2gpd {name}\nobjects {}\n", d.objects);
    if let Some(b) = d.basepoint {
        let _ = writeln!(s, "basepoint {b}");
    }
    for (k, v) in [("src1", &d.src1), ("tgt1", &d.tgt1), ("id1", &d.id1)] {
        let _ = writeln!(s, "{k} {}", join(v));
    }
    for (a, b, c) in sorted_triples(&d.comp1) {
        let _ = writeln!(s, "comp1 {a} {b} {c}");
    }
    for (k, v) in [("src2", &d.src2), ("tgt2", &d.tgt2), ("id2", &d.id2)] {
        let _ = writeln!(s, "{k} {}", join(v));
    }
    for (k, m) in [("vcomp", &d.vcomp), ("hcomp", &d.hcomp)] {
        for (a, b, c) in sorted_triples(m) {
            let _ = writeln!(s, "{k} {a} {b} {c}");
        }
    }
    if weak {
        for (a, b, c) in crate::weakmaps::composable_triples(g) {
            let _ = writeln!(s, "assoc {a} {b} {c} {}", g.assoc(a, b, c));
        }
    }
    s.push_str("end\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn groups_and_xmods_round_trip() {
        for (_, xm) in corpus::crossed_modules() {
            let mut ws = Workspace::new();
            ws.parse_str(&xmod_to_text("x", &xm)).unwrap();
            match ws.get("x") {
                Some(Object::Xmod(back)) => assert_eq!(back, &xm),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn twogpd_round_trip() {
        for (_, g) in corpus::two_groupoids() {
            let mut ws = Workspace::new();
            ws.parse_str(&twogpd_to_text("g", &g, false)).unwrap();
            match ws.get("g") {
                Some(Object::TwoGpd(back)) => assert_eq!(back, &g),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn sset_round_trip() {
        let x = corpus::non_minimal_sset();
        let mut ws = Workspace::new();
        ws.parse_str(&x.to_text("s")).unwrap();
        match ws.get("s") {
            Some(Object::Sset(back)) => assert_eq!(back, &x),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors() {
        let mut ws = Workspace::new();
        let bad = "group g order 3\n0 1 2\n1 0 2\n2 2 0\n";
        assert!(matches!(ws.parse_str(bad), Err(Error::NotAGroup(_))));
        let mut ws = Workspace::new();
        let dup = "group a cyclic 2\ngroup a cyclic 3\n";
        assert_eq!(
            ws.parse_str(dup),
            Err(Error::Parse { line: 2, expected: "a new name, `a` is already defined".into() })
        );
        let mut ws = Workspace::new();
        assert!(matches!(ws.parse_str("group a order 2\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Workspace::new().parse_str("frob x\n"), Err(Error::Parse { line: 1, .. })));
    }
}
