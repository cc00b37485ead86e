//! The `twotypes` command line. Reports are plain text with a fixed line
//! order. Exit codes: 0 success, 1 validation failure, 2 parse error,
//! 3 enumeration cap exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::cohom::{extension_xmod, CochainSpace};
use crate::error::{Budget, Error, Result};
use crate::fingroup::{make_action, FiniteGroup, GroupAction};
use crate::nerve::nerve_truncated;
use crate::reconstruct::{
    choose_fillers, invariants, reconstruct, roundtrip_2gpd, roundtrip_sset, Invariants, Strategy,
};
use crate::simpset::SimplicialSet;
use crate::text::{twogpd_to_text, Object, Workspace};
use crate::twogpd::hom::{hom_strict, hom_weak_trans, HomTwoGroupoid};
use crate::twogpd::{xmod_to_2group, TwoCategory, TwoGroupoid};
use crate::weakmaps::{enumerate_xmod_maps_with, hom_full, pi0_hom, xmod_homotopy_classes, Equivariance};
use crate::xmod::CrossedModule;

#[derive(Parser, Debug)]
#[command(name = "twotypes", version, about = "Crossed modules, 2-groupoids and their nerves")]
pub struct Cli {
    /// Enumeration cap (search steps) before giving up with exit code 3.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Load files and validate every object in them.
    Check { files: Vec<PathBuf> },
    /// π₀, π₁, π₂ of a crossed module, 2-groupoid or simplicial set.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// The nerve as a simplicial set.
    Nerve {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, default_value_t = 4)]
        trunc: usize,
    },
    /// Kan, 3-coskeletal and 2-minimal checks.
    Sset2 {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// A weak 2-groupoid from a simplicial set in SSet2 (or from a nerve).
    Reconstruct {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
    /// Weak maps between two crossed modules.
    EnumerateMaps {
        dom: PathBuf,
        cod: PathBuf,
        #[arg(long)]
        pointed: bool,
    },
    /// Size and π₀ of a hom-2-groupoid.
    Hom {
        dom: PathBuf,
        cod: PathBuf,
        #[arg(long)]
        pointed: bool,
        #[arg(long, value_enum, default_value_t = HomKind::Full)]
        kind: HomKind,
    },
    /// Homotopy classes of weak maps.
    Pi0hom {
        dom: PathBuf,
        cod: PathBuf,
        #[arg(long)]
        pointed: bool,
    },
    /// H¹ and H² of a finite group with coefficients in a finite abelian group.
    Cohomology {
        /// `Z/n`, `V4`, `S3` or `trivial`.
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        coeff: String,
        /// Right action `a^g` as rows `a^g_0 a^g_1 ..` separated by `;`.
        #[arg(long)]
        action: Option<String>,
    },
    /// Nerve, reconstruction and comparison in one go.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
}

#[derive(clap::Args, Debug)]
pub struct StrategyArgs {
    /// `first` or `seeded:<n>`.
    #[arg(long, default_value = "first")]
    strategy: String,
    /// Shorthand for `--strategy seeded:<n>`.
    #[arg(long)]
    seed: Option<u64>,
}

impl StrategyArgs {
    fn get(&self) -> Result<Strategy> {
        match self.seed {
            Some(n) => Ok(Strategy::Seeded(n)),
            None => self.strategy.parse(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum HomKind {
    Strict,
    WeakTrans,
    Full,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        Error::CapExceeded(_) => 3,
        _ => 1,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out`, errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, passed)) => {
            let _ = out.write_all(report.as_bytes());
            if passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(path: &Path) -> Result<Workspace> {
    let mut ws = Workspace::new();
    ws.load(path)?;
    Ok(ws)
}

/// What a command can work on: everything converts to a simplicial set.
enum Target {
    Xmod(CrossedModule),
    Gpd(TwoGroupoid),
    Weak(crate::weakmaps::WeakTwoGroupoid),
    Sset(SimplicialSet),
}

fn target(path: &Path, name: Option<&str>) -> Result<(String, Target)> {
    let ws = load(path)?;
    let (n, obj) = ws.target(name)?;
    let t = match obj {
        Object::Xmod(x) => Target::Xmod(x.clone()),
        Object::TwoGpd(g) => Target::Gpd(g.clone()),
        Object::WeakTwoGpd(g) => Target::Weak(g.clone()),
        Object::Sset(s) => Target::Sset(s.clone()),
        other => {
            return Err(Error::Malformed(format!(
                "`{n}` is a {}, not a crossed module, 2-groupoid or sset",
                other.kind()
            )))
        }
    };
    Ok((n.clone(), t))
}

fn gpd_target(path: &Path) -> Result<TwoGroupoid> {
    match target(path, None)?.1 {
        Target::Xmod(x) => Ok(xmod_to_2group(&x)),
        Target::Gpd(g) => Ok(g),
        _ => Err(Error::Malformed(format!("{}: expected a crossed module or strict 2-groupoid", path.display()))),
    }
}

fn xmod_target(path: &Path) -> Result<CrossedModule> {
    match target(path, None)?.1 {
        Target::Xmod(x) => Ok(x),
        _ => Err(Error::Malformed(format!("{}: expected a crossed module", path.display()))),
    }
}

fn sset_of(t: &Target, trunc: usize) -> SimplicialSet {
    match t {
        Target::Xmod(x) => nerve_truncated(&xmod_to_2group(x), trunc).sset,
        Target::Gpd(g) => nerve_truncated(g, trunc).sset,
        Target::Weak(g) => nerve_truncated(g, trunc).sset,
        Target::Sset(s) => s.clone(),
    }
}

/// Extends a short simplicial set to level 4 through its declared coskeletal
/// level (3 if none is declared).
fn to_level4(x: SimplicialSet) -> Result<SimplicialSet> {
    if x.trunc() >= 4 {
        return Ok(x);
    }
    let k = x.cosk().unwrap_or(3).min(x.trunc());
    x.coskeleton(k, 4)
}

fn describe_invariants(s: &mut String, inv: &Invariants, groups: &[(String, String)]) {
    let _ = writeln!(s, "pi0: {}", inv.pi0);
    for (c, (p1, p2)) in groups.iter().enumerate() {
        let _ = writeln!(s, "component {c}: pi1: {p1}; pi2: {p2}");
    }
}

fn gpd_invariants(g: &impl TwoCategory) -> String {
    let labels = crate::twogpd::pi0(g);
    let inv = invariants(g);
    let groups: Vec<(String, String)> = (0..inv.pi0)
        .map(|c| {
            let x = labels.iter().position(|&l| l == c).unwrap();
            (crate::twogpd::pi1_at(g, x).describe(), crate::twogpd::pi2_at(g, x).describe())
        })
        .collect();
    let mut s = String::new();
    describe_invariants(&mut s, &inv, &groups);
    s
}

fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let s = spec.trim();
    let bad = || Error::Parse { line: 0, expected: format!("a group (Z/n, V4, S3, trivial), found `{spec}`") };
    match s {
        "trivial" | "1" => Ok(FiniteGroup::trivial()),
        "V4" | "klein" => Ok(FiniteGroup::klein()),
        "S3" => Ok(FiniteGroup::symmetric(3)),
        _ => {
            let n: usize =
                s.strip_prefix("Z/").or_else(|| s.strip_prefix('Z')).and_then(|n| n.parse().ok()).ok_or_else(bad)?;
            if n == 0 {
                return Err(bad());
            }
            Ok(FiniteGroup::cyclic(n))
        }
    }
}

fn parse_action(table: &str, gamma: &FiniteGroup, a: &FiniteGroup) -> Result<GroupAction> {
    let rows = table
        .split(';')
        .map(|r| {
            r.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse { line: 0, expected: format!("an action entry, found `{t}`") })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    make_action(gamma, a, &rows)
}

fn hom_report(h: &HomTwoGroupoid) -> String {
    let g = &h.gpd;
    let k = crate::twogpd::pi0(g).into_iter().max().map_or(0, |m| m + 1);
    format!("objects: {}\n1-cells: {}\n2-cells: {}\npi0: {k}\n", g.n0(), g.n1(), g.n2())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// The report, and whether the property a command tests held (only `sset2`
/// can answer no without an error).
pub fn execute(cli: &Cli) -> Result<(String, bool)> {
    let cap = cli.cap;
    let mut s = String::new();
    let mut passed = true;
    match &cli.command {
        Command::Check { files } => {
            for f in files {
                let ws = load(f)?;
                for (name, obj) in ws.objects() {
                    let _ = writeln!(s, "ok {} {name}", obj.kind());
                }
            }
        }
        Command::Invariants { file, name } => match target(file, name.as_deref())?.1 {
            Target::Xmod(x) => {
                let _ = writeln!(s, "pi1: {}; pi2: {}", x.pi1().describe(), x.pi2().describe());
            }
            Target::Gpd(g) => s = gpd_invariants(&g),
            Target::Weak(g) => s = gpd_invariants(&g),
            Target::Sset(x) => {
                let x = to_level4(x)?;
                let r = reconstruct(&x, &choose_fillers(&x, Strategy::First)?)?;
                s = gpd_invariants(&r.gpd);
            }
        },
        Command::Nerve { file, name, trunc } => {
            if *trunc < 3 {
                return Err(Error::Malformed("nerve truncation must be at least 3".into()));
            }
            let (n, t) = target(file, name.as_deref())?;
            if let Target::Sset(_) = t {
                return Err(Error::Malformed(format!("`{n}` is already a simplicial set")));
            }
            s = sset_of(&t, *trunc).to_text(&format!("N{n}"));
        }
        Command::Sset2 { file, name } => {
            let (_, t) = target(file, name.as_deref())?;
            let x = to_level4(sset_of(&t, 4))?;
            let r = x.in_sset2()?;
            let _ = writeln!(
                s,
                "kan: {}\ncosk3: {}\nminimal2: {}\ncosk2-injective: {}",
                r.kan, r.cosk3, r.minimal2, r.cosk2_injective
            );
            if let Some(h) = &r.kan_counterexample {
                let faces: Vec<String> = h.faces.iter().map(|f| f.map_or("_".into(), |v| v.to_string())).collect();
                let _ = writeln!(s, "unfilled horn: dim {} hole {} faces {}", h.n, h.k, faces.join(" "));
            }
            if let Some((n, x, y)) = r.minimality_witness {
                let _ = writeln!(s, "homotopic rel boundary: level {n} simplices {x} {y}");
            }
            passed = r.in_sset2();
            let _ = writeln!(s, "in SSet2: {}", if passed { "yes" } else { "no" });
        }
        Command::Reconstruct { file, name, strategy } => {
            let (n, t) = target(file, name.as_deref())?;
            let x = to_level4(sset_of(&t, 4))?;
            let r = reconstruct(&x, &choose_fillers(&x, strategy.get()?)?)?;
            // always weak: with other fillers 1-cells are only invertible up to a 2-cell
            s = twogpd_to_text(&format!("{n}_rec"), &r.gpd, true);
        }
        Command::EnumerateMaps { dom, cod, pointed } => {
            let (h, g) = (xmod_target(dom)?, xmod_target(cod)?);
            let maps = enumerate_xmod_maps_with(&h, &g, *pointed, Equivariance::W5, cap)?;
            for (i, m) in maps.iter().enumerate() {
                let _ = writeln!(s, "map {i}: p1 {}; p2 {}; eps {}", join(&m.p1), join(&m.p2), join(&m.eps));
            }
            let _ = writeln!(s, "count: {}", maps.len());
        }
        Command::Hom { dom, cod, pointed, kind } => {
            let (d, c) = (gpd_target(dom)?, gpd_target(cod)?);
            let h = match kind {
                HomKind::Strict => hom_strict(&d, &c, *pointed, cap)?,
                HomKind::WeakTrans => hom_weak_trans(&d, &c, *pointed, cap)?,
                HomKind::Full => hom_full(&d, &c, *pointed, cap)?,
            };
            s = hom_report(&h);
        }
        Command::Pi0hom { dom, cod, pointed } => {
            let (td, tc) = (target(dom, None)?.1, target(cod, None)?.1);
            let labels = match (td, tc) {
                (Target::Xmod(h), Target::Xmod(g)) => xmod_homotopy_classes(&h, &g, *pointed).1,
                _ => pi0_hom(&gpd_target(dom)?, &gpd_target(cod)?, *pointed, cap)?.1,
            };
            let _ = writeln!(s, "maps: {}\nclasses: {}", labels.len(), labels.iter().max().map_or(0, |m| m + 1));
        }
        Command::Cohomology { gamma, coeff, action } => {
            let (g, a) = (parse_group(gamma)?, parse_group(coeff)?);
            let act = action.as_deref().map(|t| parse_action(t, &g, &a)).transpose()?;
            let cs = CochainSpace::new(&g, &a, act.as_ref())?;
            let (h1, h2) = (cs.h1(), cs.h2(cap)?);
            let _ = writeln!(s, "H1: {}\nH2: {}", h1.describe(), h2.describe());
            if cs.is_trivial_action() {
                let xm = extension_xmod(&g, &a, None, false, cap)?;
                let _ = writeln!(s, "extension crossed module: |G2| = {}, |G1| = {}", xm.g2.order(), xm.g1.order());
                let _ = writeln!(s, "pi1: {}; pi2: {}", xm.pi1().describe(), xm.pi2().describe());
            }
        }
        Command::Roundtrip { file, name, strategy } => {
            let st = strategy.get()?;
            let (_, t) = target(file, name.as_deref())?;
            let (_, rep) = match &t {
                Target::Xmod(x) => roundtrip_2gpd(&xmod_to_2group(x), st)?,
                Target::Gpd(g) => roundtrip_2gpd(g, st)?,
                Target::Weak(g) => roundtrip_2gpd(g, st)?,
                Target::Sset(x) => roundtrip_sset(&to_level4(x.clone())?, st)?,
            };
            if !rep.nerve_isomorphic || rep.source_isomorphic == Some(false) {
                return Err(Error::violation("round trip", vec![]));
            }
            s = format!("{rep}\n");
        }
    }
    Ok((s, passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("twotypes").chain(args.iter().copied()), &mut o, &mut e);
        (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
    }

    #[test]
    fn cohomology_command() {
        let (code, out, _) = run_str(&["cohomology", "--gamma", "Z/2", "--coeff", "Z/2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("H1: Z/2-order-2\nH2: Z/2-order-2\n"));
        let (code, _, _) = run_str(&["cohomology", "--gamma", "Z/2", "--coeff", "S3"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_str(&["cohomology", "--gamma", "Q8", "--coeff", "Z/2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn sign_action_flag() {
        let (code, out, _) = run_str(&["cohomology", "--gamma", "Z/2", "--coeff", "Z/3", "--action", "0 0; 1 2; 2 1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "H1: trivial\nH2: trivial\n");
    }

    #[test]
    fn usage_errors_are_parse_errors() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("Z/4").unwrap().order(), 4);
        assert_eq!(parse_group("Z3").unwrap().order(), 3);
        assert!(parse_group("Z/0").is_err());
    }
}
