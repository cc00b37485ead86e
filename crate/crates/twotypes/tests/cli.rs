use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twotypes")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn every_shipped_file_checks() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut files: Vec<_> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(files.len() >= 6);
    for f in files {
        let o = run(&["check", f.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}: {}", f.display(), String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn invariants_of_z2_to_1() {
    let o = run(&["invariants", &data("z2to1.xmod")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "pi1: trivial; pi2: Z/2-order-2\n");
}

#[test]
fn pi0hom_counts_classes() {
    let o = run(&["pi0hom", &data("z2to1.xmod"), &data("z2to1.xmod")]);
    assert!(stdout(&o).contains("classes: 2\n"));
}

#[test]
fn roundtrip_first_line() {
    for f in ["z4z2.xmod", "interval.2gpd", "weak_z3neg.2gpd"] {
        let o = run(&["roundtrip", &data(f), "--strategy", "seeded:7"]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        assert_eq!(stdout(&o).lines().next(), Some("nerve∘reconstruct: isomorphic; pentagon: ok"), "{f}");
    }
}

#[test]
fn weak_data_file_has_nontrivial_associators() {
    let o = run(&["check", &data("weak_z3neg.2gpd")]);
    assert!(stdout(&o).contains("ok weak 2gpd"));
}

#[test]
fn cohomology_report() {
    let o = run(&["cohomology", "--gamma", "Z/4", "--coeff", "Z/6"]);
    let out = stdout(&o);
    assert!(out.starts_with("H1: Z/2-order-2\nH2: Z/2-order-2\n"), "{out}");
}

#[test]
fn sset2_rejects_non_minimal() {
    let o = run(&["sset2", &data("nonminimal.sset")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("minimal2: false") && out.contains("in SSet2: no"));
    assert_eq!(run(&["sset2", &data("z3neg.xmod")]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", &fixture("bad_xmod.xmod")]).status.code(), Some(1));
    assert_eq!(run(&["check", &fixture("truncated.xmod")]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["hom", &data("z4z2.xmod"), &data("z4z2.xmod"), "--cap", "5"]).status.code(), Some(3));
}

#[test]
fn nerve_output_parses_back() {
    let o = run(&["nerve", &data("z2.xmod"), "--trunc", "3"]);
    let dir = std::env::temp_dir().join(format!("twotypes-nerve-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n.sset");
    std::fs::write(&path, o.stdout).unwrap();
    let back = run(&["sset2", path.to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0), "{}", String::from_utf8_lossy(&back.stderr));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reports_are_deterministic() {
    let cases: Vec<Vec<String>> = vec![
        vec!["reconstruct".into(), data("z3neg.xmod"), "--seed".into(), "11".into()],
        vec!["enumerate-maps".into(), data("z2.xmod"), data("z3neg.xmod")],
        vec!["nerve".into(), data("interval.2gpd")],
        vec!["roundtrip".into(), data("nonminimal.sset")],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}
