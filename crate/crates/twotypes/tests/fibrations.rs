//! A crossed-module fibration has a nerve with the horn-lifting property in
//! dimensions 1 and 2; a morphism that is not onto lacks it.

use twotypes::corpus::crossed_modules;
use twotypes::nerve::{nerve, nerve_of_weak_functor, Nerve};
use twotypes::simpset::SimplicialMap;
use twotypes::twogpd::{xmod_morphism_to_2functor, xmod_to_2group};
use twotypes::weakmaps::WeakFunctor;
use twotypes::xmod::morphisms;

/// Every horn `Λⁿ_k` in the domain and every `n`-simplex below it whose other
/// faces match lift to an `n`-simplex over it.
fn lifts_horns(x: &Nerve, y: &Nerve, m: &SimplicialMap, n: usize) -> bool {
    (0..=n).all(|k| {
        x.sset.horns(n, k, usize::MAX).unwrap().iter().all(|h| {
            (0..y.sset.size(n)).all(|s| {
                let over = (0..=n).all(|i| i == k || y.sset.face(n, s, i) == m.levels[n - 1][h.faces[i].unwrap()]);
                !over || x.sset.fillers(h).iter().any(|&f| m.levels[n][f] == s)
            })
        })
    })
}

#[test]
fn fibrations_lift_low_horns() {
    let corpus: Vec<_> = crossed_modules().into_iter().filter(|(_, x)| x.g1.order() * x.g2.order() <= 8).collect();
    let (mut fib, mut nonfib) = (0, 0);
    for (dn, d) in &corpus {
        for (cn, c) in &corpus {
            let (gd, gc) = (xmod_to_2group(d), xmod_to_2group(c));
            let (nd, nc) = (nerve(&gd), nerve(&gc));
            for m in morphisms(d, c) {
                let f = WeakFunctor::from_strict(&gd, &gc, &xmod_morphism_to_2functor(&m));
                let nf = nerve_of_weak_functor(&gd, &gc, &nd, &nc, &f).unwrap();
                let lifts = lifts_horns(&nd, &nc, &nf, 1) && lifts_horns(&nd, &nc, &nf, 2);
                if m.is_fibration() {
                    assert!(lifts, "{dn} → {cn}");
                    fib += 1;
                } else if !lifts {
                    nonfib += 1;
                }
            }
        }
    }
    assert!(fib > 0 && nonfib > 0);
}
