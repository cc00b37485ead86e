use proptest::prelude::*;

use twotypes::cohom::CochainSpace;
use twotypes::corpus::{crossed_modules, two_groupoids};
use twotypes::fingroup::{find_isomorphism, make_group, FiniteGroup};
use twotypes::nerve::nerve;
use twotypes::reconstruct::{roundtrip_sset, Strategy as Fillers};
use twotypes::simpset::SimplicialSet;
use twotypes::text::{twogpd_to_text, xmod_to_text, Object, Workspace};
use twotypes::twogpd::{pi1_at, two_group_to_xmod, xmod_to_2group, TwoCategory};
use twotypes::weakmaps::{check_weak_functor, enumerate_weak_functors};
use twotypes::xmod::{find_xmod_isomorphism, CrossedModule};

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=8).prop_map(FiniteGroup::cyclic),
        Just(FiniteGroup::klein()),
        Just(FiniteGroup::symmetric(3)),
        ((1usize..=3), (1usize..=3)).prop_map(|(a, b)| FiniteGroup::cyclic(a).direct_product(&FiniteGroup::cyclic(b))),
    ]
}

fn xmod_index() -> impl Strategy<Value = usize> {
    0..crossed_modules().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn relabeled_tables_stay_groups(g in small_group(), seed in any::<u64>()) {
        let n = g.order();
        let mut p: Vec<usize> = (1..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..p.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            p.swap(i, (s >> 33) as usize % (i + 1));
        }
        let perm: Vec<usize> = std::iter::once(0).chain(p).collect();
        let mut inv = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            inv[v] = i;
        }
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| perm[g.mul(inv[a], inv[b])]).collect()).collect();
        let h = make_group(&rows).unwrap();
        prop_assert_eq!(find_isomorphism(&g, &h).is_some(), true);
    }

    #[test]
    fn xmod_round_trip_preserves_pi(i in xmod_index()) {
        let (_, xm) = &crossed_modules()[i];
        let g = xmod_to_2group(xm);
        let back = two_group_to_xmod(&g).unwrap();
        prop_assert!(find_xmod_isomorphism(xm, &back).is_some());
        prop_assert_eq!(pi1_at(&g, 0).order(), xm.pi1().order());
    }

    #[test]
    fn xmod_text_round_trip(i in xmod_index()) {
        let (_, xm) = &crossed_modules()[i];
        let mut ws = Workspace::new();
        ws.parse_str(&xmod_to_text("x", xm)).unwrap();
        let Some(Object::Xmod(back)) = ws.get("x") else { panic!("no crossed module") };
        prop_assert_eq!(back.phi.image_set(), xm.phi.image_set());
        prop_assert!(back.g2.elements().all(|a| back.phi(a) == xm.phi(a)));
        prop_assert_eq!(back.g2.table(), xm.g2.table());
        prop_assert_eq!(back.action.rows(), xm.action.rows());
    }

    #[test]
    fn coboundaries_are_cocycles(gi in 1usize..=4, ai in 1usize..=4, seed in any::<u64>()) {
        let (gamma, a) = (FiniteGroup::cyclic(gi), FiniteGroup::cyclic(ai));
        let cs = CochainSpace::new(&gamma, &a, None).unwrap();
        let c: Vec<usize> = (0..gi).map(|k| ((seed >> (4 * k)) as usize) % ai).collect();
        prop_assert!(cs.is_2cocycle(&cs.coboundary1(&c)));
        let c0 = cs.coboundary0((seed as usize) % ai);
        prop_assert!(cs.is_1cocycle(&c0));
    }

    #[test]
    fn relabeled_sset_keeps_sset2_verdict(seed in any::<u64>()) {
        let x = nerve(&xmod_to_2group(&CrossedModule::identity_on(&FiniteGroup::cyclic(2)))).sset.truncate(3);
        let sizes = x.sizes().to_vec();
        let mut s = seed;
        let perm: Vec<Vec<usize>> = sizes
            .iter()
            .map(|&k| {
                let mut p: Vec<usize> = (0..k).collect();
                for i in (1..k).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    p.swap(i, (s >> 33) as usize % (i + 1));
                }
                p
            })
            .collect();
        let y: SimplicialSet = x.relabel(&perm).unwrap();
        prop_assert_eq!(y.sizes(), x.sizes());
        let y4 = y.coskeleton(3, 4).unwrap();
        prop_assert!(y4.in_sset2().unwrap().in_sset2());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_fillers_round_trip(gi in 0..two_groupoids().len(), seed in any::<u64>()) {
        let (name, g) = &two_groupoids()[gi];
        let x = nerve(g).sset;
        let (r, rep) = roundtrip_sset(&x, Fillers::Seeded(seed)).unwrap();
        prop_assert!(rep.nerve_isomorphic && rep.pentagon_sweep, "{}", name);
        prop_assert_eq!((r.gpd.n0(), r.gpd.n1(), r.gpd.n2()), (g.n0(), g.n1(), g.n2()));
        // the text form of the reconstruction loads back
        let mut ws = Workspace::new();
        ws.parse_str(&twogpd_to_text("r", &r.gpd, true)).unwrap();
        prop_assert!(ws.get("r").is_some());
    }

    #[test]
    fn weak_functors_compose(i in 0usize..6, j in 0usize..6, a in 0usize..64, b in 0usize..64) {
        let gs: Vec<_> = two_groupoids().into_iter().filter(|(_, g)| g.n2() <= 8).map(|(_, g)| g).collect();
        let (g, h) = (&gs[i % gs.len()], &gs[j % gs.len()]);
        let fs = enumerate_weak_functors(g, h, false, false, 1_000_000).unwrap();
        let ks = enumerate_weak_functors(h, g, false, false, 1_000_000).unwrap();
        prop_assume!(!fs.is_empty() && !ks.is_empty());
        let (f, k) = (&fs[a % fs.len()], &ks[b % ks.len()]);
        prop_assert!(check_weak_functor(g, g, &f.then(g, k)).is_ok());
    }
}
