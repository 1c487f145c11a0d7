use proptest::prelude::*;

use finlat::completion::{bl_completion, bl_via_annihilators, dm_completion, normal_closure, DClosure};
use finlat::duality::{double_dual_check, upset_lattice, DualSpace};
use finlat::harness::{enumerate, Dedupe, InstanceKind};
use finlat::iso::{is_isomorphic, verify_isomorphism};
use finlat::tower::classify_lattice;
use finlat::{Lattice, Poset, Subset};

/// A random order on `n` points: a random relation on `i < j`, closed
/// transitively.
fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
        let mut r = vec![vec![false; n]; n];
        for i in 0..n {
            r[i][i] = true;
            for j in i + 1..n {
                r[i][j] = bits[i * n + j];
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        Poset::from_matrix((0..n).map(|i| format!("x{i}")).collect(), &r).unwrap()
    }))
}

/// Random lattices as DM completions of random posets.
fn lattice_strategy(max: usize) -> impl Strategy<Value = Lattice> {
    poset_strategy(max).prop_map(|p| dm_completion(&p).to_lattice())
}

fn subset_strategy(n: usize) -> impl Strategy<Value = Subset> {
    proptest::collection::vec(any::<bool>(), n).prop_map(move |b| Subset::from_indices(n, (0..n).filter(|&i| b[i])))
}

fn poset_and_subsets(max: usize) -> impl Strategy<Value = (Poset, Subset, Subset)> {
    poset_strategy(max).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), subset_strategy(n), subset_strategy(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn galois_connection((p, s, t) in poset_and_subsets(10)) {
        let st = s.union(&t);
        prop_assert!(p.upper_bounds(&st).is_subset(&p.upper_bounds(&s)));
        prop_assert!(s.is_subset(&p.lower_bounds(&p.upper_bounds(&s))));
        let u = p.upper_bounds(&s);
        prop_assert_eq!(p.upper_bounds(&p.lower_bounds(&u)), u);
    }

    #[test]
    fn downset_closure_is_a_closure((p, s, t) in poset_and_subsets(10)) {
        let c = p.downset_closure(&s);
        prop_assert!(s.is_subset(&c));
        prop_assert_eq!(p.downset_closure(&c), c.clone());
        prop_assert!(c.is_subset(&p.downset_closure(&s.union(&t))));
        prop_assert!(p.is_downset(&c));
    }

    #[test]
    fn meets_are_greatest_lower_bounds((p, s, _t) in poset_and_subsets(10)) {
        if let Some(m) = p.meet_of(&s) {
            let lb = p.lower_bounds(&s);
            prop_assert!(lb.contains(m));
            prop_assert!(lb.iter().all(|x| p.leq(x, m)));
        }
    }

    #[test]
    fn normal_closure_is_a_closure((p, s, t) in poset_and_subsets(9)) {
        let c = normal_closure(&p, &s);
        prop_assert!(s.is_subset(&c));
        prop_assert_eq!(normal_closure(&p, &c), c.clone());
        prop_assert!(c.is_subset(&normal_closure(&p, &s.union(&t))));
    }

    #[test]
    fn dm_of_a_lattice_is_itself(l in lattice_strategy(7)) {
        let q = dm_completion(l.poset()).to_poset();
        let f = is_isomorphic(&q, l.poset());
        prop_assert!(f.is_some());
        prop_assert!(verify_isomorphism(&q, l.poset(), &f.unwrap()));
    }

    #[test]
    fn bl_routes_agree_and_contain_dm(l in lattice_strategy(7)) {
        prop_assume!(l.len() <= 14);
        let bl = bl_completion(l.poset()).unwrap();
        let ann = bl_via_annihilators(l.poset()).unwrap();
        prop_assert_eq!(bl.members(), ann.members());
        for m in dm_completion(l.poset()).members() {
            prop_assert!(bl.contains(m));
        }
        prop_assert!(bl.invariant_violation().is_none());
        prop_assert!(bl.frame_witness().is_none());
    }

    #[test]
    fn d_closure_is_a_closure(l in lattice_strategy(6), seed in any::<u64>()) {
        let n = l.len();
        prop_assume!(n <= 14);
        let dc = DClosure::from_lattice(l.clone());
        let s = Subset::from_indices(n, (0..n).filter(|i| seed >> (i % 64) & 1 == 1));
        let t = Subset::from_indices(n, (0..n).filter(|i| seed >> ((i + 17) % 64) & 1 == 1));
        let c = dc.close(&s);
        prop_assert!(s.is_subset(&c));
        prop_assert_eq!(dc.close(&c), c.clone());
        prop_assert!(c.is_subset(&dc.close(&s.union(&t))));
    }

    #[test]
    fn classification_chain(l in lattice_strategy(7)) {
        let c = classify_lattice(&l);
        prop_assert!(!c.heyting || c.proheyting);
        prop_assert!(!c.proheyting || c.jid);
        prop_assert!(c.all_equal());
    }

    #[test]
    fn permuted_poset_is_isomorphic(p in poset_strategy(8), seed in any::<u64>()) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let q = p.permuted(&perm);
        prop_assert!(verify_isomorphism(&p, &q, &perm));
        let f = is_isomorphic(&p, &q).unwrap();
        prop_assert!(verify_isomorphism(&p, &q, &f));
    }
}

#[test]
fn double_dual_over_all_small_spaces() {
    for n in 1..=5 {
        for inst in enumerate(InstanceKind::Posets, n, Dedupe::UpToIso).unwrap().iter() {
            let up = upset_lattice(&inst.poset);
            let d = DualSpace::new(up).unwrap();
            assert!(is_isomorphic(d.space(), &inst.poset).is_some(), "{}", inst.id);
            assert!(double_dual_check(&d), "{}", inst.id);
        }
    }
}
