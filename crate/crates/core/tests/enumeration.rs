mod common;

use finlat::harness::{enumerate, find_counterexample, enumerate_upto, sub_semilattice_instances, Dedupe, InstanceKind};
use finlat::iso::{fingerprint, is_isomorphic};
use finlat::lattice::{is_lattice, is_meet_semilattice, Lattice};
use finlat::tower::classify;

fn stream_matrices(kind: InstanceKind, n: usize, dedupe: Dedupe) -> Vec<Vec<Vec<bool>>> {
    enumerate(kind, n, dedupe).unwrap().iter().map(|i| i.poset.matrix()).collect()
}

#[test]
fn labeled_posets_match_raw_filter() {
    for n in 1..=4 {
        let raw = common::labeled_posets(n);
        let s = enumerate(InstanceKind::Posets, n, Dedupe::Labeled).unwrap();
        assert_eq!(s.count(), raw.len(), "n={n}");
        let mut got = stream_matrices(InstanceKind::Posets, n, Dedupe::Labeled);
        let mut want = raw;
        got.sort();
        want.sort();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn unlabeled_posets_match_raw_filter() {
    for n in 1..=5 {
        let all: Vec<usize> = (0..n).collect();
        let want = common::iso_classes(&common::labeled_posets(n), &all);
        let got = common::iso_classes(&stream_matrices(InstanceKind::Posets, n, Dedupe::UpToIso), &all);
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn lattices_match_raw_filter() {
    for n in 2..=6 {
        let want = common::lattice_classes(n);
        let s = enumerate(InstanceKind::Lattices, n, Dedupe::UpToIso).unwrap();
        assert_eq!(s.count(), want.len(), "n={n}");
        for i in s.iter() {
            let r = i.poset.matrix();
            assert!(common::raw_is_lattice(&r));
            assert_eq!(i.poset.bottom(), Some(0));
            assert_eq!(i.poset.top(), Some(n - 1));
            let mid: Vec<usize> = (1..n - 1).collect();
            assert!(want.contains(&common::canonical(&r, &mid)), "{}", i.id);
        }
    }
}

#[test]
fn distributive_and_meet_semilattice_filters() {
    for n in 2..=6 {
        let want = common::lattice_classes(n).into_iter().filter(common::raw_is_distributive).count();
        assert_eq!(enumerate(InstanceKind::DistributiveLattices, n, Dedupe::UpToIso).unwrap().count(), want);
    }
    for n in 1..=5 {
        let all: Vec<usize> = (0..n).collect();
        let raw: Vec<_> = common::labeled_posets(n).into_iter().filter(common::raw_is_meet_semilattice).collect();
        let want = common::iso_classes(&raw, &all);
        let got = common::iso_classes(&stream_matrices(InstanceKind::MeetSemilattices, n, Dedupe::UpToIso), &all);
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn up_to_iso_has_one_representative_per_class() {
    let s = enumerate(InstanceKind::Posets, 6, Dedupe::UpToIso).unwrap();
    let reps: Vec<_> = s.iter().collect();
    assert_eq!(reps.len(), 318);
    for (a, x) in reps.iter().enumerate() {
        for y in &reps[a + 1..] {
            if fingerprint(&x.poset) == fingerprint(&y.poset) {
                assert!(is_isomorphic(&x.poset, &y.poset).is_none(), "{} ≅ {}", x.id, y.id);
            }
        }
    }
}

#[test]
fn labeled_stream_fixed_counts() {
    let counts: Vec<usize> =
        (1..=5).map(|n| enumerate(InstanceKind::Posets, n, Dedupe::Labeled).unwrap().count()).collect();
    assert_eq!(counts, [1, 3, 19, 219, 4231]);
    assert_eq!(enumerate(InstanceKind::Posets, 5, Dedupe::Labeled).unwrap().iter().count(), 4231);
}

#[test]
fn counterexample_searches() {
    let lats = enumerate_upto(InstanceKind::Lattices, 6, Dedupe::UpToIso).unwrap();
    let jid_dist = |p: &finlat::Poset| {
        let c = classify(p).unwrap();
        !c.jid || c.distributive
    };
    assert!(find_counterexample(jid_dist, &lats).is_none());
    let posets = enumerate_upto(InstanceKind::Posets, 3, Dedupe::UpToIso).unwrap();
    let c = find_counterexample(|p| is_lattice(p).is_some(), &posets).unwrap();
    assert_eq!(c.poset.len(), 2);
    assert!(c.poset.top().is_none() && c.poset.bottom().is_none());
}

#[test]
fn sub_semilattice_stream() {
    let b = Lattice::new(finlat::generate::boolean(2)).unwrap();
    let subs = sub_semilattice_instances("B2", &b);
    for (inst, s) in &subs {
        assert!(s.contains(b.top()));
        assert!(is_meet_semilattice(&inst.poset).is_some(), "{}", inst.id);
    }
    // {1}, {a,1}, {b,1}, {0,1}, {0,a,1}, {0,b,1}, {0,a,b,1}
    assert_eq!(subs.len(), 7);
}

#[test]
fn caps_are_enforced() {
    assert!(enumerate(InstanceKind::Posets, 8, Dedupe::UpToIso).is_err());
    assert!(enumerate(InstanceKind::MeetSemilattices, 8, Dedupe::UpToIso).is_err());
    assert!(enumerate(InstanceKind::Lattices, 9, Dedupe::UpToIso).is_err());
    assert!(enumerate(InstanceKind::Lattices, 8, Dedupe::UpToIso).is_ok());
}
