//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use finlat::completion::{
    bl_completion, bl_completion_naive, bl_via_annihilators, dm_completion, dm_completion_oracle, normal_closure,
};
use finlat::duality::{characterization_check, double_dual_check, DualSpace};
use finlat::generate::{antichain, boolean, m3, n5};
use finlat::harness::{
    enumerate, enumerate_upto, run_suite_timed, suite_instances, summarize, Context, Dedupe, InstanceKind, TheoremId,
};
use finlat::iso::is_isomorphic;
use finlat::tower::{annihilator, bl_finitary, classify_lattice, ph_extension};
use finlat::{Lattice, Poset};

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const SUITE_BUDGET: Duration = Duration::from_secs(300);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let e = t.elapsed();
    o.detail = format!("{} [{:.2?}, budget {:?}]", o.detail, e, budget);
    if e > budget {
        o.ok = false;
    }
    o
}

fn lattices_upto(n: usize) -> Vec<Poset> {
    enumerate_upto(InstanceKind::Lattices, n, Dedupe::UpToIso)
        .unwrap()
        .iter()
        .flat_map(|s| s.iter().map(|i| i.poset).collect::<Vec<_>>())
        .collect()
}

/// Runs `f` and reports whether it held within the per-example budget.
fn within_budget(f: impl FnOnce() -> bool) -> bool {
    let t = Instant::now();
    f() && t.elapsed() <= GOLDEN_BUDGET
}

fn golden() -> Outcome {
    let mut failed = Vec::new();
    let bl_m3 = within_budget(|| {
        let p = m3();
        let bl = bl_completion(&p).unwrap();
        let naive = bl_completion_naive(&p).unwrap();
        bl.len() == 8 && bl.members() == naive.as_slice() && is_isomorphic(&bl.to_poset(), &boolean(3)).is_some()
    });
    let bl_n5 = within_budget(|| {
        let p = n5();
        let bl = bl_completion(&p).unwrap();
        let naive = bl_completion_naive(&p).unwrap();
        bl.len() == 6 && bl.members() == naive.as_slice() && bl.to_lattice().is_distributive()
    });
    let dm_anti = within_budget(|| {
        let p = antichain(2);
        let dm = dm_completion(&p);
        let oracle = dm_completion_oracle(&p);
        dm.len() == 4 && dm.members() == oracle.members() && is_isomorphic(&dm.to_poset(), &boolean(2)).is_some()
    });
    let ann_m3 = within_budget(|| {
        let p = m3();
        let a = p.index_of("a").unwrap();
        let ann = annihilator(&p, a, 0).unwrap();
        let want = p.subset_of_labels(&["0", "b", "c"]).unwrap();
        let is_d_ideal = bl_completion_naive(&p).unwrap().contains(&ann);
        let normal = dm_completion_oracle(&p).contains(&ann);
        ann == want && normal_closure(&p, &ann) == p.full_set() && is_d_ideal && !normal
    });
    for (name, ok) in [("BL(M3)", bl_m3), ("BL(N5)", bl_n5), ("DM(2-antichain)", dm_anti), ("<a,0> in M3", ann_m3)] {
        if !ok {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        pass("BL(M3) = 8 ≅ 2³, BL(N5) = 6 distributive, DM(2-antichain) = 4 ≅ 2², <a,0> = {0,b,c} with normal closure M3; naive oracles agree")
    } else {
        fail(format!("failed: {}", failed.join(", ")))
    }
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for s in enumerate_upto(InstanceKind::MeetSemilattices, 6, Dedupe::UpToIso).unwrap() {
        for i in s.iter() {
            count += 1;
            let a = bl_completion(&i.poset).unwrap();
            let b = bl_via_annihilators(&i.poset).unwrap();
            if a.members() != b.members() {
                return fail(format!("{} differs", i.id));
            }
        }
    }
    pass(format!("bl_completion = bl_via_annihilators member-for-member on all {count} meet-semilattices n ≤ 6"))
}

fn theorem_suite() -> Outcome {
    let inst = suite_instances(6, Dedupe::UpToIso).unwrap();
    let run = run_suite_timed(&Context::default(), &TheoremId::ALL, &inst).unwrap();
    let lines = summarize(&run.reports);
    for l in &lines {
        println!(
            "    {:<20} pass {:>4}  fail {:>2}  skipped {:>2}  checks {:>6}  sub-cases skipped {:>4}",
            l.theorem, l.pass, l.fail, l.skipped, l.checked, l.sub_skipped
        );
    }
    let failed: Vec<&str> = lines.iter().filter(|l| l.fail > 0).map(|l| l.theorem.as_str()).collect();
    let gated: Vec<String> = lines
        .iter()
        .filter(|l| l.theorem == "bl-iso" || l.theorem == "ra-embedding")
        .map(|l| format!("{} checked {} and skipped {} sub-semilattices", l.theorem, l.checked, l.sub_skipped))
        .collect();
    if !failed.is_empty() || run.degraded {
        fail(format!("failures in {failed:?}, degraded = {}", run.degraded))
    } else {
        pass(format!(
            "{} reports over {} lattices n ≤ 6 and {} posets n ≤ 5, zero failures; {}",
            run.reports.len(),
            inst.lattices.len(),
            inst.posets.len(),
            gated.join("; ")
        ))
    }
}

fn frame_property() -> Outcome {
    let mut count = 0;
    for p in lattices_upto(5) {
        let bl = bl_completion(&p).unwrap();
        count += 1;
        if let Some((x, fam)) = bl.frame_witness_exhaustive() {
            return fail(format!("{}: member {x} against family {fam:?}", p.name()));
        }
    }
    pass(format!("every join in BL(P) distributive over all member subsets, {count} bases n ≤ 5"))
}

fn duality_round_trip() -> Outcome {
    let mut count = 0;
    for p in lattices_upto(6) {
        let l = Lattice::new(p.clone()).unwrap();
        if !l.is_distributive() {
            continue;
        }
        count += 1;
        let d = DualSpace::new(l).unwrap();
        if let Some(v) = d.stone_violation() {
            return fail(format!("{}: {v}", p.name()));
        }
        if !double_dual_check(&d) {
            return fail(format!("{}: double dual", p.name()));
        }
        let c = characterization_check(&d);
        if !c.holds() {
            return fail(format!("{}: {c:?}", p.name()));
        }
    }
    pass(format!("Stone map onto Up(X), double dual, I ≅ OpUp, DM ≅ DM(X), BL ≅ BL(X) on {count} distributive lattices n ≤ 6"))
}

fn finite_collapse() -> Outcome {
    let mut count = 0;
    let mut distributive = 0;
    for p in lattices_upto(6) {
        let l = Lattice::new(p.clone()).unwrap();
        let c = classify_lattice(&l);
        count += 1;
        distributive += c.distributive as usize;
        if !(c.heyting == c.distributive && c.proheyting == c.distributive && c.jid == c.distributive) {
            return fail(format!("{}: {c:?}", p.name()));
        }
        let (_, fin) = bl_finitary(&p).unwrap();
        let (_, ph) = ph_extension(&p).unwrap();
        if !(fin.equals_bl && ph.equals_bl && fin.members == ph.members) {
            return fail(format!("{}: BL_fin {} pH {}", p.name(), fin.members.len(), ph.members.len()));
        }
    }
    pass(format!(
        "heyting = proheyting = jid = distributive and BL_fin = pH = BL on {count} lattices n ≤ 6 ({distributive} distributive, {} not)",
        count - distributive
    ))
}

fn enumeration_sanity() -> Outcome {
    let labeled = enumerate(InstanceKind::Posets, 3, Dedupe::Labeled).unwrap();
    let raw = common::labeled_posets(3).len();
    let streamed = labeled.iter().count();
    let lat = enumerate(InstanceKind::Lattices, 6, Dedupe::UpToIso).unwrap();
    let raw_lat = common::lattice_classes(6).len();
    if labeled.count() == 19 && streamed == 19 && raw == 19 && lat.count() == 15 && raw_lat == 15 {
        pass("labeled posets n = 3: 19 from the enumerator and the raw filter; lattices n = 6 up to iso: 15 from both")
    } else {
        fail(format!("labeled {}/{streamed} vs raw {raw}; lattices {} vs raw {raw_lat}", labeled.count(), lat.count()))
    }
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_finlat"))
            .args(["verify", "--suite", "all", "--max-n", "5"])
            .output()
            .expect("binary runs")
    };
    let a = run();
    let b = run();
    if !a.status.success() {
        return fail(format!("exit status {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return fail("outputs differ");
    }
    let lines = a.stdout.iter().filter(|&&c| c == b'\n').count();
    pass(format!("two `verify --suite all --max-n 5` runs byte-identical ({lines} lines, {} bytes)", a.stdout.len()))
}

fn main() {
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("golden examples", Box::new(golden)),
        ("oracle equivalence", Box::new(|| timed(ORACLE_BUDGET, oracle_equivalence))),
        ("theorem suite", Box::new(|| timed(SUITE_BUDGET, theorem_suite))),
        ("frame property", Box::new(frame_property)),
        ("duality round-trip", Box::new(duality_round_trip)),
        ("finite collapse", Box::new(finite_collapse)),
        ("enumeration sanity", Box::new(enumeration_sanity)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        println!("{} criterion {} ({name}): {}", if o.ok { "PASS" } else { "FAIL" }, k + 1, o.detail);
        failures += usize::from(!o.ok);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
