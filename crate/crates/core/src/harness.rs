//! Exhaustive instance enumeration and the theorem suite.
//!
//! Up-to-isomorphism posets on `n` elements are grown from those on `n - 1`
//! by adding a new maximal element above each downset, then deduplicated by
//! fingerprint and a full isomorphism test. Lattices on `n >= 2` elements are
//! `0 ⊕ P ⊕ 1` for posets `P` on `n - 2` elements that make this a lattice.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::completion::{
    admissibility, bl_completion_naive, bl_completion_with, bl_via_annihilators, bl_via_annihilators_of, dm_completion, dm_completion_oracle,
    is_normal_ideal, normal_closure, CompletionLattice, DClosure,
};
use crate::duality::{
    apply_operator, characterization_check, dist_join_agreement, distributive_join_detail, dm_jid_agreement,
    double_dual_check, eod_detail, esakia_detail, frame_dual_detail, int1_cl, int1_cl2, join_existence_check,
    prime_filters_oracle, proh_dual_detail, DualSpace, Operator,
};
use crate::error::{Error, Result};
use crate::generate::linear_sum;
use crate::io::PosetJson;
use crate::iso::{automorphism_count, fingerprint, is_isomorphic};
use crate::lattice::{is_lattice, Lattice};
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tower::{
    annihilator_embedding_witness, annihilator_indices, classify_lattice, family_poset, finitary_members,
    generated_sublattice, meet_closed_subsets, ph_members, proheyting_witness, sub_semilattice,
};

pub const POSET_CAP: usize = 7;
pub const LATTICE_CAP: usize = 8;
/// Largest base on which `Context::bl` filters downsets by D-closure.
pub const DIRECT_BL_MAX: usize = 12;
/// Wall-clock budget for a full run, in seconds; slower runs are flagged.
pub const SUITE_BUDGET_SECS: f64 = 300.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceKind {
    Posets,
    MeetSemilattices,
    Lattices,
    DistributiveLattices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedupe {
    Labeled,
    UpToIso,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub poset: Poset,
}

/// Poset isomorphism classes on exactly `n` elements, for each `n` up to
/// `max`, in generation order.
pub fn poset_classes_upto(max: usize) -> Vec<Vec<Poset>> {
    let mut out: Vec<Vec<Poset>> = vec![vec![Poset::from_rows(String::new(), Vec::new(), |_, _| true)]];
    for n in 1..=max {
        let mut buckets: HashMap<(usize, usize, Vec<(usize, usize, usize, usize)>), Vec<usize>> = HashMap::new();
        let mut reps: Vec<Poset> = Vec::new();
        for p in &out[n - 1] {
            for d in p.downsets() {
                let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                let q = Poset::from_rows(String::new(), names, |i, j| {
                    if j == n - 1 {
                        i == n - 1 || d.contains(i)
                    } else {
                        i != n - 1 && p.leq(i, j)
                    }
                });
                let key = fingerprint(&q);
                let bucket = buckets.entry(key).or_default();
                if bucket.iter().all(|&k| is_isomorphic(&reps[k], &q).is_none()) {
                    bucket.push(reps.len());
                    reps.push(q);
                }
            }
        }
        out.push(reps);
    }
    out
}

fn lattice_from_middle(p: &Poset, n: usize) -> Option<Poset> {
    let bottom = Poset::from_rows(String::new(), vec!["0".into()], |_, _| true);
    let top = Poset::from_rows(String::new(), vec!["1".into()], |_, _| true);
    let mid = Poset::from_rows(String::new(), (1..n - 1).map(|i| format!("x{i}")).collect(), |i, j| p.leq(i, j));
    let l = linear_sum(&linear_sum(&bottom, &mid), &top);
    is_lattice(&l).map(|_| l)
}

/// Lattice isomorphism classes on exactly `n` elements.
fn lattice_classes(n: usize, posets: &[Vec<Poset>]) -> Vec<Poset> {
    match n {
        0 => Vec::new(),
        1 => vec![Poset::from_rows(String::new(), vec!["0".into()], |_, _| true)],
        _ => posets[n - 2].iter().filter_map(|p| lattice_from_middle(p, n)).collect(),
    }
}

fn kind_tag(k: InstanceKind) -> &'static str {
    match k {
        InstanceKind::Posets => "P",
        InstanceKind::MeetSemilattices => "M",
        InstanceKind::Lattices => "L",
        InstanceKind::DistributiveLattices => "D",
    }
}

/// One size of one kind. Labeled streams are expanded lazily from the class
/// representatives.
#[derive(Clone, Debug)]
pub struct InstanceStream {
    pub kind: InstanceKind,
    pub n: usize,
    pub dedupe: Dedupe,
    classes: Vec<Poset>,
}

impl InstanceStream {
    pub fn classes(&self) -> &[Poset] {
        &self.classes
    }

    pub fn count(&self) -> usize {
        match self.dedupe {
            Dedupe::UpToIso => self.classes.len(),
            Dedupe::Labeled => {
                let fact: usize = (1..=self.n).product();
                self.classes.iter().map(|p| fact / automorphism_count(p)).sum()
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Instance> + '_ {
        let tag = kind_tag(self.kind);
        let n = self.n;
        self.classes.iter().enumerate().flat_map(move |(k, p)| {
            let base = format!("{tag}{n}.{k}");
            let items: Vec<Instance> = match self.dedupe {
                Dedupe::UpToIso => vec![Instance { id: base.clone(), poset: p.clone().with_name(base.clone()) }],
                Dedupe::Labeled => orbit(p)
                    .into_iter()
                    .enumerate()
                    .map(|(i, q)| {
                        let id = format!("{base}/{i}");
                        Instance { poset: q.with_name(id.clone()), id }
                    })
                    .collect(),
            };
            items.into_iter()
        })
    }
}

/// Distinct relabelings of `p`, in lexicographic permutation order.
pub fn orbit(p: &Poset) -> Vec<Poset> {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<Vec<bool>>> = BTreeSet::new();
    let mut out = Vec::new();
    loop {
        let q = p.permuted(&perm);
        if seen.insert(q.matrix()) {
            out.push(q);
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_cap(kind: InstanceKind, n: usize) -> Result<()> {
    let cap = if needs_full_posets(kind) { POSET_CAP } else { LATTICE_CAP };
    if n > cap {
        let kind = match kind {
            InstanceKind::Posets => "posets",
            InstanceKind::MeetSemilattices => "meet-semilattices",
            InstanceKind::Lattices => "lattices",
            InstanceKind::DistributiveLattices => "distributive lattices",
        };
        return Err(Error::CapExceeded { kind: kind.into(), n, cap });
    }
    Ok(())
}

fn needs_full_posets(kind: InstanceKind) -> bool {
    matches!(kind, InstanceKind::Posets | InstanceKind::MeetSemilattices)
}

fn stream_from(kind: InstanceKind, n: usize, dedupe: Dedupe, posets: &[Vec<Poset>]) -> InstanceStream {
    let classes = match kind {
        InstanceKind::Posets => posets[n].clone(),
        InstanceKind::MeetSemilattices => {
            posets[n].iter().filter(|p| Lattice::from_meet_semilattice((*p).clone()).is_ok()).cloned().collect()
        }
        InstanceKind::Lattices => lattice_classes(n, posets),
        InstanceKind::DistributiveLattices => lattice_classes(n, posets)
            .into_iter()
            .filter(|p| Lattice::new(p.clone()).map(|l| l.is_distributive()).unwrap_or(false))
            .collect(),
    };
    InstanceStream { kind, n, dedupe, classes }
}

/// Instances of `kind` on exactly `n` elements.
pub fn enumerate(kind: InstanceKind, n: usize, dedupe: Dedupe) -> Result<InstanceStream> {
    check_cap(kind, n)?;
    let need = if needs_full_posets(kind) { n } else { n.saturating_sub(2) };
    Ok(stream_from(kind, n, dedupe, &poset_classes_upto(need)))
}

/// Streams for every size `1..=max`.
pub fn enumerate_upto(kind: InstanceKind, max: usize, dedupe: Dedupe) -> Result<Vec<InstanceStream>> {
    check_cap(kind, max)?;
    let need = if needs_full_posets(kind) { max } else { max.saturating_sub(2) };
    let posets = poset_classes_upto(need);
    Ok((1..=max).map(|n| stream_from(kind, n, dedupe, &posets)).collect())
}

/// The meet-closed subsets of `b` that contain its top, as instances with
/// ids `<b>[k]`, paired with the subset of `b` they come from.
pub fn sub_semilattice_instances(id: &str, b: &Lattice) -> Vec<(Instance, Subset)> {
    meet_closed_subsets(b)
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let id = format!("{id}[{k}]");
            let poset = b.poset().induced(&s).0.with_name(id.clone());
            (Instance { id, poset }, s)
        })
        .collect()
}

/// First instance on which `property` is false.
pub fn find_counterexample<F>(property: F, streams: &[InstanceStream]) -> Option<Instance>
where
    F: Fn(&Poset) -> bool,
{
    streams.iter().flat_map(|s| s.iter()).find(|i| !property(&i.poset))
}

/// Deliberate corruption for self-tests of the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fault {
    /// D-closure returns only the downset closure.
    CorruptDClosure,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Context {
    pub fault: Option<Fault>,
}

impl Context {
    pub fn with_fault(fault: Fault) -> Self {
        Context { fault: Some(fault) }
    }

    pub fn dclosure(&self, l: &Lattice) -> DClosure {
        let dc = DClosure::from_lattice(l.clone());
        match self.fault {
            Some(Fault::CorruptDClosure) => dc.corrupted(),
            None => dc,
        }
    }

    /// BL via D-closure on small bases; bases above `DIRECT_BL_MAX` (which
    /// arise only as derived lattices) go through annihilators.
    pub fn bl(&self, l: &Lattice) -> CompletionLattice {
        if l.len() <= DIRECT_BL_MAX {
            bl_completion_with(self.dclosure(l))
        } else {
            bl_via_annihilators_of(self.dclosure(l))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    DmBasics,
    BlOracle,
    BlFrame,
    MaFrame,
    BlIso,
    SubKappaFrame,
    BlOfDm,
    RaEmbedding,
    CharProh,
    ProhImpliesJid,
    KappaJd,
    PhProps,
    OtherPossibilities,
    FiniteCollapse,
    DualChar,
    DualDistrJoins,
    DmDistJoins,
    ProhPriestley,
    Esakia,
    KfrmDual,
    Eod,
}

/// Which instances a theorem runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Every poset, and every lattice.
    Posets,
    Lattices,
    Distributive,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::DmBasics,
        TheoremId::BlOracle,
        TheoremId::BlFrame,
        TheoremId::MaFrame,
        TheoremId::BlIso,
        TheoremId::SubKappaFrame,
        TheoremId::BlOfDm,
        TheoremId::RaEmbedding,
        TheoremId::CharProh,
        TheoremId::ProhImpliesJid,
        TheoremId::KappaJd,
        TheoremId::PhProps,
        TheoremId::OtherPossibilities,
        TheoremId::FiniteCollapse,
        TheoremId::DualChar,
        TheoremId::DualDistrJoins,
        TheoremId::DmDistJoins,
        TheoremId::ProhPriestley,
        TheoremId::Esakia,
        TheoremId::KfrmDual,
        TheoremId::Eod,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::DmBasics => "dm-basics",
            TheoremId::BlOracle => "bl-oracle",
            TheoremId::BlFrame => "bl-frame",
            TheoremId::MaFrame => "ma-frame",
            TheoremId::BlIso => "bl-iso",
            TheoremId::SubKappaFrame => "sub-kappa-frame",
            TheoremId::BlOfDm => "bl-of-dm",
            TheoremId::RaEmbedding => "ra-embedding",
            TheoremId::CharProh => "char-proh",
            TheoremId::ProhImpliesJid => "proh-implies-jid",
            TheoremId::KappaJd => "kappa-jd",
            TheoremId::PhProps => "ph-props",
            TheoremId::OtherPossibilities => "other-possibilities",
            TheoremId::FiniteCollapse => "finite-collapse",
            TheoremId::DualChar => "dual-char",
            TheoremId::DualDistrJoins => "dual-distr-joins",
            TheoremId::DmDistJoins => "dm-dist-joins",
            TheoremId::ProhPriestley => "proh-priestley",
            TheoremId::Esakia => "esakia",
            TheoremId::KfrmDual => "kfrm-dual",
            TheoremId::Eod => "eod",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::DmBasics => "normal ideals: both enumeration routes agree, S^{uℓ} is a closure, DM L ≅ L for lattices",
            TheoremId::BlOracle => "D-ideals by filtering = intersections of annihilators = definition-level scan; DM ⊆ BL",
            TheoremId::BlFrame => "every join in BL A is distributive; A is join-dense in BL A and admissible joins are preserved",
            TheoremId::MaFrame => "A proHeyting ⟺ DM A = BL A ⟺ DM A Heyting ⟺ DM A frame ⟺ DM A closed under BL joins",
            TheoremId::BlIso => "A ≤ B ≤ BL A implies BL B ≅ BL A",
            TheoremId::SubKappaFrame => "A ≤ B ≤ BL A: B distributive ⟺ B is a sublattice of BL A ⟺ BL_fin B = B",
            TheoremId::BlOfDm => "BL(DM A) ≅ BL(pH A) ≅ BL(BL_fin A) ≅ BL A",
            TheoremId::RaEmbedding => "A ≤ B ≤ BL A: ⟨a,b⟩_A ↦ ⟨a,b⟩_B is an order-embedding",
            TheoremId::CharProh => "A proHeyting ⟺ BL(DM A) = DM A ⟺ pH(DM A) = DM A",
            TheoremId::ProhImpliesJid => "Heyting ⟹ proHeyting ⟹ JID",
            TheoremId::KappaJd => "BL_fin A = A ⟺ A distributive",
            TheoremId::PhProps => "pH A proHeyting; A = pH A ⟺ Heyting; pH A = BL A ⟺ pH A frame; DM(pH A) ≅ BL A ≅ BL(pH A)",
            TheoremId::OtherPossibilities => "the three tower coincidences BL_fin A = pH A, BL_fin(pH A) = DM A, BL_fin(DM A) = pH A",
            TheoremId::FiniteCollapse => "finite lattices: distributive = Heyting = proHeyting = JID = frame, BL_fin = pH = BL",
            TheoremId::DualChar => "Stone map onto Up(X); double dual; I A ≅ OpUp X, DM A ≅ DM(X), BL A ≅ BL(X); operator laws",
            TheoremId::DualDistrJoins => "⋁U distributive in DM(X) ⟺ ⋁U = int₁cl ⋃U; DM A JID ⟺ int₁cl₂ = int₁cl on upsets",
            TheoremId::DmDistJoins => "⋁_A S distributive ⟺ ⋁_{DM A} S distributive; dually s(⋁S) = cl ⋃s[S]",
            TheoremId::ProhPriestley => "A proHeyting ⟺ X∖↓U ∈ DM(X) for clopen U ⟺ X∖↓(U∖V) ∈ DM(X) for clopen upsets U, V",
            TheoremId::Esakia => "A Heyting ⟺ X∖↓U is a clopen upset for each clopen U",
            TheoremId::KfrmDual => "A frame ⟺ cl(U) is a clopen upset for each open upset U",
            TheoremId::Eod => "A complete ⟺ cl₂(U) is clopen for each open upset U; s(⋁S) = cl₂ ⋃s[S]",
        }
    }

    pub fn domain(self) -> Domain {
        match self {
            TheoremId::DmBasics => Domain::Posets,
            TheoremId::OtherPossibilities
            | TheoremId::DualChar
            | TheoremId::DualDistrJoins
            | TheoremId::ProhPriestley
            | TheoremId::Esakia
            | TheoremId::KfrmDual
            | TheoremId::Eod => Domain::Distributive,
            _ => Domain::Lattices,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.as_str() == s).ok_or_else(|| Error::UnknownTheoremId(s.to_string()))
    }
}

/// `all` or a comma-separated id list.
pub fn parse_suite(spec: &str) -> Result<Vec<TheoremId>> {
    if spec.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids: Vec<TheoremId> = spec.split(',').filter(|s| !s.trim().is_empty()).map(|s| s.trim().parse()).collect::<Result<_>>()?;
    if ids.is_empty() {
        return Err(Error::UnknownTheoremId(spec.to_string()));
    }
    ids.sort();
    ids.dedup();
    Ok(ids)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Everything needed to re-run a failed check in isolation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub instance: PosetJson,
    pub claim: String,
    pub witness: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instance: String,
    pub verdict: Verdict,
    /// Sub-cases evaluated (subsets, families, sub-semilattices, ...).
    pub checked: usize,
    /// Sub-cases whose precondition failed.
    pub skipped: usize,
    /// The skipped sub-cases, each with the unmet precondition.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped_cases: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

#[derive(Default)]
struct Outcome {
    checked: usize,
    skipped: usize,
    skipped_cases: Vec<String>,
    note: Option<String>,
    failure: Option<(String, Value, Value, Value)>,
}

impl Outcome {
    fn tick(&mut self) {
        self.checked += 1;
    }

    fn fail(&mut self, claim: &str, witness: Value, lhs: Value, rhs: Value) {
        if self.failure.is_none() {
            self.failure = Some((claim.to_string(), witness, lhs, rhs));
        }
    }

    /// Records `lhs == rhs` as one check.
    fn expect_eq<T: PartialEq + Serialize>(&mut self, claim: &str, witness: Value, lhs: T, rhs: T) -> bool {
        self.tick();
        if lhs != rhs {
            self.fail(claim, witness, json!(lhs), json!(rhs));
            return false;
        }
        true
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

fn sets(p: &Poset, v: &[Subset]) -> Value {
    json!(v.iter().map(|s| p.format_subset(s)).collect::<Vec<_>>())
}

fn same_sets(a: &[Subset], b: &[Subset]) -> bool {
    a == b
}

/// Runs one theorem on one instance.
pub fn run_theorem(ctx: &Context, id: TheoremId, instance: &Poset) -> TheoremReport {
    let start = Instant::now();
    let mut o = Outcome::default();
    let lattice = Lattice::new(instance.clone()).ok();
    match (id.domain(), &lattice) {
        (Domain::Posets, _) => check_dm_basics(ctx, instance, lattice.as_ref(), &mut o),
        (Domain::Lattices, Some(l)) => check_lattice_theorem(ctx, id, l, &mut o),
        (Domain::Distributive, Some(l)) if l.is_distributive() => check_distributive_theorem(ctx, id, l, &mut o),
        _ => o.note = Some("outside the theorem's domain".into()),
    }
    let verdict = if o.failed() {
        Verdict::Fail
    } else if o.checked == 0 {
        Verdict::Skipped
    } else {
        Verdict::Pass
    };
    let certificate = o.failure.map(|(claim, witness, lhs, rhs)| Certificate {
        instance: PosetJson::from_poset(instance),
        claim,
        witness,
        lhs,
        rhs,
    });
    TheoremReport {
        theorem: id.as_str().to_string(),
        instance: instance.name().to_string(),
        verdict,
        checked: o.checked,
        skipped: o.skipped,
        skipped_cases: o.skipped_cases,
        note: o.note,
        certificate,
        timing_us: Some(start.elapsed().as_micros() as u64),
    }
}

/// Re-runs a failed report from its certificate alone.
pub fn replay(ctx: &Context, report: &TheoremReport) -> Result<TheoremReport> {
    let cert = report.certificate.as_ref().ok_or_else(|| Error::Input("report has no certificate".into()))?;
    let p = cert.instance.to_poset()?;
    Ok(run_theorem(ctx, report.theorem.parse()?, &p))
}

fn check_dm_basics(_ctx: &Context, p: &Poset, l: Option<&Lattice>, o: &mut Outcome) {
    let fast = dm_completion(p);
    let oracle = dm_completion_oracle(p);
    o.expect_eq("DM by intersections = DM by filtering downsets", json!(null), sets(p, fast.members()), sets(p, oracle.members()));
    o.tick();
    if let Some(v) = fast.invariant_violation() {
        o.fail("DM completion invariants", json!(v), json!(false), json!(true));
    }
    let q = fast.to_poset();
    o.expect_eq("DM A is a lattice", json!(null), is_lattice(&q).is_some(), true);
    o.expect_eq("∅ is normal ⟺ A has no bottom", json!(null), fast.contains(&p.empty_set()), p.bottom().is_none());
    let all: Vec<Subset> = p.full_set().subsets().collect();
    for s in &all {
        let c = normal_closure(p, s);
        o.tick();
        if !s.is_subset(&c) || normal_closure(p, &c) != c || !is_normal_ideal(p, &c) {
            o.fail("S^{uℓ} is extensive, idempotent and normal", json!(p.format_subset(s)), json!(p.format_subset(&c)), json!(null));
        }
        let u = p.upper_bounds(s);
        o.tick();
        if p.upper_bounds(&p.lower_bounds(&u)) != u {
            o.fail("S^{uℓu} = S^u", json!(p.format_subset(s)), json!(p.format_subset(&p.upper_bounds(&p.lower_bounds(&u)))), json!(p.format_subset(&u)));
        }
        if let Some(m) = p.meet_of(s) {
            let lb = p.lower_bounds(s);
            o.tick();
            if !lb.contains(m) || !lb.iter().all(|x| p.leq(x, m)) {
                o.fail("meet is the greatest lower bound", json!(p.format_subset(s)), json!(p.label(m)), json!(null));
            }
        }
    }
    let downs = p.downsets();
    for a in &downs {
        for b in &downs {
            if a.is_subset(b) {
                o.tick();
                if !normal_closure(p, a).is_subset(&normal_closure(p, b)) {
                    o.fail("S^{uℓ} is monotone", json!([p.format_subset(a), p.format_subset(b)]), json!(false), json!(true));
                }
            }
        }
    }
    if let Some(l) = l {
        o.expect_eq("DM L ≅ L for a finite lattice", json!(null), is_isomorphic(&q, l.poset()).is_some(), true);
    }
}

fn materialize(c: &CompletionLattice, members: &[usize], name: &str) -> Lattice {
    Lattice::new(family_poset(c, members, name)).expect("sublattice of a completion")
}

fn check_lattice_theorem(ctx: &Context, id: TheoremId, l: &Lattice, o: &mut Outcome) {
    let p = l.poset();
    match id {
        TheoremId::BlOracle => {
            let bl = ctx.bl(l);
            let ann = bl_via_annihilators(p).expect("lattice");
            o.expect_eq("D-ideals = intersections of annihilators", json!(null), sets(p, bl.members()), sets(p, ann.members()));
            if p.len() <= 8 {
                let naive = bl_completion_naive(p).expect("lattice");
                o.expect_eq("D-ideals = definition-level scan", json!(null), sets(p, bl.members()), sets(p, &naive));
            }
            o.tick();
            if let Some(v) = bl.invariant_violation() {
                o.fail("BL completion invariants", json!(v), json!(false), json!(true));
            }
            o.expect_eq("∅ is not a D-ideal when A has 0", json!(null), bl.contains(&p.empty_set()), false);
            let dc = ctx.dclosure(l);
            for m in dm_completion(p).members() {
                o.expect_eq("every normal ideal is a D-ideal", json!(p.format_subset(m)), dc.is_d_ideal(m), true);
            }
            for s in p.full_set().subsets() {
                let max = p.maximal(&s);
                o.expect_eq(
                    "S admissible ⟺ max S admissible",
                    json!(p.format_subset(&s)),
                    admissibility(l, &s).is_admissible(),
                    admissibility(l, &max).is_admissible(),
                );
                let c = dc.close(&s);
                o.tick();
                if !s.is_subset(&c) || dc.close(&c) != c {
                    o.fail("D-closure is extensive and idempotent", json!(p.format_subset(&s)), json!(p.format_subset(&c)), json!(null));
                }
            }
            let downs = p.downsets();
            for a in &downs {
                for b in &downs {
                    if a.is_subset(b) {
                        o.tick();
                        if !dc.close(a).is_subset(&dc.close(b)) {
                            o.fail("D-closure is monotone", json!([p.format_subset(a), p.format_subset(b)]), json!(false), json!(true));
                        }
                    }
                }
            }
        }
        TheoremId::BlFrame => {
            let bl = ctx.bl(l);
            let w = if bl.len() <= 16 { bl.frame_witness_exhaustive() } else { bl.frame_witness() };
            o.tick();
            if let Some((x, fam)) = w {
                let names: Vec<String> = fam.iter().map(|&i| p.format_subset(bl.member(i))).collect();
                o.fail("BL A is a frame", json!({"x": p.format_subset(bl.member(x)), "family": names}), json!(false), json!(true));
            }
            let emb = bl.embedding().expect("principal ideals are D-ideals").to_vec();
            for i in 0..bl.len() {
                let below: Vec<usize> = (0..p.len()).filter(|&a| bl.member(i).contains(a)).map(|a| emb[a]).collect();
                o.expect_eq("each D-ideal is the join of the principal ideals in it", json!(p.format_subset(bl.member(i))), bl.join_of(&below), i);
            }
            for s in p.full_set().subsets() {
                let c = admissibility(l, &s);
                if c.is_admissible() {
                    let j = c.join.expect("join");
                    let idx: Vec<usize> = s.iter().map(|a| emb[a]).collect();
                    o.expect_eq("A ↪ BL A preserves admissible joins", json!(p.format_subset(&s)), bl.join_of(&idx), emb[j]);
                }
            }
        }
        TheoremId::MaFrame => {
            let dm = dm_completion(p);
            let bl = ctx.bl(l);
            let dml = dm.to_lattice();
            let proh = proheyting_witness(l).is_none();
            let equal = same_sets(dm.members(), bl.members());
            let heyting = dml.is_heyting();
            let frame = dml.is_distributive();
            let dm_idx: Vec<usize> = dm.members().iter().filter_map(|s| bl.index_of(s)).collect();
            let closed = dm_idx.len() == dm.len()
                && dm_idx.iter().all(|&i| dm_idx.iter().all(|&j| dm.contains(bl.member(bl.join(i, j)))));
            let sides = [proh, equal, heyting, frame];
            o.expect_eq("proHeyting ⟺ DM = BL ⟺ DM Heyting ⟺ DM frame", json!(null), json!(sides), json!(vec![proh; 4]));
            o.expect_eq("DM A closed under BL joins ⟺ DM = BL", json!(null), closed, equal);
            o.note = Some(if proh { "all four sides true" } else { "all four sides false" }.into());
        }
        TheoremId::BlIso | TheoremId::SubKappaFrame | TheoremId::RaEmbedding => check_sub_semilattices(ctx, id, l, o),
        TheoremId::BlOfDm => {
            let bl = ctx.bl(l);
            let target = bl.to_poset();
            let dm = dm_completion(p);
            let dm_idx: Vec<usize> = dm.members().iter().map(|s| bl.index_of(s).unwrap_or(usize::MAX)).collect();
            o.expect_eq("normal ideals are D-ideals", json!(null), dm_idx.contains(&usize::MAX), false);
            if o.failed() {
                return;
            }
            for (name, members) in [("DM", dm_idx), ("pH", ph_members(&bl)), ("BL_fin", finitary_members(&bl))] {
                let q = materialize(&bl, &members, name);
                let blq = ctx.bl(&q).to_poset();
                o.expect_eq(&format!("BL({name} A) ≅ BL A"), json!(name), is_isomorphic(&blq, &target).is_some(), true);
            }
        }
        TheoremId::CharProh => {
            let proh = proheyting_witness(l).is_none();
            let q = dm_completion(p).to_lattice();
            let blq = ctx.bl(&q);
            let bl_eq = blq.len() == q.len();
            let ph_eq = ph_members(&blq).len() == q.len();
            o.expect_eq("proHeyting ⟺ BL(DM A) = DM A ⟺ pH(DM A) = DM A", json!(null), json!([proh, bl_eq, ph_eq]), json!(vec![proh; 3]));
        }
        TheoremId::ProhImpliesJid => {
            let c = classify_lattice(l);
            o.tick();
            if (c.heyting && !c.proheyting) || (c.proheyting && !c.jid) {
                o.fail("Heyting ⟹ proHeyting ⟹ JID", json!(null), json!([c.heyting, c.proheyting, c.jid]), json!(null));
            }
        }
        TheoremId::KappaJd => {
            let bl = ctx.bl(l);
            let fin = finitary_members(&bl);
            o.expect_eq("BL_fin A = A ⟺ A distributive", json!(null), fin.len() == p.len(), l.is_distributive());
        }
        TheoremId::PhProps => {
            let bl = ctx.bl(l);
            let ph = ph_members(&bl);
            let q = materialize(&bl, &ph, "pH");
            o.expect_eq("pH A is proHeyting", json!(null), proheyting_witness(&q).is_none(), true);
            o.expect_eq("A = pH A ⟺ A Heyting", json!(null), ph.len() == p.len(), l.is_heyting());
            o.expect_eq("pH A = BL A ⟺ pH A frame", json!(null), ph.len() == bl.len(), q.is_distributive());
            let target = bl.to_poset();
            let dmq = dm_completion(q.poset()).to_poset();
            let blq = ctx.bl(&q).to_poset();
            o.expect_eq("DM(pH A) ≅ BL A", json!(null), is_isomorphic(&dmq, &target).is_some(), true);
            o.expect_eq("BL(pH A) ≅ BL A", json!(null), is_isomorphic(&blq, &target).is_some(), true);
        }
        TheoremId::FiniteCollapse => {
            let c = classify_lattice(l);
            o.expect_eq(
                "distributive = Heyting = proHeyting = JID = frame",
                json!(null),
                json!([c.heyting, c.proheyting, c.jid, c.frame_finite]),
                json!(vec![c.distributive; 4]),
            );
            let bl = ctx.bl(l);
            let all: Vec<usize> = (0..bl.len()).collect();
            o.expect_eq("BL_fin A = BL A", json!(null), finitary_members(&bl), all.clone());
            o.expect_eq("pH A = BL A", json!(null), ph_members(&bl), all);
        }
        TheoremId::DmDistJoins => {
            let dm = dm_completion(p);
            let emb = dm.embedding().expect("principal ideals are normal").to_vec();
            for s in p.full_set().subsets() {
                let idx: Vec<usize> = s.iter().map(|a| emb[a]).collect();
                let j = dm.join_of(&idx);
                let distributive_in_dm = (0..dm.len()).all(|x| {
                    let rhs = idx.iter().fold(dm.bottom(), |acc, &f| dm.join(acc, dm.meet(x, f)));
                    dm.meet(x, j) == rhs
                });
                o.expect_eq(
                    "⋁_A S distributive ⟺ ⋁_{DM A} S distributive",
                    json!(p.format_subset(&s)),
                    admissibility(l, &s).is_admissible(),
                    distributive_in_dm,
                );
            }
            if l.is_distributive() {
                let d = DualSpace::new(l.clone()).expect("distributive");
                for s in p.full_set().subsets() {
                    let a = dist_join_agreement(&d, &s);
                    o.expect_eq("⋁S distributive ⟺ s(⋁S) = cl ⋃s[S]", json!(p.format_subset(&s)), a.primal, a.dual);
                }
            }
        }
        _ => o.note = Some("not a lattice theorem".into()),
    }
}

fn check_sub_semilattices(ctx: &Context, id: TheoremId, b: &Lattice, o: &mut Outcome) {
    let pb = b.poset();
    let bl_b = if id == TheoremId::BlIso { Some(ctx.bl(b).to_poset()) } else { None };
    for a_sub in meet_closed_subsets(b) {
        let s = match sub_semilattice(b, &a_sub) {
            Ok(s) => s,
            Err(e) => {
                o.skipped += 1;
                o.skipped_cases.push(format!("{}: {e}", pb.format_subset(&a_sub)));
                continue;
            }
        };
        let w = json!(pb.format_subset(&a_sub));
        match id {
            TheoremId::BlIso => {
                let bl_a = ctx.bl(&s.inner).to_poset();
                o.expect_eq("BL B ≅ BL A", w, is_isomorphic(&bl_a, bl_b.as_ref().expect("computed")).is_some(), true);
            }
            TheoremId::RaEmbedding => {
                o.tick();
                if let Some(((a1, b1), (c1, d1))) = annihilator_embedding_witness(b, &s) {
                    let lab = |k: usize| s.inner.poset().label(k).to_string();
                    o.fail(
                        "⟨a,b⟩_A ⊆ ⟨c,d⟩_A ⟺ ⟨a,b⟩_B ⊆ ⟨c,d⟩_B",
                        json!({"A": pb.format_subset(&a_sub), "ab": [lab(a1), lab(b1)], "cd": [lab(c1), lab(d1)]}),
                        json!(null),
                        json!(null),
                    );
                }
            }
            TheoremId::SubKappaFrame => {
                let bl_a = ctx.bl(&s.inner);
                let img: Vec<usize> = s.images.iter().map(|m| bl_a.index_of(m).unwrap_or(usize::MAX)).collect();
                if img.contains(&usize::MAX) {
                    o.fail("↓b ∩ A is a D-ideal", w, json!(false), json!(true));
                    continue;
                }
                let dist = b.is_distributive();
                let preserves = (0..b.len()).all(|x| (0..b.len()).all(|y| img[b.join(x, y)] == bl_a.join(img[x], img[y])));
                let mut sorted = img.clone();
                sorted.sort_unstable();
                let fixed = generated_sublattice(&bl_a, &img).expect("members") == sorted;
                o.expect_eq("B distributive ⟺ B sublattice of BL A ⟺ BL_fin B = B", w, json!([dist, preserves, fixed]), json!(vec![dist; 3]));
            }
            _ => unreachable!(),
        }
    }
}

fn check_distributive_theorem(ctx: &Context, id: TheoremId, l: &Lattice, o: &mut Outcome) {
    let p = l.poset();
    let d = DualSpace::new(l.clone()).expect("distributive");
    let x = d.space();
    match id {
        TheoremId::OtherPossibilities => {
            let bl = ctx.bl(l);
            let ph = ph_members(&bl);
            let fin = finitary_members(&bl);
            let dm = dm_completion(p);
            let dm_idx: Vec<usize> = {
                let mut v: Vec<usize> = dm.members().iter().filter_map(|s| bl.index_of(s)).collect();
                v.sort_unstable();
                v
            };
            let ra = annihilator_indices(&bl);
            let sub = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
            let dist = |m: &[usize], name: &str| materialize(&bl, m, name).is_distributive();
            let kappa_h = sub(&ra, &fin);
            o.expect_eq("BL_fin A = pH A ⟺ κH(A) and pH A frame", json!(1), fin == ph, kappa_h && dist(&ph, "pH"));
            let fin_ph = generated_sublattice(&bl, &ph).expect("members");
            let proh = proheyting_witness(l).is_none();
            o.expect_eq("BL_fin(pH A) = DM A ⟺ proH and BL_fin(pH A) frame", json!(2), fin_ph == dm_idx, proh && dist(&fin_ph, "fin_ph"));
            let fin_dm = generated_sublattice(&bl, &dm_idx).expect("members");
            let rhs3 = sub(&dm_idx, &ph) && sub(&ra, &fin_dm) && dist(&ph, "pH");
            o.expect_eq("BL_fin(DM A) = pH A ⟺ DM ⊆ pH, R A ⊆ BL_fin(DM A), pH frame", json!(3), fin_dm == ph, rhs3);
        }
        TheoremId::DualChar => {
            o.tick();
            if let Some(v) = d.stone_violation() {
                o.fail("Stone map is an isomorphism onto Up(X)", json!(v), json!(false), json!(true));
            }
            let mut filters: Vec<Subset> = (0..x.len()).map(|k| d.filter(k).clone()).collect();
            filters.sort();
            o.expect_eq("prime filters are the ↑j, j join-irreducible", json!(null), sets(p, &filters), sets(p, &prime_filters_oracle(l)));
            o.expect_eq("double dual", json!(null), double_dual_check(&d), true);
            let c = characterization_check(&d);
            o.expect_eq("I A ≅ OpUp X, DM A ≅ DM X, BL A ≅ BL X, via s[-]", json!(null), json!([c.ideals_opup, c.dm, c.bl, c.image_map]), json!(vec![true; 4]));
            let all: Vec<Subset> = x.full_set().subsets().collect();
            let fam = d.families();
            for s in &all {
                for op in Operator::ALL {
                    let t = apply_operator(x, op, s);
                    let twice = apply_operator(x, op, &t);
                    let closure = matches!(op, Operator::Cl | Operator::Cl1 | Operator::Cl2);
                    let ok = twice == t && if closure { s.is_subset(&t) } else { t.is_subset(s) };
                    o.expect_eq("closures are extensive, interiors deflationary, both idempotent", json!([format!("{op:?}"), x.format_subset(s)]), ok, true);
                }
                o.expect_eq("int₁ cl₂ is idempotent", json!(x.format_subset(s)), x.format_subset(&int1_cl2(x, &int1_cl2(x, s))), x.format_subset(&int1_cl2(x, s)));
                o.expect_eq("int₁ cl is idempotent", json!(x.format_subset(s)), x.format_subset(&int1_cl(x, &int1_cl(x, s))), x.format_subset(&int1_cl(x, s)));
            }
            for u in &fam.op_up {
                for v in &fam.op_up {
                    if u.is_subset(v) {
                        for op in Operator::ALL {
                            o.expect_eq("operators are monotone", json!([x.format_subset(u), x.format_subset(v)]), apply_operator(x, op, u).is_subset(&apply_operator(x, op, v)), true);
                        }
                    }
                }
            }
            o.expect_eq("∅ and X are DM-sets and BL-sets", json!(null), [&fam.op_up, &fam.dm_sets, &fam.bl_sets].iter().all(|f| f.contains(&x.empty_set()) && f.contains(&x.full_set())), true);
        }
        TheoremId::DualDistrJoins => {
            let fam = d.families();
            let dms = &fam.dm_sets;
            let families: Vec<Vec<Subset>> = if dms.len() <= 16 {
                (0u64..(1u64 << dms.len())).map(|mask| (0..dms.len()).filter(|&i| mask >> i & 1 == 1).map(|i| dms[i].clone()).collect()).collect()
            } else {
                let mut v = vec![Vec::new()];
                for a in dms {
                    for b in dms {
                        v.push(vec![a.clone(), b.clone()]);
                    }
                }
                v
            };
            for f in families {
                let r = distributive_join_detail(x, dms, &f).expect("DM-sets");
                o.tick();
                if !r.holds() {
                    let names: Vec<String> = f.iter().map(|u| x.format_subset(u)).collect();
                    o.fail("⋁U distributive ⟺ ⋁U = int₁cl ⋃U", json!(names), json!(r.distributive), json!(r.criterion));
                }
            }
            let a = dm_jid_agreement(&d);
            o.expect_eq("DM A JID ⟺ int₁cl₂ = int₁cl on open upsets", json!(null), a.primal, a.dual);
        }
        TheoremId::ProhPriestley => {
            let (every, pairs) = proh_dual_detail(&d);
            o.expect_eq("proH ⟺ X∖↓U ∈ DM(X) for every U", json!(null), every.primal, every.dual);
            o.expect_eq("proH ⟺ X∖↓(U∖V) ∈ DM(X) for upsets U, V", json!(null), pairs.primal, pairs.dual);
        }
        TheoremId::Esakia => {
            let a = esakia_detail(&d);
            o.expect_eq("Heyting ⟺ X∖↓U clopen upset for clopen U", json!(null), a.primal, a.dual);
        }
        TheoremId::KfrmDual => {
            let a = frame_dual_detail(&d);
            o.expect_eq("frame ⟺ cl(U) clopen upset for open upsets U", json!(null), a.primal, a.dual);
        }
        TheoremId::Eod => {
            let a = eod_detail(&d);
            o.expect_eq("complete ⟺ cl₂(U) clopen for open upsets U", json!(null), a.primal, a.dual);
            for s in p.full_set().subsets() {
                o.expect_eq("s(⋁S) = cl₂ ⋃s[S]", json!(p.format_subset(&s)), join_existence_check(&d, &s), true);
            }
        }
        _ => o.note = Some("not a distributive-lattice theorem".into()),
    }
}

/// Instances for a suite run: lattices with at most `max_n` elements,
/// distributive ones among them, and posets with at most `max_n - 1`.
#[derive(Clone, Debug)]
pub struct SuiteInstances {
    pub posets: Vec<Instance>,
    pub lattices: Vec<Instance>,
}

pub fn suite_instances(max_n: usize, dedupe: Dedupe) -> Result<SuiteInstances> {
    check_cap(InstanceKind::Lattices, max_n)?;
    let pmax = max_n.saturating_sub(1);
    let all = poset_classes_upto(pmax.max(max_n.saturating_sub(2)));
    let posets = (1..=pmax).flat_map(|n| stream_from(InstanceKind::Posets, n, dedupe, &all).iter().collect::<Vec<_>>()).collect();
    let lattices = (1..=max_n).flat_map(|n| stream_from(InstanceKind::Lattices, n, dedupe, &all).iter().collect::<Vec<_>>()).collect();
    Ok(SuiteInstances { posets, lattices })
}

/// One report per applicable `(theorem, instance)` pair, in theorem order
/// and then instance order. Runs in parallel; output order is fixed.
pub fn run_suite(ctx: &Context, suite: &[TheoremId], inst: &SuiteInstances) -> Result<Vec<TheoremReport>> {
    if suite.is_empty() {
        return Err(Error::UnknownTheoremId(String::new()));
    }
    let mut jobs: Vec<(TheoremId, &Poset)> = Vec::new();
    for &t in suite {
        match t.domain() {
            Domain::Posets => {
                jobs.extend(inst.posets.iter().map(|i| (t, &i.poset)));
                jobs.extend(inst.lattices.iter().map(|i| (t, &i.poset)));
            }
            Domain::Lattices => jobs.extend(inst.lattices.iter().map(|i| (t, &i.poset))),
            Domain::Distributive => jobs.extend(
                inst.lattices
                    .iter()
                    .filter(|i| Lattice::new(i.poset.clone()).map(|l| l.is_distributive()).unwrap_or(false))
                    .map(|i| (t, &i.poset)),
            ),
        }
    }
    Ok(jobs.par_iter().map(|(t, p)| run_theorem(ctx, *t, p)).collect())
}

/// A suite run with its wall-clock time; `degraded` marks a run over budget.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub reports: Vec<TheoremReport>,
    pub elapsed_secs: f64,
    pub degraded: bool,
}

pub fn run_suite_timed(ctx: &Context, suite: &[TheoremId], inst: &SuiteInstances) -> Result<SuiteRun> {
    let start = Instant::now();
    let reports = run_suite(ctx, suite, inst)?;
    let elapsed_secs = start.elapsed().as_secs_f64();
    Ok(SuiteRun { reports, elapsed_secs, degraded: elapsed_secs > SUITE_BUDGET_SECS })
}

/// Per-theorem totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryLine {
    pub theorem: String,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub checked: usize,
    pub sub_skipped: usize,
}

pub fn summarize(reports: &[TheoremReport]) -> Vec<SummaryLine> {
    let mut out: Vec<SummaryLine> = Vec::new();
    for r in reports {
        if out.last().map(|s| s.theorem != r.theorem).unwrap_or(true) {
            out.push(SummaryLine { theorem: r.theorem.clone(), pass: 0, fail: 0, skipped: 0, checked: 0, sub_skipped: 0 });
        }
        let s = out.last_mut().expect("pushed");
        match r.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::Fail => s.fail += 1,
            Verdict::Skipped => s.skipped += 1,
        }
        s.checked += r.checked;
        s.sub_skipped += r.skipped;
    }
    out
}

/// JSON-lines rendering; timings are dropped unless asked for, so repeated
/// runs are byte-identical.
pub fn render_reports(reports: &[TheoremReport], timing: bool) -> String {
    let mut out = String::new();
    for r in reports {
        let mut r = r.clone();
        if !timing {
            r.timing_us = None;
        }
        out.push_str(&serde_json::to_string(&r).expect("report serializes"));
        out.push('\n');
    }
    out
}

pub fn any_failed(reports: &[TheoremReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{antichain, m3};

    #[test]
    fn class_counts() {
        let c = poset_classes_upto(5);
        let counts: Vec<usize> = c.iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16, 63]);
        let lat: Vec<usize> = (1..=6).map(|n| enumerate(InstanceKind::Lattices, n, Dedupe::UpToIso).unwrap().count()).collect();
        assert_eq!(lat, [1, 1, 1, 2, 5, 15]);
        let dist: Vec<usize> =
            (1..=6).map(|n| enumerate(InstanceKind::DistributiveLattices, n, Dedupe::UpToIso).unwrap().count()).collect();
        assert_eq!(dist, [1, 1, 1, 2, 3, 5]);
    }

    #[test]
    fn labeled_counts() {
        let s = enumerate(InstanceKind::Posets, 3, Dedupe::Labeled).unwrap();
        assert_eq!(s.count(), 19);
        assert_eq!(s.iter().count(), 19);
        assert_eq!(enumerate(InstanceKind::Posets, 4, Dedupe::Labeled).unwrap().count(), 219);
    }

    #[test]
    fn caps() {
        assert!(matches!(enumerate(InstanceKind::Posets, 8, Dedupe::UpToIso), Err(Error::CapExceeded { .. })));
        assert!(matches!(enumerate(InstanceKind::Lattices, 9, Dedupe::UpToIso), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn counterexamples() {
        let posets = enumerate_upto(InstanceKind::Posets, 3, Dedupe::UpToIso).unwrap();
        let c = find_counterexample(|p| is_lattice(p).is_some(), &posets).unwrap();
        assert!(is_isomorphic(&c.poset, &antichain(2)).is_some());
        let lats = enumerate_upto(InstanceKind::Lattices, 6, Dedupe::UpToIso).unwrap();
        let dist_heyting = |p: &Poset| {
            let l = Lattice::new(p.clone()).unwrap();
            !l.is_distributive() || l.is_heyting()
        };
        assert!(find_counterexample(dist_heyting, &lats).is_none());
    }

    #[test]
    fn ma_frame_on_m3() {
        let r = run_theorem(&Context::default(), TheoremId::MaFrame, &m3());
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.note.as_deref(), Some("all four sides false"));
    }

    #[test]
    fn fault_is_caught_and_replays() {
        let ctx = Context::with_fault(Fault::CorruptDClosure);
        let r = run_theorem(&ctx, TheoremId::BlOracle, &m3());
        assert_eq!(r.verdict, Verdict::Fail);
        let again = replay(&ctx, &r).unwrap();
        assert_eq!(again.verdict, Verdict::Fail);
        assert_eq!(again.certificate, r.certificate);
        assert_eq!(replay(&Context::default(), &r).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn suite_parsing() {
        assert_eq!(parse_suite("all").unwrap().len(), 21);
        assert_eq!(parse_suite("bl-iso,ma-frame").unwrap(), vec![TheoremId::MaFrame, TheoremId::BlIso]);
        assert!(matches!(parse_suite("nope"), Err(Error::UnknownTheoremId(_))));
    }
}
