//! Dedekind-MacNeille completion by normal ideals and Bruns-Lakser completion
//! by D-ideals, with brute-force routes kept alongside as oracles.
//!
//! Members of a [`CompletionLattice`] are downsets of the base, sorted in the
//! canonical [`Subset`] order. Meet is intersection; join is the kind's
//! closure of the union.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::hasse_dot;
use crate::lattice::Lattice;
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tower::rel_annihilator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CompletionKind {
    DM,
    BL,
    /// A family closed under intersection with no closure of its own; joins
    /// are the least member above the union.
    Plain,
}

impl CompletionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CompletionKind::DM => "DM",
            CompletionKind::BL => "BL",
            CompletionKind::Plain => "plain",
        }
    }
}

/// `S^{uℓ}`.
pub fn normal_closure(p: &Poset, s: &Subset) -> Subset {
    p.lower_bounds(&p.upper_bounds(s))
}

/// `D = D^{uℓ}`, checked against the intersection of the principal ideals
/// containing `D`.
pub fn is_normal_ideal(p: &Poset, d: &Subset) -> bool {
    let by_bounds = normal_closure(p, d) == *d;
    let mut meet = p.full_set();
    for x in 0..p.len() {
        if d.is_subset(p.down(x)) {
            meet.intersect_with(p.down(x));
        }
    }
    let by_principals = meet == *d;
    debug_assert_eq!(by_bounds, by_principals);
    by_bounds && by_principals
}

/// Closes the principal ideals and the whole set under intersection.
pub fn dm_completion(p: &Poset) -> CompletionLattice {
    let mut seeds: Vec<Subset> = (0..p.len()).map(|a| p.down(a).clone()).collect();
    seeds.push(p.full_set());
    let members = intersection_closure(seeds);
    CompletionLattice::new(p.clone(), CompletionKind::DM, members, None)
}

/// Oracle route: filter every downset through [`is_normal_ideal`].
pub fn dm_completion_oracle(p: &Poset) -> CompletionLattice {
    let members = p.downsets().into_iter().filter(|d| is_normal_ideal(p, d)).collect();
    CompletionLattice::new(p.clone(), CompletionKind::DM, members, None)
}

/// Least family containing `seeds` and closed under pairwise intersection,
/// canonically sorted.
pub fn intersection_closure(seeds: Vec<Subset>) -> Vec<Subset> {
    let mut set: std::collections::BTreeSet<Subset> = seeds.into_iter().collect();
    let mut frontier: Vec<Subset> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<Subset> = set.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &current {
                let c = a.intersection(b);
                if !set.contains(&c) {
                    set.insert(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    set.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Admissible,
    NotAdmissible { witness: usize },
    NoJoin,
}

/// Outcome of an admissibility test, re-checkable by [`AdmissibleCertificate::recheck`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleCertificate {
    pub subset: Subset,
    pub join: Option<usize>,
    pub verdict: Verdict,
}

impl AdmissibleCertificate {
    pub fn is_admissible(&self) -> bool {
        self.verdict == Verdict::Admissible
    }

    pub fn recheck(&self, l: &Lattice) -> bool {
        *self == admissibility(l, &self.subset)
    }
}

fn distributes_at(l: &Lattice, s: &Subset, j: usize, a: usize) -> bool {
    let lhs = l.meet(a, j);
    let rhs = s.iter().fold(l.bottom(), |acc, x| l.join(acc, l.meet(a, x)));
    lhs == rhs
}

/// Admissibility over a lattice: `a∧⋁S = ⋁{a∧s}` for every `a`.
pub fn admissibility(l: &Lattice, s: &Subset) -> AdmissibleCertificate {
    let j = match l.poset().join_of(s) {
        Some(j) => j,
        None => return AdmissibleCertificate { subset: s.clone(), join: None, verdict: Verdict::NoJoin },
    };
    debug_assert_eq!(j, l.join_of(s));
    let verdict = match (0..l.len()).find(|&a| !distributes_at(l, s, j, a)) {
        Some(witness) => Verdict::NotAdmissible { witness },
        None => Verdict::Admissible,
    };
    AdmissibleCertificate { subset: s.clone(), join: Some(j), verdict }
}

pub fn is_admissible(p: &Poset, s: &Subset) -> Result<AdmissibleCertificate> {
    let l = Lattice::from_meet_semilattice(p.clone())?;
    Ok(admissibility(&l, s))
}

/// Precomputed admissible antichains of a meet-semilattice, for repeated
/// D-closure. `S` is admissible exactly when its maximal elements are, so
/// antichains suffice.
#[derive(Clone, Debug)]
pub struct DClosure {
    lattice: Lattice,
    admissible: OnceLock<Vec<(Subset, usize)>>,
    corrupt: bool,
}

impl DClosure {
    pub fn new(p: &Poset) -> Result<DClosure> {
        Ok(Self::from_lattice(Lattice::from_meet_semilattice(p.clone())?))
    }

    /// The antichain table is built on first use.
    pub fn from_lattice(lattice: Lattice) -> DClosure {
        DClosure { lattice, admissible: OnceLock::new(), corrupt: false }
    }

    /// Fault injection: the closure stops after taking the downset closure.
    pub fn corrupted(mut self) -> DClosure {
        self.corrupt = true;
        self
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Admissible antichains of size 0 or at least 2, with their joins.
    pub fn admissible_antichains(&self) -> &[(Subset, usize)] {
        self.admissible.get_or_init(|| {
            let l = &self.lattice;
            let p = l.poset();
            let mut v: Vec<(Subset, usize)> = p
                .antichains(&p.full_set())
                .into_iter()
                .filter(|a| a.count() != 1)
                .filter_map(|a| {
                    let c = admissibility(l, &a);
                    c.is_admissible().then(|| (a, c.join.expect("admissible sets have joins")))
                })
                .collect();
            v.sort_by(|x, y| x.0.cmp(&y.0));
            v
        })
    }

    /// Least D-ideal containing `s`.
    pub fn close(&self, s: &Subset) -> Subset {
        let p = self.lattice.poset();
        let mut e = p.downset_closure(s);
        if self.corrupt {
            return e;
        }
        loop {
            let mut grew = false;
            for (a, j) in self.admissible_antichains() {
                if !e.contains(*j) && a.is_subset(&e) {
                    e.union_with(p.down(*j));
                    grew = true;
                }
            }
            if !grew {
                return e;
            }
        }
    }

    pub fn is_d_ideal(&self, s: &Subset) -> bool {
        self.lattice.poset().is_downset(s) && self.close(s) == *s
    }
}

pub fn d_closure(p: &Poset, s: &Subset) -> Result<Subset> {
    Ok(DClosure::new(p)?.close(s))
}

/// All D-ideals, by filtering the downsets.
pub fn bl_completion(p: &Poset) -> Result<CompletionLattice> {
    Ok(bl_completion_with(DClosure::new(p)?))
}

pub fn bl_completion_with(dc: DClosure) -> CompletionLattice {
    let p = dc.lattice().poset().clone();
    let members = p.downsets().into_iter().filter(|d| dc.is_d_ideal(d)).collect();
    CompletionLattice::new(p, CompletionKind::BL, members, Some(dc))
}

/// Definition-level oracle: every subset of the base that is a downset and
/// contains the join of each admissible subset of it. Exponential in `n`.
pub fn bl_completion_naive(p: &Poset) -> Result<Vec<Subset>> {
    let l = Lattice::from_meet_semilattice(p.clone())?;
    assert!(p.len() <= 14, "naive D-ideal scan over {} elements", p.len());
    let mut out: Vec<Subset> = p
        .full_set()
        .subsets()
        .filter(|e| p.is_downset(e))
        .filter(|e| {
            e.subsets().all(|s| {
                let c = admissibility(&l, &s);
                !c.is_admissible() || e.contains(c.join.expect("join"))
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Intersections of relative annihilators.
pub fn bl_via_annihilators(p: &Poset) -> Result<CompletionLattice> {
    Ok(bl_via_annihilators_of(DClosure::new(p)?))
}

/// Intersection closure of the relative annihilators; polynomial in `|L|`
/// apart from the size of the answer.
pub fn bl_via_annihilators_of(dc: DClosure) -> CompletionLattice {
    let p = dc.lattice().poset().clone();
    let n = p.len();
    let mut anns = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            anns.push(rel_annihilator(dc.lattice(), a, b));
        }
    }
    let members = intersection_closure(anns);
    CompletionLattice::new(p, CompletionKind::BL, members, Some(dc))
}

/// A family of downsets of `base` closed under intersection, with meet and
/// join tables over member indices.
#[derive(Clone, Debug)]
pub struct CompletionLattice {
    base: Poset,
    kind: CompletionKind,
    members: Vec<Subset>,
    index: HashMap<Subset, usize>,
    embedding: Option<Vec<usize>>,
    dclosure: Option<DClosure>,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl CompletionLattice {
    /// `members` must be closed under intersection and contain the whole
    /// base; they are sorted here.
    pub fn new(base: Poset, kind: CompletionKind, mut members: Vec<Subset>, dclosure: Option<DClosure>) -> Self {
        members.sort();
        members.dedup();
        let index: HashMap<Subset, usize> = members.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let embedding: Option<Vec<usize>> = (0..base.len()).map(|a| index.get(base.down(a)).copied()).collect();
        let mut c = CompletionLattice {
            base,
            kind,
            members,
            index,
            embedding,
            dclosure,
            meet: Vec::new(),
            join: Vec::new(),
        };
        c.build_tables();
        c
    }

    fn build_tables(&mut self) {
        let m = self.members.len();
        let mut meet = vec![usize::MAX; m * m];
        let mut join = vec![usize::MAX; m * m];
        for i in 0..m {
            for j in i..m {
                let x = self.members[i].intersection(&self.members[j]);
                let mi = self.index.get(&x).copied().unwrap_or(usize::MAX);
                let y = self.least_member_above(&self.members[i].union(&self.members[j])).expect("the base is a member");
                let ji = self.index.get(&y).copied().unwrap_or(usize::MAX);
                meet[i * m + j] = mi;
                meet[j * m + i] = mi;
                join[i * m + j] = ji;
                join[j * m + i] = ji;
            }
        }
        self.meet = meet;
        self.join = join;
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn kind(&self) -> CompletionKind {
        self.kind
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Subset {
        &self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &Subset) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.index.contains_key(s)
    }

    /// `a ↦ index of ↓a`, when every principal ideal is a member.
    pub fn embedding(&self) -> Option<&[usize]> {
        self.embedding.as_deref()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.members.len() - 1
    }

    /// Least member containing `s`.
    pub fn least_member_above(&self, s: &Subset) -> Option<Subset> {
        let mut acc: Option<Subset> = None;
        for m in self.members.iter().filter(|m| s.is_subset(m)) {
            acc = Some(match acc {
                None => m.clone(),
                Some(a) => a.intersection(m),
            });
        }
        acc
    }

    /// The join closure of this kind applied to `s`.
    pub fn closure(&self, s: &Subset) -> Subset {
        match (self.kind, &self.dclosure) {
            (CompletionKind::DM, _) => normal_closure(&self.base, s),
            (CompletionKind::BL, Some(dc)) => dc.close(s),
            _ => self.least_member_above(s).unwrap_or_else(|| self.base.full_set()),
        }
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn join_of(&self, items: &[usize]) -> usize {
        items.iter().fold(self.bottom(), |acc, &x| self.join(acc, x))
    }

    pub fn meet_of(&self, items: &[usize]) -> usize {
        items.iter().fold(self.top(), |acc, &x| self.meet(acc, x))
    }

    fn indices(&self, sets: &[Subset]) -> Result<Vec<usize>> {
        sets.iter().map(|s| self.index_of(s).ok_or(Error::ForeignMember)).collect()
    }

    pub fn completion_join(&self, sets: &[Subset]) -> Result<Subset> {
        let idx = self.indices(sets)?;
        let mut u = self.base.empty_set();
        for s in sets {
            u.union_with(s);
        }
        let c = self.closure(&u);
        debug_assert_eq!(self.index_of(&c), Some(self.join_of(&idx)));
        Ok(c)
    }

    pub fn completion_meet(&self, sets: &[Subset]) -> Result<Subset> {
        let idx = self.indices(sets)?;
        Ok(self.members[self.meet_of(&idx)].clone())
    }

    /// The members ordered by inclusion, labelled like `{0,a,b}`.
    pub fn to_poset(&self) -> Poset {
        let names = self.members.iter().map(|m| self.base.format_subset(m)).collect();
        Poset::from_family(format!("{}({})", self.kind.as_str(), self.base.name()), names, &self.members)
    }

    pub fn to_lattice(&self) -> Lattice {
        Lattice::new(self.to_poset()).expect("completions are lattices")
    }

    /// First violated structural invariant, described.
    pub fn invariant_violation(&self) -> Option<String> {
        let p = &self.base;
        if self.members.is_empty() || self.members[self.top()] != p.full_set() {
            return Some("whole set is not the top member".into());
        }
        if let Some(m) = self.members.iter().find(|m| !p.is_downset(m)) {
            return Some(format!("member {} is not a downset", p.format_subset(m)));
        }
        let n = self.len();
        for i in 0..n {
            for j in i..n {
                if self.meet(i, j) == usize::MAX {
                    return Some(format!("intersection of members {i} and {j} is missing"));
                }
                let ji = self.join(i, j);
                if self.closure(&self.members[i].union(&self.members[j])) != self.members[ji] {
                    return Some(format!("closure of the union of members {i} and {j} is not their join"));
                }
                let least = self.least_member_above(&self.members[i].union(&self.members[j]));
                if least.as_ref() != Some(&self.members[ji]) {
                    return Some(format!("join of members {i} and {j} is not the least member above"));
                }
            }
        }
        if let Some(e) = &self.embedding {
            for a in 0..p.len() {
                for b in 0..p.len() {
                    if a != b && e[a] == e[b] {
                        return Some(format!("embedding identifies {} and {}", p.label(a), p.label(b)));
                    }
                    if let Some(m) = p.meet(a, b) {
                        if self.meet(e[a], e[b]) != e[m] {
                            return Some(format!("embedding fails to preserve {} ∧ {}", p.label(a), p.label(b)));
                        }
                    }
                }
            }
        }
        None
    }

    /// A member `x` and member family `F` with `x ∧ ⋁F != ⋁(x ∧ f)`, scanning
    /// every family. Exponential in the member count.
    pub fn frame_witness_exhaustive(&self) -> Option<(usize, Vec<usize>)> {
        let m = self.len();
        assert!(m <= 24, "exhaustive frame scan over {m} members");
        for mask in 0u64..(1u64 << m) {
            let fam: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let j = self.join_of(&fam);
            for x in 0..m {
                let lhs = self.meet(x, j);
                let rhs = fam.iter().fold(self.bottom(), |acc, &f| self.join(acc, self.meet(x, f)));
                if lhs != rhs {
                    return Some((x, fam));
                }
            }
        }
        None
    }

    /// Binary distributivity `x ∧ (y ∨ z) = (x∧y) ∨ (x∧z)`, which is the
    /// frame law for a finite lattice.
    pub fn frame_witness(&self) -> Option<(usize, Vec<usize>)> {
        let m = self.len();
        for x in 0..m {
            for y in 0..m {
                for z in y + 1..m {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Some((x, vec![y, z]));
                    }
                }
            }
        }
        None
    }

    pub fn report(&self, iso_class: Option<String>) -> CompletionReport {
        CompletionReport {
            base: self.base.name().to_string(),
            kind: self.kind.as_str().to_string(),
            members: self.members.iter().map(Subset::to_vec).collect(),
            iso_class,
        }
    }

    /// Hasse diagram of the completion; `attrs` as in [`hasse_dot`].
    pub fn to_dot(&self, attrs: &[String]) -> String {
        let q = self.to_poset();
        hasse_dot(q.name(), q.labels(), &q.covers(), &q.heights(), attrs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionReport {
    pub base: String,
    pub kind: String,
    pub members: Vec<Vec<usize>>,
    pub iso_class: Option<String>,
}
