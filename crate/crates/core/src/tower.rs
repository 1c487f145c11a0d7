//! Relative annihilators, the proHeyting extension, the finitary level of the
//! Bruns-Lakser tower and the classification predicates.
//!
//! Every level family is reported as a list of member indices into the
//! Bruns-Lakser completion of the base. At finite scale the finitary level
//! already equals the whole completion, so the tower has at most two distinct
//! levels; that coincidence is computed and reported, never assumed.

use serde::{Deserialize, Serialize};

use crate::completion::{admissibility, bl_completion, dm_completion, is_normal_ideal, AdmissibleCertificate, CompletionLattice};
use crate::error::{Error, Result};
use crate::io::hasse_dot;
use crate::lattice::Lattice;
use crate::poset::Poset;
use crate::subset::Subset;

/// `⟨a,b⟩ = { x : a∧x ≤ b }`.
pub fn rel_annihilator(l: &Lattice, a: usize, b: usize) -> Subset {
    Subset::from_indices(l.len(), (0..l.len()).filter(|&x| l.leq(l.meet(a, x), b)))
}

pub fn annihilator(p: &Poset, a: usize, b: usize) -> Result<Subset> {
    Ok(rel_annihilator(&Lattice::from_meet_semilattice(p.clone())?, a, b))
}

/// All `n²` annihilators of a meet-semilattice and the distinct ones.
#[derive(Clone, Debug)]
pub struct AnnihilatorFamily {
    base: Poset,
    entries: Vec<Subset>,
    distinct: Vec<Subset>,
    first_pair: Vec<(usize, usize)>,
}

impl AnnihilatorFamily {
    pub fn new(l: &Lattice) -> Self {
        let n = l.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(rel_annihilator(l, a, b));
            }
        }
        let mut distinct: Vec<Subset> = entries.clone();
        distinct.sort();
        distinct.dedup();
        let first_pair = distinct
            .iter()
            .map(|d| {
                let k = entries.iter().position(|e| e == d).expect("entry");
                (k / n, k % n)
            })
            .collect();
        AnnihilatorFamily { base: l.poset().clone(), entries, distinct, first_pair }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn entry(&self, a: usize, b: usize) -> &Subset {
        &self.entries[a * self.base.len() + b]
    }

    pub fn entries(&self) -> &[Subset] {
        &self.entries
    }

    /// Distinct annihilators in canonical order.
    pub fn distinct(&self) -> &[Subset] {
        &self.distinct
    }

    /// The first pair `(a, b)` (row-major) producing each distinct entry.
    pub fn first_pairs(&self) -> &[(usize, usize)] {
        &self.first_pair
    }

    /// `R A`: distinct annihilators ordered by inclusion.
    pub fn poset_view(&self) -> Poset {
        let names = self
            .first_pair
            .iter()
            .map(|&(a, b)| format!("<{},{}>", self.base.label(a), self.base.label(b)))
            .collect();
        Poset::from_family(format!("R({})", self.base.name()), names, &self.distinct)
    }

    /// `a ↦ ⟨1,a⟩ = ↓a` is an order-embedding into `R A`.
    pub fn principal_embedding_holds(&self) -> bool {
        let p = &self.base;
        let Some(top) = p.top() else { return false };
        (0..p.len()).all(|a| self.entry(top, a) == p.down(a))
            && (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == self.entry(top, a).is_subset(self.entry(top, b))))
    }
}

pub fn annihilator_family(p: &Poset) -> Result<AnnihilatorFamily> {
    let l = Lattice::from_meet_semilattice(p.clone())?;
    let fam = AnnihilatorFamily::new(&l);
    assert!(fam.principal_embedding_holds(), "a ↦ ↓a must embed {} into its annihilators", p.name());
    Ok(fam)
}

/// First `(a, b)` (row-major) whose annihilator is not a normal ideal.
pub fn proheyting_witness(l: &Lattice) -> Option<(usize, usize)> {
    let n = l.len();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| !is_normal_ideal(l.poset(), &rel_annihilator(l, a, b)))
}

pub fn is_proheyting(p: &Poset) -> Result<bool> {
    Ok(proheyting_witness(&Lattice::from_meet_semilattice(p.clone())?).is_none())
}

/// First inadmissible antichain in canonical order. A subset is admissible
/// exactly when its maximal elements are, so antichains cover every subset.
pub fn jid_witness(l: &Lattice) -> Option<AdmissibleCertificate> {
    let p = l.poset();
    p.antichains(&p.full_set())
        .into_iter()
        .filter(|a| a.count() >= 2)
        .map(|a| admissibility(l, &a))
        .find(|c| !c.is_admissible())
}

/// Same question scanned over every subset; exponential.
pub fn jid_witness_exhaustive(l: &Lattice) -> Option<AdmissibleCertificate> {
    let mut all: Vec<Subset> = l.poset().full_set().subsets().collect();
    all.sort();
    all.into_iter().map(|s| admissibility(l, &s)).find(|c| !c.is_admissible())
}

pub fn is_jid(p: &Poset) -> Result<bool> {
    Ok(jid_witness(&Lattice::new(p.clone())?).is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub distributive: bool,
    pub heyting: bool,
    pub proheyting: bool,
    pub jid: bool,
    /// Complete and every join distributive, checked over all subsets.
    pub frame_finite: bool,
}

impl Classification {
    pub fn all_equal(&self) -> bool {
        let v = self.distributive;
        [self.heyting, self.proheyting, self.jid, self.frame_finite].iter().all(|&x| x == v)
    }
}

pub fn classify_lattice(l: &Lattice) -> Classification {
    let heyting = l.is_heyting();
    let proheyting = proheyting_witness(l).is_none();
    let jid = jid_witness(l).is_none();
    let every_join = if l.len() <= 16 { jid_witness_exhaustive(l).is_none() } else { jid };
    let c = Classification {
        distributive: l.is_distributive(),
        heyting,
        proheyting,
        jid,
        frame_finite: l.is_complete() && every_join,
    };
    assert!(!c.heyting || c.proheyting, "Heyting but not proHeyting: {}", l.name());
    assert!(!c.proheyting || c.jid, "proHeyting but not JID: {}", l.name());
    c
}

pub fn classify(p: &Poset) -> Result<Classification> {
    Ok(classify_lattice(&Lattice::new(p.clone())?))
}

/// Least bounded sublattice of `c` containing `seeds`, as sorted member
/// indices. Rounds scan the current family in member order, which is the
/// canonical `(popcount, bits)` order.
pub fn generated_sublattice(c: &CompletionLattice, seeds: &[usize]) -> Result<Vec<usize>> {
    let m = c.len();
    if seeds.iter().any(|&s| s >= m) {
        return Err(Error::ForeignMember);
    }
    let mut inside = vec![false; m];
    for &s in seeds.iter().chain([c.bottom(), c.top()].iter()) {
        inside[s] = true;
    }
    loop {
        let cur: Vec<usize> = (0..m).filter(|&i| inside[i]).collect();
        let mut grew = false;
        for (k, &i) in cur.iter().enumerate() {
            for &j in &cur[k..] {
                for x in [c.meet(i, j), c.join(i, j)] {
                    if !inside[x] {
                        inside[x] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Ok((0..m).filter(|&i| inside[i]).collect());
        }
    }
}

/// Indices in `bl` of the distinct annihilators of its base.
pub fn annihilator_indices(bl: &CompletionLattice) -> Vec<usize> {
    let l = Lattice::from_meet_semilattice(bl.base().clone()).expect("BL base is a meet-semilattice");
    let fam = AnnihilatorFamily::new(&l);
    fam.distinct().iter().map(|s| bl.index_of(s).expect("annihilators are D-ideals")).collect()
}

fn principal_indices(bl: &CompletionLattice) -> Vec<usize> {
    let mut v: Vec<usize> = bl.embedding().expect("principal ideals are D-ideals").to_vec();
    v.sort_unstable();
    v
}

/// `pH A` inside `BL A`.
pub fn ph_members(bl: &CompletionLattice) -> Vec<usize> {
    generated_sublattice(bl, &annihilator_indices(bl)).expect("seeds are members")
}

/// `BL_fin A` inside `BL A`.
pub fn finitary_members(bl: &CompletionLattice) -> Vec<usize> {
    generated_sublattice(bl, &principal_indices(bl)).expect("seeds are members")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFamily {
    pub members: Vec<usize>,
    /// Equal to the principal ideals.
    pub equals_base: bool,
    pub equals_bl: bool,
}

fn level(bl: &CompletionLattice, members: Vec<usize>) -> LevelFamily {
    let equals_base = members == principal_indices(bl);
    let equals_bl = members.len() == bl.len();
    LevelFamily { members, equals_base, equals_bl }
}

pub fn ph_extension(p: &Poset) -> Result<(CompletionLattice, LevelFamily)> {
    let bl = bl_completion(p)?;
    let m = ph_members(&bl);
    let lv = level(&bl, m);
    Ok((bl, lv))
}

pub fn bl_finitary(p: &Poset) -> Result<(CompletionLattice, LevelFamily)> {
    let bl = bl_completion(p)?;
    let m = finitary_members(&bl);
    let lv = level(&bl, m);
    Ok((bl, lv))
}

/// The sub-family of `c` given by `members`, ordered by inclusion.
pub fn family_poset(c: &CompletionLattice, members: &[usize], name: impl Into<String>) -> Poset {
    let sets: Vec<Subset> = members.iter().map(|&i| c.member(i).clone()).collect();
    let names = sets.iter().map(|s| c.base().format_subset(s)).collect();
    Poset::from_family(name, names, &sets)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCounts {
    #[serde(rename = "A")]
    pub a: usize,
    #[serde(rename = "BL_fin")]
    pub bl_fin: usize,
    #[serde(rename = "pH")]
    pub ph: usize,
    #[serde(rename = "DM")]
    pub dm: usize,
    #[serde(rename = "BL")]
    pub bl: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelMembers {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "BL_fin")]
    pub bl_fin: Vec<usize>,
    #[serde(rename = "pH")]
    pub ph: Vec<usize>,
    #[serde(rename = "DM")]
    pub dm: Vec<usize>,
    #[serde(rename = "BL")]
    pub bl: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collapse {
    pub eq: String,
    pub holds: bool,
}

/// Level data for one base. Member lists index into the base's BL
/// completion, whose own members are listed in `bl_sets`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub base: String,
    pub levels: LevelCounts,
    pub collapses: Vec<Collapse>,
    pub flags: Classification,
    /// `base` when `A = BL A`, otherwise `finitary`.
    pub delta: String,
    pub nested: bool,
    pub kappa_heyting: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<LevelMembers>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bl_sets: Option<Vec<Vec<usize>>>,
}

fn is_sub(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Computes the five level families inside `BL(p)` with their collapses.
pub fn tower_levels(p: &Poset) -> Result<(CompletionLattice, LevelMembers)> {
    let bl = bl_completion(p)?;
    let dm = dm_completion(p);
    let mut dm_idx: Vec<usize> =
        dm.members().iter().map(|s| bl.index_of(s).expect("normal ideals are D-ideals")).collect();
    dm_idx.sort_unstable();
    let (fin, ph) = rayon::join(|| finitary_members(&bl), || ph_members(&bl));
    let lv = LevelMembers { a: principal_indices(&bl), bl_fin: fin, ph, dm: dm_idx, bl: (0..bl.len()).collect() };
    Ok((bl, lv))
}

pub fn tower_report(p: &Poset, with_members: bool) -> Result<TowerReport> {
    let (bl, lv) = tower_levels(p)?;
    let flags = classify(p)?;
    let named: [(&str, &Vec<usize>); 5] =
        [("A", &lv.a), ("BL_fin", &lv.bl_fin), ("pH", &lv.ph), ("DM", &lv.dm), ("BL", &lv.bl)];
    let get = |k: &str| named.iter().find(|(n, _)| *n == k).map(|(_, v)| *v).expect("level");
    let pairs = [
        ("A", "DM"),
        ("A", "pH"),
        ("A", "BL_fin"),
        ("A", "BL"),
        ("DM", "BL"),
        ("pH", "BL"),
        ("BL_fin", "BL"),
        ("BL_fin", "pH"),
    ];
    let collapses =
        pairs.iter().map(|(x, y)| Collapse { eq: format!("{x}={y}"), holds: get(x) == get(y) }).collect();
    let nested = is_sub(&lv.a, &lv.bl_fin)
        && is_sub(&lv.a, &lv.dm)
        && is_sub(&lv.a, &lv.ph)
        && is_sub(&lv.bl_fin, &lv.bl)
        && is_sub(&lv.dm, &lv.bl)
        && is_sub(&lv.ph, &lv.bl);
    let delta = if lv.a == lv.bl { "base" } else { "finitary" }.to_string();
    let kappa_heyting = if is_sub(&annihilator_indices(&bl), &lv.bl_fin) {
        "trivially satisfied at finite scale"
    } else {
        "violated"
    }
    .to_string();
    Ok(TowerReport {
        base: p.name().to_string(),
        levels: LevelCounts { a: lv.a.len(), bl_fin: lv.bl_fin.len(), ph: lv.ph.len(), dm: lv.dm.len(), bl: lv.bl.len() },
        collapses,
        flags,
        delta,
        nested,
        kappa_heyting,
        bl_sets: with_members.then(|| bl.members().iter().map(Subset::to_vec).collect()),
        members: with_members.then_some(lv),
    })
}

/// `BL(p)` with nodes coloured by the least level containing them.
pub fn tower_dot(p: &Poset) -> Result<String> {
    let (bl, lv) = tower_levels(p)?;
    let attrs: Vec<String> = (0..bl.len())
        .map(|i| {
            let has = |v: &Vec<usize>| v.binary_search(&i).is_ok();
            let mut tags = Vec::new();
            if has(&lv.a) {
                tags.push("A");
            }
            if has(&lv.dm) {
                tags.push("DM");
            }
            if has(&lv.ph) {
                tags.push("pH");
            }
            if has(&lv.bl_fin) {
                tags.push("BL_fin");
            }
            let colour = if has(&lv.a) {
                "lightblue"
            } else if has(&lv.dm) {
                "palegreen"
            } else if has(&lv.ph) {
                "khaki"
            } else if has(&lv.bl_fin) {
                "lightsalmon"
            } else {
                "white"
            };
            tags.push("BL");
            format!("style=filled, fillcolor={colour}, tooltip=\"{}\"", tags.join(" "))
        })
        .collect();
    let q = bl.to_poset();
    Ok(hasse_dot(q.name(), q.labels(), &q.covers(), &q.heights(), &attrs))
}

/// A meet-closed subset `A` of a lattice `B` containing its top, with
/// `B ≤ BL A` witnessed by `b ↦ ↓b ∩ A`.
#[derive(Clone, Debug)]
pub struct SubSemilattice {
    pub inner: Lattice,
    /// Index in `B` of each element of `A`.
    pub inclusion: Vec<usize>,
    /// `↓b ∩ A` for each `b`, over `A`'s indices.
    pub images: Vec<Subset>,
}

/// Checks the hypotheses `A ≤ B ≤ BL A`. Meets and top of `B` are
/// preserved by `b ↦ ↓b ∩ A` automatically; what can fail is closure of
/// `A`, injectivity, or an image not being a D-ideal of `A`.
pub fn sub_semilattice(b: &Lattice, a_sub: &Subset) -> Result<SubSemilattice> {
    let pb = b.poset();
    if !a_sub.contains(b.top()) {
        return Err(Error::PreconditionUnmet("subset does not contain the top".into()));
    }
    for x in a_sub.iter() {
        for y in a_sub.iter() {
            if !a_sub.contains(b.meet(x, y)) {
                return Err(Error::PreconditionUnmet("subset is not closed under meets".into()));
            }
        }
    }
    let (pa, inclusion) = pb.induced(a_sub);
    let inner = Lattice::from_meet_semilattice(pa).expect("meet-closed with top");
    let images: Vec<Subset> = (0..b.len())
        .map(|y| Subset::from_indices(inclusion.len(), (0..inclusion.len()).filter(|&k| b.leq(inclusion[k], y))))
        .collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != images.len() {
        return Err(Error::PreconditionUnmet("b ↦ ↓b ∩ A is not injective".into()));
    }
    let dc = crate::completion::DClosure::from_lattice(inner.clone());
    if let Some(y) = (0..b.len()).find(|&y| !dc.is_d_ideal(&images[y])) {
        return Err(Error::PreconditionUnmet(format!("↓{} ∩ A is not a D-ideal", pb.label(y))));
    }
    Ok(SubSemilattice { inner, inclusion, images })
}

/// The map `⟨a,b⟩_A ↦ ⟨a,b⟩_B` is well defined, order-preserving and
/// order-reflecting; checked over all pairs of pairs.
pub fn annihilator_embedding_check(b: &Lattice, a_sub: &Subset) -> Result<bool> {
    let s = sub_semilattice(b, a_sub)?;
    Ok(annihilator_embedding_witness(b, &s).is_none())
}

/// First pair of pairs `((a,b),(c,d))` over `A`'s indices where
/// `⟨a,b⟩_A ⊆ ⟨c,d⟩_A` and `⟨a,b⟩_B ⊆ ⟨c,d⟩_B` disagree.
pub fn annihilator_embedding_witness(b: &Lattice, s: &SubSemilattice) -> Option<((usize, usize), (usize, usize))> {
    let na = s.inclusion.len();
    let fa = AnnihilatorFamily::new(&s.inner);
    let fb = AnnihilatorFamily::new(b);
    let inc = &s.inclusion;
    for a in 0..na {
        for bb in 0..na {
            for c in 0..na {
                for d in 0..na {
                    let in_a = fa.entry(a, bb).is_subset(fa.entry(c, d));
                    let in_b = fb.entry(inc[a], inc[bb]).is_subset(fb.entry(inc[c], inc[d]));
                    if in_a != in_b {
                        return Some(((a, bb), (c, d)));
                    }
                }
            }
        }
    }
    None
}

/// Every meet-closed subset of `b` containing the top.
pub fn meet_closed_subsets(b: &Lattice) -> Vec<Subset> {
    let n = b.len();
    assert!(n <= 16, "meet-closed subsets of {n} elements");
    let mut out: Vec<Subset> = b
        .poset()
        .full_set()
        .subsets()
        .filter(|s| s.contains(b.top()))
        .filter(|s| s.iter().all(|x| s.iter().all(|y| s.contains(b.meet(x, y)))))
        .collect();
    out.sort();
    out
}
