//! Birkhoff duality for finite distributive lattices and the closure and
//! interior operators on the dual.
//!
//! The dual `X` has one point per join-irreducible `j`, standing for the
//! prime filter `↑j`; points are ordered by filter inclusion, so `↑j ≤ ↑k`
//! exactly when `k ≤ j`. Under this orientation `s(a) = { ↑j : j ≤ a }` is an
//! upset and `s` is an isomorphism onto the upsets of `X`.
//!
//! Every subset of a finite space is clopen, so `cl` and `int` are the
//! identity and "clopen upset" means "upset".

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::completion::{bl_completion, dm_completion};
use crate::error::{Error, Result};
use crate::io::hasse_dot;
use crate::iso::is_isomorphic;
use crate::lattice::Lattice;
use crate::poset::Poset;
use crate::subset::Subset;
use crate::tower::{classify_lattice, proheyting_witness};

#[derive(Clone, Debug)]
pub struct DualSpace {
    base: Lattice,
    points: Vec<usize>,
    x: Poset,
    stone: Vec<Subset>,
    inverse: HashMap<Subset, usize>,
}

impl DualSpace {
    pub fn new(base: Lattice) -> Result<DualSpace> {
        if !base.is_distributive() {
            return Err(Error::NotDistributive);
        }
        let points = base.join_irreducibles();
        let names = points.iter().map(|&j| format!("↑{}", base.poset().label(j))).collect();
        let x = Poset::from_rows(format!("X({})", base.name()), names, |k, m| base.leq(points[m], points[k]));
        let stone: Vec<Subset> = (0..base.len())
            .map(|a| Subset::from_indices(points.len(), (0..points.len()).filter(|&k| base.leq(points[k], a))))
            .collect();
        let inverse = stone.iter().cloned().enumerate().map(|(a, s)| (s, a)).collect();
        let d = DualSpace { base, points, x, stone, inverse };
        if let Some(v) = d.stone_violation() {
            panic!("Stone map of {} is not an isomorphism: {v}", d.base.name());
        }
        Ok(d)
    }

    pub fn base(&self) -> &Lattice {
        &self.base
    }

    /// The poset of prime filters.
    pub fn space(&self) -> &Poset {
        &self.x
    }

    /// The join-irreducible generating each point.
    pub fn point_generators(&self) -> &[usize] {
        &self.points
    }

    /// Elements of the prime filter at point `k`.
    pub fn filter(&self, k: usize) -> &Subset {
        self.base.poset().up(self.points[k])
    }

    pub fn stone(&self, a: usize) -> &Subset {
        &self.stone[a]
    }

    /// `s⁻¹(U)` for an upset `U`.
    pub fn inverse(&self, u: &Subset) -> Option<usize> {
        self.inverse.get(u).copied()
    }

    /// First failure of: images are upsets, `s` is a bijection onto all
    /// upsets, and `s` preserves `∧`, `∨`, `0`, `1`.
    pub fn stone_violation(&self) -> Option<String> {
        let l = &self.base;
        let x = &self.x;
        let n = l.len();
        if let Some(a) = (0..n).find(|&a| !x.is_upset(&self.stone[a])) {
            return Some(format!("s({}) is not an upset", l.poset().label(a)));
        }
        if self.inverse.len() != n {
            return Some("s is not injective".into());
        }
        let ups = x.upsets();
        if ups.len() != n || ups.iter().any(|u| !self.inverse.contains_key(u)) {
            return Some("s is not onto the upsets".into());
        }
        if !self.stone[l.bottom()].is_empty() || !self.stone[l.top()].is_full() {
            return Some("s does not preserve the bounds".into());
        }
        for a in 0..n {
            for b in 0..n {
                if self.stone[l.meet(a, b)] != self.stone[a].intersection(&self.stone[b]) {
                    return Some(format!("s fails on {} ∧ {}", l.poset().label(a), l.poset().label(b)));
                }
                if self.stone[l.join(a, b)] != self.stone[a].union(&self.stone[b]) {
                    return Some(format!("s fails on {} ∨ {}", l.poset().label(a), l.poset().label(b)));
                }
            }
        }
        None
    }

    pub fn apply(&self, op: Operator, s: &Subset) -> Subset {
        apply_operator(&self.x, op, s)
    }

    /// `s[I] = ⋃ { s(a) : a ∈ I }`.
    pub fn image(&self, ideal: &Subset) -> Subset {
        let mut u = self.x.empty_set();
        for a in ideal.iter() {
            u.union_with(&self.stone[a]);
        }
        u
    }

    pub fn families(&self) -> DualFamilies {
        dual_families(&self.x)
    }

    /// Dual JSON: point labels, covers of `X` and the Stone table.
    pub fn to_json(&self) -> DualJson {
        let p = self.base.poset();
        DualJson {
            base: self.base.name().to_string(),
            points: self.x.labels().to_vec(),
            leq: self.x.covers().into_iter().map(|(i, j)| [i, j]).collect(),
            stone: (0..p.len()).map(|a| (p.label(a).to_string(), self.stone[a].to_vec())).collect(),
        }
    }

    /// Hasse diagram of `X`, filling the points of `s(a)` when `a` is given.
    pub fn to_dot(&self, highlight: Option<usize>) -> String {
        let attrs: Vec<String> = (0..self.x.len())
            .map(|k| match highlight {
                Some(a) if self.stone[a].contains(k) => "style=filled, fillcolor=gold".to_string(),
                _ => String::new(),
            })
            .collect();
        hasse_dot(self.x.name(), self.x.labels(), &self.x.covers(), &self.x.heights(), &attrs)
    }
}

pub fn dual_space(p: &Poset) -> Result<DualSpace> {
    DualSpace::new(Lattice::new(p.clone())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualJson {
    pub base: String,
    pub points: Vec<String>,
    pub leq: Vec<[usize; 2]>,
    pub stone: BTreeMap<String, Vec<usize>>,
}

/// Prime filters found by scanning every upset of the lattice: proper,
/// nonempty, meet-closed, and `a∨b ∈ F ⟹ a ∈ F or b ∈ F`. Exponential;
/// the reference for [`DualSpace`]'s join-irreducible shortcut.
pub fn prime_filters_oracle(l: &Lattice) -> Vec<Subset> {
    let p = l.poset();
    let mut out: Vec<Subset> = p
        .upsets()
        .into_iter()
        .filter(|f| !f.is_empty() && !f.contains(l.bottom()))
        .filter(|f| f.iter().all(|a| f.iter().all(|b| f.contains(l.meet(a, b)))))
        .filter(|f| (0..l.len()).all(|a| (0..l.len()).all(|b| !f.contains(l.join(a, b)) || f.contains(a) || f.contains(b))))
        .collect();
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operator {
    Cl,
    Cl1,
    Cl2,
    Int,
    Int1,
    Int2,
}

impl Operator {
    pub const ALL: [Operator; 6] = [Operator::Cl, Operator::Cl1, Operator::Cl2, Operator::Int, Operator::Int1, Operator::Int2];
}

/// The displayed formulas with `cl = int = identity`: `cl₁ = ↓`, `cl₂ = ↑`,
/// `int₁(S) = X∖↓(X∖S)`, `int₂(S) = X∖↑(X∖S)`.
pub fn apply_operator(x: &Poset, op: Operator, s: &Subset) -> Subset {
    match op {
        Operator::Cl | Operator::Int => s.clone(),
        Operator::Cl1 => x.downset_closure(s),
        Operator::Cl2 => x.upset_closure(s),
        Operator::Int1 => x.downset_closure(&s.complement()).complement(),
        Operator::Int2 => x.upset_closure(&s.complement()).complement(),
    }
}

/// Open upsets, DM-sets and BL-sets of a finite space, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFamilies {
    pub op_up: Vec<Subset>,
    pub dm_sets: Vec<Subset>,
    pub bl_sets: Vec<Subset>,
}

pub fn int1_cl2(x: &Poset, u: &Subset) -> Subset {
    apply_operator(x, Operator::Int1, &apply_operator(x, Operator::Cl2, u))
}

pub fn int1_cl(x: &Poset, u: &Subset) -> Subset {
    apply_operator(x, Operator::Int1, &apply_operator(x, Operator::Cl, u))
}

/// Filters every subset of `x` (upsets only when `|X| > 20`).
pub fn dual_families(x: &Poset) -> DualFamilies {
    let candidates: Vec<Subset> = if x.len() <= 20 {
        let mut v: Vec<Subset> = x.full_set().subsets().collect();
        v.sort();
        v
    } else {
        x.upsets()
    };
    let op_up: Vec<Subset> = candidates.into_iter().filter(|u| x.is_upset(u)).collect();
    let dm_sets = op_up.iter().filter(|u| int1_cl2(x, u) == **u).cloned().collect();
    let bl_sets = op_up.iter().filter(|u| int1_cl(x, u) == **u).cloned().collect();
    DualFamilies { op_up, dm_sets, bl_sets }
}

/// Ideals of a lattice: nonempty downsets closed under binary joins.
pub fn ideals(l: &Lattice) -> Vec<Subset> {
    l.poset()
        .downsets()
        .into_iter()
        .filter(|i| !i.is_empty() && i.iter().all(|a| i.iter().all(|b| i.contains(l.join(a, b)))))
        .collect()
}

/// The three isomorphisms `I A ≅ OpUp(X)`, `DM A ≅ DM(X)`, `BL A ≅ BL(X)`,
/// with primal sides from the completion module. Also checks that `s[-]`
/// carries each primal family onto its dual family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationCheck {
    pub ideals_opup: bool,
    pub dm: bool,
    pub bl: bool,
    pub image_map: bool,
}

impl CharacterizationCheck {
    pub fn holds(&self) -> bool {
        self.ideals_opup && self.dm && self.bl && self.image_map
    }
}

pub fn characterization_check(d: &DualSpace) -> CharacterizationCheck {
    let p = d.base.poset();
    let fam = d.families();
    let x = d.space();
    let family_poset = |name: &str, sets: &[Subset], over: &Poset| {
        let names = sets.iter().map(|s| over.format_subset(s)).collect();
        Poset::from_family(name, names, sets)
    };
    let id = ideals(&d.base);
    let dm = dm_completion(p);
    let bl = bl_completion(p).expect("distributive lattices are meet-semilattices");
    let iso = |a: &[Subset], b: &[Subset]| {
        is_isomorphic(&family_poset("primal", a, p), &family_poset("dual", b, x)).is_some()
    };
    let mapped = |primal: &[Subset], dual: &[Subset]| {
        let mut img: Vec<Subset> = primal.iter().map(|i| d.image(i)).collect();
        img.sort();
        img == dual
    };
    CharacterizationCheck {
        ideals_opup: iso(&id, &fam.op_up),
        dm: iso(dm.members(), &fam.dm_sets),
        bl: iso(bl.members(), &fam.bl_sets),
        image_map: mapped(&id, &fam.op_up)
            && mapped(&non_empty(dm.members()), &fam.dm_sets)
            && mapped(&non_empty(bl.members()), &fam.bl_sets),
    }
}

// A lattice has a bottom, so its normal ideals and D-ideals are nonempty.
fn non_empty(v: &[Subset]) -> Vec<Subset> {
    v.iter().filter(|s| !s.is_empty()).cloned().collect()
}

/// Both sides of "`⋁U` is distributive in `DM(X)` iff `⋁U = int₁cl ⋃U`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinCheck {
    pub join: Subset,
    pub distributive: bool,
    pub criterion: bool,
}

impl JoinCheck {
    pub fn holds(&self) -> bool {
        self.distributive == self.criterion
    }
}

/// Evaluates both sides for a family of DM-sets; `dm_sets` is the DM family
/// of `x`.
pub fn distributive_join_detail(x: &Poset, dm_sets: &[Subset], family: &[Subset]) -> Result<JoinCheck> {
    if family.iter().any(|u| dm_sets.binary_search(u).is_err()) {
        return Err(Error::ForeignMember);
    }
    let union = family.iter().fold(x.empty_set(), |acc, u| acc.union(u));
    let join = int1_cl2(x, &union);
    let distributive = dm_sets.iter().all(|v| {
        let parts = family.iter().fold(x.empty_set(), |acc, u| acc.union(&v.intersection(u)));
        v.intersection(&join) == int1_cl2(x, &parts)
    });
    let criterion = join == int1_cl(x, &union);
    Ok(JoinCheck { join, distributive, criterion })
}

pub fn distributive_join_check(d: &DualSpace, family: &[Subset]) -> Result<bool> {
    let fam = d.families();
    Ok(distributive_join_detail(d.space(), &fam.dm_sets, family)?.holds())
}

/// Dual and primal sides of a characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualAgreement {
    pub dual: bool,
    pub primal: bool,
}

impl DualAgreement {
    pub fn agrees(&self) -> bool {
        self.dual == self.primal
    }
}

/// `X∖↓U ∈ DM(X)` for every subset `U`, and `X∖↓(U∖V) ∈ DM(X)` for all
/// upsets `U, V`, against proHeyting-ness of the base.
pub fn proh_dual_detail(d: &DualSpace) -> (DualAgreement, DualAgreement) {
    let x = d.space();
    let fam = d.families();
    let in_dm = |s: &Subset| fam.dm_sets.binary_search(s).is_ok();
    let every: bool = x.full_set().subsets().all(|u| in_dm(&x.downset_closure(&u).complement()));
    let pairs: bool = fam
        .op_up
        .iter()
        .all(|u| fam.op_up.iter().all(|v| in_dm(&x.downset_closure(&u.difference(v)).complement())));
    let primal = proheyting_witness(&d.base).is_none();
    (DualAgreement { dual: every, primal }, DualAgreement { dual: pairs, primal })
}

pub fn proh_dual_check(d: &DualSpace) -> bool {
    let (a, b) = proh_dual_detail(d);
    a.agrees() && b.agrees()
}

/// `X∖↓U` is a clopen upset for each clopen `U`, against Heyting-ness.
pub fn esakia_detail(d: &DualSpace) -> DualAgreement {
    let x = d.space();
    let dual = x.full_set().subsets().all(|u| d.inverse(&x.downset_closure(&u).complement()).is_some());
    DualAgreement { dual, primal: d.base.is_heyting() }
}

/// `cl₂(U)` is clopen, i.e. in the image of `s`, for each open upset `U`,
/// against completeness.
pub fn eod_detail(d: &DualSpace) -> DualAgreement {
    let x = d.space();
    let dual = x.upsets().iter().all(|u| d.inverse(&apply_operator(x, Operator::Cl2, u)).is_some());
    DualAgreement { dual, primal: d.base.is_complete() }
}

/// `cl(U)` is a clopen upset for each open upset `U`, against the frame law.
pub fn frame_dual_detail(d: &DualSpace) -> DualAgreement {
    let x = d.space();
    let dual = x.upsets().iter().all(|u| d.inverse(&apply_operator(x, Operator::Cl, u)).is_some());
    DualAgreement { dual, primal: classify_lattice(&d.base).frame_finite }
}

pub fn esakia_check(d: &DualSpace) -> bool {
    esakia_detail(d).agrees()
}

pub fn eod_check(d: &DualSpace) -> bool {
    eod_detail(d).agrees()
}

pub fn frame_dual_check(d: &DualSpace) -> bool {
    frame_dual_detail(d).agrees()
}

/// `s(⋁S) = cl₂(⋃ s[S])`.
pub fn join_existence_check(d: &DualSpace, s: &Subset) -> bool {
    let j = d.base.join_of(s);
    *d.stone(j) == apply_operator(d.space(), Operator::Cl2, &d.image(s))
}

/// `⋁S` is distributive in the base iff `s(⋁S) = cl ⋃ s[S]`.
pub fn dist_join_agreement(d: &DualSpace, s: &Subset) -> DualAgreement {
    let j = d.base.join_of(s);
    let dual = *d.stone(j) == apply_operator(d.space(), Operator::Cl, &d.image(s));
    let primal = crate::completion::admissibility(&d.base, s).is_admissible();
    DualAgreement { dual, primal }
}

/// `DM A` is JID iff `int₁cl₂(U) = int₁cl(U)` for every open upset `U`.
pub fn dm_jid_agreement(d: &DualSpace) -> DualAgreement {
    let x = d.space();
    let dual = x.upsets().iter().all(|u| int1_cl2(x, u) == int1_cl(x, u));
    let dm = dm_completion(d.base.poset()).to_lattice();
    DualAgreement { dual, primal: crate::tower::jid_witness(&dm).is_none() }
}

/// `Up(X)` as a lattice.
pub fn upset_lattice(x: &Poset) -> Lattice {
    let ups = x.upsets();
    let names = ups.iter().map(|u| x.format_subset(u)).collect();
    Lattice::new(Poset::from_family(format!("Up({})", x.name()), names, &ups)).expect("upsets form a lattice")
}

/// `Up(X) ≅ A` and the dual of `Up(X)` is isomorphic to `X`.
pub fn double_dual_check(d: &DualSpace) -> bool {
    let up = upset_lattice(d.space());
    let back_to_a = is_isomorphic(up.poset(), d.base.poset()).is_some();
    let dd = DualSpace::new(up).expect("Up(X) is distributive");
    back_to_a && is_isomorphic(dd.space(), d.space()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{antichain, boolean, chain, funayama_trunc, m3};

    fn dual(p: Poset) -> DualSpace {
        dual_space(&p).unwrap()
    }

    #[test]
    fn small_duals() {
        let d = dual(boolean(2));
        assert!(is_isomorphic(d.space(), &antichain(2)).is_some());
        assert_eq!(d.space().upsets().len(), 4);
        let d = dual(chain(3));
        assert!(is_isomorphic(d.space(), &chain(2)).is_some());
        assert_eq!(d.space().upsets().len(), 3);
        assert_eq!(dual(funayama_trunc(1)).space().len(), 3);
        assert!(matches!(dual_space(&m3()), Err(Error::NotDistributive)));
    }

    #[test]
    fn filters_match_oracle() {
        for p in [boolean(3), chain(4), funayama_trunc(2)] {
            let d = dual(p);
            let mut filters: Vec<Subset> = (0..d.space().len()).map(|k| d.filter(k).clone()).collect();
            filters.sort();
            assert_eq!(filters, prime_filters_oracle(d.base()));
        }
    }

    #[test]
    fn operators_on_two_chain() {
        let x = chain(2);
        let y = Subset::singleton(2, 1);
        assert_eq!(apply_operator(&x, Operator::Int1, &y), y);
        assert_eq!(apply_operator(&x, Operator::Int1, &x.full_set()), x.full_set());
        assert_eq!(apply_operator(&x, Operator::Cl2, &y), y);
        assert_eq!(apply_operator(&x, Operator::Cl1, &y), x.full_set());
        assert_eq!(apply_operator(&x, Operator::Int2, &y), x.empty_set());
    }

    #[test]
    fn families_of_small_duals() {
        let f = dual(boolean(2)).families();
        assert_eq!((f.op_up.len(), f.dm_sets.len(), f.bl_sets.len()), (4, 4, 4));
        let f = dual(chain(3)).families();
        assert_eq!((f.op_up.len(), f.dm_sets.len(), f.bl_sets.len()), (3, 3, 3));
    }

    #[test]
    fn checks_hold_on_examples() {
        for p in [boolean(2), boolean(3), chain(4), chain(1), funayama_trunc(2)] {
            let d = dual(p);
            assert!(characterization_check(&d).holds());
            assert!(proh_dual_check(&d) && esakia_check(&d) && eod_check(&d) && frame_dual_check(&d));
            assert!(double_dual_check(&d));
            assert!(dm_jid_agreement(&d).agrees());
            for s in d.base().poset().full_set().subsets() {
                assert!(join_existence_check(&d, &s));
                assert!(dist_join_agreement(&d, &s).agrees());
            }
        }
    }

    #[test]
    fn join_check_edge_cases() {
        let d = dual(boolean(2));
        let x = d.space();
        let atoms: Vec<Subset> = (0..2).map(|k| Subset::singleton(2, k)).collect();
        let fam = d.families();
        let r = distributive_join_detail(x, &fam.dm_sets, &atoms).unwrap();
        assert!(r.holds() && r.join == x.full_set());
        assert!(distributive_join_check(&d, &[]).unwrap());
        assert!(distributive_join_check(&d, &atoms[..1]).unwrap());
        assert_eq!(distributive_join_check(&d, &[Subset::singleton(1, 0)]), Err(Error::ForeignMember));
    }
}
