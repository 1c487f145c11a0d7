//! Meet/join tables and the lattice-level predicates.
//!
//! A finite poset with all pairwise meets and a top element is automatically a
//! complete lattice (joins are meets of upper-bound sets), so [`Lattice`] is
//! the single representation for both meet-semilattices and lattices.

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;

/// Partial meet/join tables of an arbitrary poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    n: usize,
    meet: Vec<Option<usize>>,
    join: Vec<Option<usize>>,
    pub bottom: Option<usize>,
    pub top: Option<usize>,
}

impl LatticeTables {
    pub fn compute(p: &Poset) -> Self {
        let n = p.len();
        let mut meet = vec![None; n * n];
        let mut join = vec![None; n * n];
        for a in 0..n {
            for b in a..n {
                let m = p.meet(a, b);
                let j = p.join(a, b);
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        LatticeTables { n, meet, join, bottom: p.bottom(), top: p.top() }
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a * self.n + b]
    }

    /// Every pair has a meet and a top exists.
    pub fn is_meet_semilattice(&self) -> bool {
        self.top.is_some() && self.meet.iter().all(Option::is_some)
    }

    pub fn is_lattice(&self) -> bool {
        self.n > 0 && self.meet.iter().all(Option::is_some) && self.join.iter().all(Option::is_some)
    }

    pub fn is_bounded(&self) -> bool {
        self.top.is_some() && self.bottom.is_some()
    }
}

pub fn is_meet_semilattice(p: &Poset) -> Option<LatticeTables> {
    let t = LatticeTables::compute(p);
    t.is_meet_semilattice().then_some(t)
}

pub fn is_lattice(p: &Poset) -> Option<LatticeTables> {
    let t = LatticeTables::compute(p);
    t.is_lattice().then_some(t)
}

pub fn is_bounded(p: &Poset) -> bool {
    p.top().is_some() && p.bottom().is_some()
}

/// A finite lattice with total meet/join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    pub fn new(p: Poset) -> Result<Lattice> {
        let t = LatticeTables::compute(&p);
        if !t.is_lattice() {
            return Err(Error::NotALattice);
        }
        Ok(Self::from_tables(p, t))
    }

    /// Accepts exactly the meet-semilattices (pairwise meets plus a top).
    pub fn from_meet_semilattice(p: Poset) -> Result<Lattice> {
        let t = LatticeTables::compute(&p);
        if !t.is_meet_semilattice() || p.is_empty() {
            return Err(Error::NotAMeetSemilattice);
        }
        debug_assert!(t.is_lattice());
        Ok(Self::from_tables(p, t))
    }

    fn from_tables(poset: Poset, t: LatticeTables) -> Lattice {
        Lattice {
            meet: t.meet.iter().map(|m| m.expect("total meet")).collect(),
            join: t.join.iter().map(|j| j.expect("total join")).collect(),
            bottom: t.bottom.expect("finite lattice has a bottom"),
            top: t.top.expect("finite lattice has a top"),
            poset,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn name(&self) -> &str {
        self.poset.name()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn meet_of(&self, s: &Subset) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn join_of(&self, s: &Subset) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// First `(a, b, c)` with `a∧(b∨c) != (a∧b)∨(a∧c)`.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in b + 1..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Greatest `x` with `a ∧ x <= b`, if it exists.
    pub fn heyting_arrow(&self, a: usize, b: usize) -> Option<usize> {
        let ann = Subset::from_indices(self.len(), (0..self.len()).filter(|&x| self.leq(self.meet(a, x), b)));
        self.poset.greatest(&ann)
    }

    pub fn is_heyting(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.heyting_arrow(a, b).is_some()))
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let mut lower = vec![0usize; self.len()];
        for (_, j) in self.poset.covers() {
            lower[j] += 1;
        }
        (0..self.len()).filter(|&x| lower[x] == 1).collect()
    }

    pub fn meet_irreducibles(&self) -> Vec<usize> {
        let mut upper = vec![0usize; self.len()];
        for (i, _) in self.poset.covers() {
            upper[i] += 1;
        }
        (0..self.len()).filter(|&x| upper[x] == 1).collect()
    }

    /// Every subset has a join. Checked through the empty join and binary
    /// joins, which suffice in the finite case.
    pub fn is_complete(&self) -> bool {
        self.poset.join_of(&self.poset.empty_set()).is_some()
            && (0..self.len()).all(|a| (0..self.len()).all(|b| self.poset.join(a, b).is_some()))
    }
}

pub fn is_distributive(p: &Poset) -> Result<bool> {
    Ok(Lattice::new(p.clone())?.is_distributive())
}

pub fn heyting_arrow(p: &Poset, a: usize, b: usize) -> Result<Option<usize>> {
    Ok(Lattice::new(p.clone())?.heyting_arrow(a, b))
}

pub fn is_heyting(p: &Poset) -> Result<bool> {
    Ok(Lattice::new(p.clone())?.is_heyting())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{antichain, boolean, chain, m3, n5};

    #[test]
    fn m3_is_bounded_nondistributive_lattice() {
        let p = m3();
        let t = LatticeTables::compute(&p);
        assert!(t.is_lattice() && t.is_bounded() && t.is_meet_semilattice());
        let l = Lattice::new(p.clone()).unwrap();
        assert!(!l.is_distributive());
        let (a, b) = (p.index_of("a").unwrap(), p.index_of("b").unwrap());
        assert_eq!(l.meet(a, b), p.index_of("0").unwrap());
        assert_eq!(l.join(a, b), p.index_of("1").unwrap());
    }

    #[test]
    fn n5_not_distributive_boolean_is() {
        assert!(!Lattice::new(n5()).unwrap().is_distributive());
        assert!(Lattice::new(boolean(3)).unwrap().is_distributive());
        assert!(Lattice::new(chain(4)).unwrap().is_distributive());
    }

    #[test]
    fn antichain_is_not_a_meet_semilattice() {
        let p = antichain(2);
        assert!(is_meet_semilattice(&p).is_none());
        assert_eq!(Lattice::new(p.clone()), Err(Error::NotALattice));
        assert_eq!(Lattice::from_meet_semilattice(p.clone()), Err(Error::NotAMeetSemilattice));
        assert_eq!(is_distributive(&p), Err(Error::NotALattice));
    }

    #[test]
    fn arrow_examples() {
        let b2 = Lattice::new(boolean(2)).unwrap();
        let p = b2.poset();
        let (zero, pa, qa) = (p.index_of("{}").unwrap(), p.index_of("{0}").unwrap(), p.index_of("{1}").unwrap());
        assert_eq!(b2.heyting_arrow(pa, zero), Some(qa));

        let m = Lattice::new(m3()).unwrap();
        let a = m.poset().index_of("a").unwrap();
        assert_eq!(m.heyting_arrow(a, m.bottom()), None);
        for b in 0..m.len() {
            assert_eq!(m.heyting_arrow(m.top(), b), Some(b));
        }
        assert!(!m.is_heyting());
        assert!(b2.is_heyting());
    }

    #[test]
    fn join_irreducibles_of_boolean_are_atoms() {
        let l = Lattice::new(boolean(3)).unwrap();
        let ji = l.join_irreducibles();
        assert_eq!(ji.len(), 3);
        assert!(ji.iter().all(|&j| l.poset().down(j).count() == 2));
    }
}
