//! Finite partial orders stored as full reachability matrices.
//!
//! Row `up[i]` holds `{ j : i <= j }` and column `down[j]` holds
//! `{ i : i <= j }`, so every order test is a single bit probe and bound sets
//! are word-wise intersections.

use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    name: String,
    names: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl Poset {
    /// Validates `leq[i][j] <=> i <= j`. Errors name the first offending
    /// indices: reflexivity, then antisymmetry, then transitivity.
    pub fn from_matrix(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Poset> {
        let n = leq.len();
        for (row, r) in leq.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), expected: n });
            }
        }
        if names.len() != n {
            return Err(Error::NameCount { names: names.len(), n });
        }
        for (i, r) in leq.iter().enumerate() {
            if !r[i] {
                return Err(Error::ReflexivityViolation(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::AntisymmetryViolation(i, j));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] && !leq[i][k] {
                        return Err(Error::TransitivityViolation(i, j, k));
                    }
                }
            }
        }
        Ok(Self::from_rows(String::new(), names, |i, j| leq[i][j]))
    }

    /// Builds the reflexive-transitive closure of a cover list (`(i, j)` means
    /// `i` is covered by `j`); a cycle surfaces as an antisymmetry violation.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        let mut up: Vec<Subset> = (0..n).map(|i| Subset::singleton(n, i)).collect();
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(Error::CoverOutOfRange(i, j));
            }
            up[i].insert(j);
        }
        // Warshall on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::AntisymmetryViolation(i.min(j), i.max(j)));
                }
            }
        }
        Ok(Self::from_rows(String::new(), names, |i, j| up[i].contains(j)))
    }

    /// The family ordered by inclusion. Members must be pairwise distinct.
    pub fn from_family(name: impl Into<String>, names: Vec<String>, members: &[Subset]) -> Poset {
        assert_eq!(names.len(), members.len());
        Self::from_rows(name.into(), names, |i, j| members[i].is_subset(&members[j]))
    }

    /// Trusted constructor: `leq` must already be a partial order.
    pub(crate) fn from_rows(name: String, names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Poset {
        let n = names.len();
        let mut up = vec![Subset::empty(n); n];
        let mut down = vec![Subset::empty(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        Poset { name, names, up, down }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{ j : i <= j }`.
    pub fn up(&self, i: usize) -> &Subset {
        &self.up[i]
    }

    /// `{ j : j <= i }`, the principal ideal of `i`.
    pub fn down(&self, i: usize) -> &Subset {
        &self.down[i]
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.leq(i, j)).collect()).collect()
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn upper_bounds(&self, s: &Subset) -> Subset {
        debug_assert_eq!(s.len(), self.len());
        let mut out = self.full_set();
        for i in s.iter() {
            out.intersect_with(&self.up[i]);
        }
        out
    }

    pub fn lower_bounds(&self, s: &Subset) -> Subset {
        debug_assert_eq!(s.len(), self.len());
        let mut out = self.full_set();
        for i in s.iter() {
            out.intersect_with(&self.down[i]);
        }
        out
    }

    pub fn downset_closure(&self, s: &Subset) -> Subset {
        let mut out = self.empty_set();
        for i in s.iter() {
            out.union_with(&self.down[i]);
        }
        out
    }

    pub fn upset_closure(&self, s: &Subset) -> Subset {
        let mut out = self.empty_set();
        for i in s.iter() {
            out.union_with(&self.up[i]);
        }
        out
    }

    pub fn is_downset(&self, s: &Subset) -> bool {
        s.iter().all(|i| self.down[i].is_subset(s))
    }

    pub fn is_upset(&self, s: &Subset) -> bool {
        s.iter().all(|i| self.up[i].is_subset(s))
    }

    /// Greatest element of `s`, if any.
    pub fn greatest(&self, s: &Subset) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(&self.down[x]))
    }

    pub fn least(&self, s: &Subset) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(&self.up[x]))
    }

    /// Greatest lower bound of `s`; `meet_of(∅)` is the top when it exists.
    pub fn meet_of(&self, s: &Subset) -> Option<usize> {
        self.greatest(&self.lower_bounds(s))
    }

    /// Least upper bound of `s`; `join_of(∅)` is the bottom when it exists.
    pub fn join_of(&self, s: &Subset) -> Option<usize> {
        self.least(&self.upper_bounds(s))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.greatest(&self.down[a].intersection(&self.down[b]))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.least(&self.up[a].intersection(&self.up[b]))
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest(&self.full_set())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least(&self.full_set())
    }

    pub fn maximal(&self, s: &Subset) -> Subset {
        Subset::from_indices(self.len(), s.iter().filter(|&x| self.up[x].intersection(s).count() == 1))
    }

    pub fn minimal(&self, s: &Subset) -> Subset {
        Subset::from_indices(self.len(), s.iter().filter(|&x| self.down[x].intersection(s).count() == 1))
    }

    pub fn is_antichain(&self, s: &Subset) -> bool {
        s.iter().all(|x| self.up[x].intersection(s).count() == 1)
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in self.up[i].iter() {
                if j == i {
                    continue;
                }
                let between = self.up[i].intersection(&self.down[j]).count();
                if between == 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let order = self.linear_extension();
        let mut h = vec![0usize; self.len()];
        for &x in &order {
            h[x] = self.down[x].iter().filter(|&y| y != x).map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain starting at each element.
    pub fn depths(&self) -> Vec<usize> {
        let order = self.linear_extension();
        let mut d = vec![0usize; self.len()];
        for &x in order.iter().rev() {
            d[x] = self.up[x].iter().filter(|&y| y != x).map(|y| d[y] + 1).max().unwrap_or(0);
        }
        d
    }

    /// Elements sorted so that `i < j` implies `i` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count(), i));
        order
    }

    pub fn dual(&self) -> Poset {
        Poset {
            name: format!("{}^op", self.name),
            names: self.names.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Induced subposet on `s`, with the map from new to old indices.
    pub fn induced(&self, s: &Subset) -> (Poset, Vec<usize>) {
        let keep = s.to_vec();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        let p = Self::from_rows(self.name.clone(), names, |a, b| self.leq(keep[a], keep[b]));
        (p, keep)
    }

    /// Relabels by a permutation: new element `perm[i]` is old element `i`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let names = (0..n).map(|new| self.names[inv[new]].clone()).collect();
        Self::from_rows(self.name.clone(), names, |a, b| self.leq(inv[a], inv[b]))
    }

    /// Every downset, in canonical [`Subset`] order. Enumerated by a DFS along
    /// a linear extension: an element may join only once its strict downset
    /// is already present, so no non-downset is ever built.
    pub fn downsets(&self) -> Vec<Subset> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        let mut cur = self.empty_set();
        self.downsets_rec(&order, 0, &mut cur, &mut out, &self.down);
        out.sort();
        out
    }

    pub fn upsets(&self) -> Vec<Subset> {
        let mut order = self.linear_extension();
        order.reverse();
        let mut out = Vec::new();
        let mut cur = self.empty_set();
        self.downsets_rec(&order, 0, &mut cur, &mut out, &self.up);
        out.sort();
        out
    }

    fn downsets_rec(
        &self,
        order: &[usize],
        k: usize,
        cur: &mut Subset,
        out: &mut Vec<Subset>,
        below: &[Subset],
    ) {
        if k == order.len() {
            out.push(cur.clone());
            return;
        }
        let e = order[k];
        self.downsets_rec(order, k + 1, cur, out, below);
        let mut strict = below[e].clone();
        strict.remove(e);
        if strict.is_subset(cur) {
            cur.insert(e);
            self.downsets_rec(order, k + 1, cur, out, below);
            cur.remove(e);
        }
    }

    /// Antichains contained in `within`, in canonical order.
    pub fn antichains(&self, within: &Subset) -> Vec<Subset> {
        let items = within.to_vec();
        let mut out = Vec::new();
        let mut cur = self.empty_set();
        self.antichains_rec(&items, 0, &mut cur, &mut out);
        out.sort();
        out
    }

    fn antichains_rec(&self, items: &[usize], k: usize, cur: &mut Subset, out: &mut Vec<Subset>) {
        if k == items.len() {
            out.push(cur.clone());
            return;
        }
        let e = items[k];
        self.antichains_rec(items, k + 1, cur, out);
        if cur.iter().all(|x| !self.comparable(x, e)) {
            cur.insert(e);
            self.antichains_rec(items, k + 1, cur, out);
            cur.remove(e);
        }
    }

    /// Display helper: `{0,a,b}`.
    pub fn format_subset(&self, s: &Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn subset_of_labels(&self, labels: &[&str]) -> Option<Subset> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.index_of(l)?);
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn identity_matrix_is_antichain() {
        let m: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        let p = Poset::from_matrix(names(3), &m).unwrap();
        assert!(p.covers().is_empty());
        assert!(p.is_antichain(&p.full_set()));
    }

    #[test]
    fn upper_triangular_is_chain() {
        let m: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i <= j).collect()).collect();
        let p = Poset::from_matrix(names(3), &m).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.heights(), vec![0, 1, 2]);
    }

    #[test]
    fn validation_errors_name_indices() {
        let mut m: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        m[0][1] = true;
        m[1][0] = true;
        assert_eq!(Poset::from_matrix(names(3), &m), Err(Error::AntisymmetryViolation(0, 1)));

        let mut m: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        m[2][2] = false;
        assert_eq!(Poset::from_matrix(names(3), &m), Err(Error::ReflexivityViolation(2)));

        let mut m: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        m[0][1] = true;
        m[1][2] = true;
        assert_eq!(Poset::from_matrix(names(3), &m), Err(Error::TransitivityViolation(0, 1, 2)));

        let m = vec![vec![true, false], vec![true]];
        assert!(matches!(Poset::from_matrix(names(2), &m), Err(Error::NotSquare { row: 1, .. })));
    }

    #[test]
    fn cover_cycle_is_rejected() {
        let r = Poset::from_covers(names(3), &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(r, Err(Error::AntisymmetryViolation(_, _))));
    }

    #[test]
    fn bounds_on_three_chain() {
        let p = Poset::from_covers(vec!["0".into(), "m".into(), "1".into()], &[(0, 1), (1, 2)]).unwrap();
        let m = Subset::singleton(3, 1);
        assert_eq!(p.upper_bounds(&m).to_vec(), vec![1, 2]);
        assert_eq!(p.downset_closure(&m).to_vec(), vec![0, 1]);
        assert!(p.upper_bounds(&p.empty_set()).is_full());
        assert!(p.downset_closure(&p.empty_set()).is_empty());
    }

    #[test]
    fn two_antichain_has_no_bounds() {
        let p = Poset::from_covers(names(2), &[]).unwrap();
        let s = p.full_set();
        assert_eq!(p.meet_of(&s), None);
        assert_eq!(p.join_of(&s), None);
        assert_eq!(p.top(), None);
    }

    #[test]
    fn downsets_of_antichain_are_powerset() {
        let p = Poset::from_covers(names(4), &[]).unwrap();
        assert_eq!(p.downsets().len(), 16);
        assert_eq!(p.upsets().len(), 16);
        assert_eq!(p.antichains(&p.full_set()).len(), 16);
    }
}
