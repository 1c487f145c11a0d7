//! Independent oracles: brute force over raw relation matrices, with no use
//! of the library's enumerator, isomorphism test or lattice tables.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Rel = Vec<Vec<bool>>;

/// All partial orders on `n` points whose off-diagonal pairs outside
/// `fixed` are free; `fixed(i, j)` gives forced values.
pub fn raw_posets(n: usize, fixed: impl Fn(usize, usize) -> Option<bool>) -> Vec<Rel> {
    let free: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j && fixed(i, j).is_none()).collect();
    assert!(free.len() <= 24);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << free.len()) {
        let mut r = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                r[i][j] = i == j || fixed(i, j).unwrap_or(false);
            }
        }
        for (k, &(i, j)) in free.iter().enumerate() {
            r[i][j] = mask >> k & 1 == 1;
        }
        if is_partial_order(&r) {
            out.push(r);
        }
    }
    out
}

pub fn is_partial_order(r: &Rel) -> bool {
    let n = r.len();
    (0..n).all(|i| r[i][i])
        && (0..n).all(|i| (0..n).all(|j| i == j || !(r[i][j] && r[j][i])))
        && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(r[i][j] && r[j][k]) || r[i][k])))
}

fn least(r: &Rel, s: &[usize]) -> Option<usize> {
    s.iter().copied().find(|&x| s.iter().all(|&y| r[x][y]))
}

pub fn raw_is_lattice(r: &Rel) -> bool {
    let n = r.len();
    if n == 0 {
        return false;
    }
    let dual: Rel = (0..n).map(|i| (0..n).map(|j| r[j][i]).collect()).collect();
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ub: Vec<usize> = (0..n).filter(|&x| r[a][x] && r[b][x]).collect();
            let lb: Vec<usize> = (0..n).filter(|&x| r[x][a] && r[x][b]).collect();
            least(r, &ub).is_some() && least(&dual, &lb).is_some()
        })
    })
}

/// A greatest element, and a greatest lower bound for every pair.
pub fn raw_is_meet_semilattice(r: &Rel) -> bool {
    let n = r.len();
    let dual: Rel = (0..n).map(|i| (0..n).map(|j| r[j][i]).collect()).collect();
    n > 0
        && (0..n).any(|t| (0..n).all(|x| r[x][t]))
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let lb: Vec<usize> = (0..n).filter(|&x| r[x][a] && r[x][b]).collect();
                least(&dual, &lb).is_some()
            })
        })
}

pub fn raw_is_distributive(r: &Rel) -> bool {
    let n = r.len();
    let dual: Rel = (0..n).map(|i| (0..n).map(|j| r[j][i]).collect()).collect();
    let join = |a: usize, b: usize| least(r, &(0..n).filter(|&x| r[a][x] && r[b][x]).collect::<Vec<_>>()).unwrap();
    let meet = |a: usize, b: usize| least(&dual, &(0..n).filter(|&x| r[x][a] && r[x][b]).collect::<Vec<_>>()).unwrap();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| meet(a, join(b, c)) == join(meet(a, b), meet(a, c)))))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Lexicographically least relabeling over the permutations that move only
/// the points in `movable`.
pub fn canonical(r: &Rel, movable: &[usize]) -> Rel {
    let n = r.len();
    permutations(movable)
        .into_iter()
        .map(|p| {
            let mut f: Vec<usize> = (0..n).collect();
            for (k, &m) in movable.iter().enumerate() {
                f[m] = p[k];
            }
            let mut s = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    s[f[i]][f[j]] = r[i][j];
                }
            }
            s
        })
        .min()
        .unwrap()
}

pub fn iso_classes(rels: &[Rel], movable: &[usize]) -> BTreeSet<Rel> {
    rels.iter().map(|r| canonical(r, movable)).collect()
}

/// Labeled posets on `n` points.
pub fn labeled_posets(n: usize) -> Vec<Rel> {
    raw_posets(n, |_, _| None)
}

/// Lattices on `n >= 2` points with 0 fixed as bottom and `n - 1` as top,
/// up to isomorphism.
pub fn lattice_classes(n: usize) -> BTreeSet<Rel> {
    let rels: Vec<Rel> = raw_posets(n, |i, j| {
        if i == 0 || j == n - 1 {
            Some(true)
        } else if j == 0 || i == n - 1 {
            Some(false)
        } else {
            None
        }
    })
    .into_iter()
    .filter(raw_is_lattice)
    .collect();
    let mid: Vec<usize> = (1..n - 1).collect();
    iso_classes(&rels, &mid)
}
