//! Order-isomorphism by colour refinement and backtracking.

use std::collections::HashMap;

use crate::poset::Poset;

/// Per-element invariant `(height, depth, |↓x|, |↑x|)`.
pub fn element_invariants(p: &Poset) -> Vec<(usize, usize, usize, usize)> {
    let h = p.heights();
    let d = p.depths();
    (0..p.len()).map(|i| (h[i], d[i], p.down(i).count(), p.up(i).count())).collect()
}

/// Isomorphism-invariant fingerprint: the sorted multiset of element
/// invariants plus the cover count.
pub fn fingerprint(p: &Poset) -> (usize, usize, Vec<(usize, usize, usize, usize)>) {
    let mut inv = element_invariants(p);
    inv.sort_unstable();
    (p.len(), p.covers().len(), inv)
}

/// Refines the invariant colouring of both posets jointly so that colour ids
/// are comparable across them.
fn refine(p: &Poset, q: &Poset) -> (Vec<usize>, Vec<usize>) {
    let mut ids: HashMap<(usize, usize, usize, usize), usize> = HashMap::new();
    let mut start = |inv: Vec<(usize, usize, usize, usize)>| -> Vec<usize> {
        inv.into_iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect()
    };
    let mut cp = start(element_invariants(p));
    let mut cq = start(element_invariants(q));
    let classes = |c: &[usize]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    loop {
        let before = classes(&cp) + classes(&cq);
        let mut table: HashMap<(usize, Vec<usize>, Vec<usize>), usize> = HashMap::new();
        let mut step = |r: &Poset, c: &[usize]| -> Vec<usize> {
            (0..r.len())
                .map(|x| {
                    let mut below: Vec<usize> = r.down(x).iter().filter(|&y| y != x).map(|y| c[y]).collect();
                    let mut above: Vec<usize> = r.up(x).iter().filter(|&y| y != x).map(|y| c[y]).collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    let next = table.len();
                    *table.entry((c[x], below, above)).or_insert(next)
                })
                .collect()
        };
        let np = step(p, &cp);
        let nq = step(q, &cq);
        cp = np;
        cq = nq;
        if classes(&cp) + classes(&cq) <= before {
            return (cp, cq);
        }
    }
}

/// An order-isomorphism `f` with `p.leq(i, j) ⟺ q.leq(f[i], f[j])`, if one
/// exists.
pub fn is_isomorphic(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() || fingerprint(p) != fingerprint(q) {
        return None;
    }
    let n = p.len();
    let (cp, cq) = refine(p, q);
    let mut hp = cp.clone();
    let mut hq = cq.clone();
    hp.sort_unstable();
    hq.sort_unstable();
    if hp != hq {
        return None;
    }
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in &cp {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = p.linear_extension();
    order.sort_by_key(|&x| class_size[&cp[x]]);
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| cq[y] == cp[x]).collect()).collect();

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        p: &Poset,
        q: &Poset,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            let ok = order[..k].iter().all(|&z| {
                let w = map[z];
                p.leq(z, x) == q.leq(w, y) && p.leq(x, z) == q.leq(y, w)
            });
            if ok {
                map[x] = y;
                used[y] = true;
                if go(k + 1, order, candidates, p, q, map, used) {
                    return true;
                }
                used[y] = false;
                map[x] = usize::MAX;
            }
        }
        false
    }
    go(0, &order, &candidates, p, q, &mut map, &mut used).then_some(map)
}

/// Number of order-automorphisms, by exhaustive backtracking within the
/// refined colour classes.
pub fn automorphism_count(p: &Poset) -> usize {
    let n = p.len();
    let (c, _) = refine(p, p);
    let order = p.linear_extension();
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| c[y] == c[x]).collect()).collect();
    fn count(k: usize, order: &[usize], candidates: &[Vec<usize>], p: &Poset, map: &mut [usize], used: &mut [bool]) -> usize {
        if k == order.len() {
            return 1;
        }
        let x = order[k];
        let mut total = 0;
        for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            if order[..k].iter().all(|&z| p.leq(z, x) == p.leq(map[z], y) && p.leq(x, z) == p.leq(y, map[z])) {
                map[x] = y;
                used[y] = true;
                total += count(k + 1, order, candidates, p, map, used);
                used[y] = false;
            }
        }
        total
    }
    count(0, &order, &candidates, p, &mut vec![usize::MAX; n], &mut vec![false; n])
}

/// Checks that `f` is an order-isomorphism from `p` onto `q`.
pub fn verify_isomorphism(p: &Poset, q: &Poset, f: &[usize]) -> bool {
    let n = p.len();
    if q.len() != n || f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|i| (0..n).all(|j| p.leq(i, j) == q.leq(f[i], f[j])))
}
