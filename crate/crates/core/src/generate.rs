//! Named poset families, plus linear sum and product.
//!
//! The ladder and Funayama families are finite truncations of infinite
//! lattices: `n` counts the rungs or levels kept. Every truncation is a
//! bounded lattice, so phenomena that need an infinite chain do not appear.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// `P ⊕ Q`: every element of `p` below every element of `q`.
pub fn linear_sum(p: &Poset, q: &Poset) -> Poset {
    let (np, nq) = (p.len(), q.len());
    let names = p.labels().iter().chain(q.labels()).cloned().collect();
    Poset::from_rows(format!("{}+{}", p.name(), q.name()), names, |i, j| match (i < np, j < np) {
        (true, true) => p.leq(i, j),
        (true, false) => true,
        (false, true) => false,
        (false, false) => q.leq(i - np, j - np),
    })
    .with_name(if nq == 0 { p.name().to_string() } else { format!("{}+{}", p.name(), q.name()) })
}

/// `P × Q` with the componentwise order; element `(i, j)` has index
/// `i * |Q| + j`.
pub fn product(p: &Poset, q: &Poset) -> Poset {
    let nq = q.len();
    let mut names = Vec::with_capacity(p.len() * nq);
    for i in 0..p.len() {
        for j in 0..nq {
            names.push(format!("({},{})", p.label(i), q.label(j)));
        }
    }
    Poset::from_rows(format!("{}x{}", p.name(), q.name()), names, |a, b| {
        p.leq(a / nq, b / nq) && q.leq(a % nq, b % nq)
    })
}

pub fn chain(n: usize) -> Poset {
    labelled_chain(format!("chain({n})"), (0..n).map(|i| i.to_string()).collect())
}

fn labelled_chain(name: String, names: Vec<String>) -> Poset {
    Poset::from_rows(name, names, |i, j| i <= j)
}

pub fn antichain(n: usize) -> Poset {
    Poset::from_rows(format!("antichain({n})"), (0..n).map(|i| i.to_string()).collect(), |i, j| i == j)
}

/// The powerset of `{0..k-1}`; element index is the bitmask.
pub fn boolean(k: usize) -> Poset {
    assert!(k < 20, "boolean({k}) is too large");
    let n = 1usize << k;
    let names = (0..n)
        .map(|m| {
            let parts: Vec<String> = (0..k).filter(|b| m >> b & 1 == 1).map(|b| b.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    Poset::from_rows(format!("boolean({k})"), names, |a, b| a & !b == 0)
}

pub fn m3() -> Poset {
    Poset::from_covers(
        ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("m3")
    .with_name("m3")
}

/// Pentagon `0 < a < 1`, `0 < b < c < 1`.
pub fn n5() -> Poset {
    Poset::from_covers(
        ["0", "a", "b", "c", "1"].map(String::from).to_vec(),
        &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)],
    )
    .expect("n5")
    .with_name("n5")
}

/// `n × 2`: bottom rail `0 < c0 < … < c(n-2)`, top rail `b0 < … < b(n-1)`,
/// rung `i` joining the `i`-th bottom element to `b_i`. Indexed like
/// `product(chain(n), chain(2))`.
pub fn ladder(n: usize) -> Poset {
    let mut names = Vec::with_capacity(2 * n);
    for i in 0..n {
        names.push(if i == 0 { "0".to_string() } else { format!("c{}", i - 1) });
        names.push(format!("b{i}"));
    }
    Poset::from_rows(format!("ladder({n})"), names, |a, b| a / 2 <= b / 2 && a % 2 <= b % 2)
}

/// `ladder(n) ⊕ 1`.
pub fn ladder_top(n: usize) -> Poset {
    let one = labelled_chain("1".into(), vec!["1".into()]);
    linear_sum(&ladder(n), &one).with_name(format!("ladder_top({n})"))
}

/// `m` elements `a(m-2) < … < a0 < 1`, listed bottom-up.
fn dual_chain(prefix: &str, m: usize, first: usize) -> Poset {
    let mut names: Vec<String> = (first..first + m - 1).rev().map(|i| format!("{prefix}{i}")).collect();
    names.push("1".into());
    labelled_chain(String::new(), names)
}

/// `ladder(n) ⊕ (m-element dual chain)` with the dual chain labelled
/// `… < a1 < a0 < 1`.
pub fn ladder_dualchain(n: usize, m: usize) -> Poset {
    linear_sum(&ladder(n), &dual_chain("a", m, 0)).with_name(format!("ladder_dualchain({n},{m})"))
}

/// `n`-chain `0 < a1 < … < a(n-1)` below the dual chain `b(m-1) < … < b1 < 1`.
pub fn chain_dualchain(n: usize, m: usize) -> Poset {
    let low = labelled_chain(
        String::new(),
        (0..n).map(|i| if i == 0 { "0".to_string() } else { format!("a{i}") }).collect(),
    );
    linear_sum(&low, &dual_chain("b", m, 1)).with_name(format!("chain_dualchain({n},{m})"))
}

/// Funayama's sublattice of `A1 × 2 × A3`, where `A1` is truncated to
/// `b1 < … < bn < an < … < a1` and `A3` to `d1 < … < dn < cn < … < c1`. The
/// elements are the triples `(p, q, r)` with `p ∈ a ⇒ q = 1` and
/// `q = 1 ⇒ r ∈ c`; there are `4n²` of them.
pub fn funayama_trunc(n: usize) -> Poset {
    // Rank in the truncated chain: b_j -> j-1, a_i -> 2n-i.
    let rail = |low: &str, high: &str| -> Vec<String> {
        (1..=n).map(|j| format!("{low}{j}")).chain((1..=n).rev().map(|i| format!("{high}{i}"))).collect()
    };
    let first = rail("b", "a");
    let third = rail("d", "c");
    let mut elems = Vec::new();
    for p in 0..2 * n {
        for q in 0..2usize {
            for r in 0..2 * n {
                let p_is_a = p >= n;
                let r_is_c = r >= n;
                if (!p_is_a || q == 1) && (q == 0 || r_is_c) {
                    elems.push((p, q, r));
                }
            }
        }
    }
    let names = elems.iter().map(|&(p, q, r)| format!("({},{},{})", first[p], q, third[r])).collect();
    Poset::from_rows(format!("funayama_trunc({n})"), names, |i, j| {
        let (a, b) = (elems[i], elems[j]);
        a.0 <= b.0 && a.1 <= b.1 && a.2 <= b.2
    })
}

/// A family name with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Chain(usize),
    Antichain(usize),
    Boolean(usize),
    M3,
    N5,
    Ladder(usize),
    LadderTop(usize),
    LadderDualchain(usize, usize),
    ChainDualchain(usize, usize),
    FunayamaTrunc(usize),
}

impl Family {
    pub const NAMES: [&'static str; 10] = [
        "chain",
        "antichain",
        "boolean",
        "m3",
        "n5",
        "ladder",
        "ladder_top",
        "ladder_dualchain",
        "chain_dualchain",
        "funayama_trunc",
    ];

    pub fn parse(name: &str, params: &[usize]) -> Result<Family> {
        let bad = |reason: &str| Error::BadParams { family: name.to_string(), reason: reason.to_string() };
        let one = |params: &[usize]| -> Result<usize> {
            match params {
                [k] if *k >= 1 => Ok(*k),
                [_] => Err(bad("parameter must be >= 1")),
                _ => Err(bad("expected one parameter")),
            }
        };
        let two = |params: &[usize]| -> Result<(usize, usize)> {
            match params {
                [a, b] if *a >= 1 && *b >= 1 => Ok((*a, *b)),
                [_, _] => Err(bad("parameters must be >= 1")),
                _ => Err(bad("expected two parameters")),
            }
        };
        let none = |params: &[usize]| -> Result<()> {
            if params.is_empty() {
                Ok(())
            } else {
                Err(bad("takes no parameters"))
            }
        };
        Ok(match name {
            "chain" => Family::Chain(one(params)?),
            "antichain" => Family::Antichain(one(params)?),
            "boolean" => {
                let k = one(params)?;
                if k > 12 {
                    return Err(bad("at most 12 generators"));
                }
                Family::Boolean(k)
            }
            "m3" => none(params).map(|_| Family::M3)?,
            "n5" => none(params).map(|_| Family::N5)?,
            "ladder" => Family::Ladder(one(params)?),
            "ladder_top" => Family::LadderTop(one(params)?),
            "ladder_dualchain" => {
                let (a, b) = two(params)?;
                Family::LadderDualchain(a, b)
            }
            "chain_dualchain" => {
                let (a, b) = two(params)?;
                Family::ChainDualchain(a, b)
            }
            "funayama_trunc" => Family::FunayamaTrunc(one(params)?),
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }

    pub fn build(&self) -> Poset {
        match *self {
            Family::Chain(n) => chain(n),
            Family::Antichain(n) => antichain(n),
            Family::Boolean(k) => boolean(k),
            Family::M3 => m3(),
            Family::N5 => n5(),
            Family::Ladder(n) => ladder(n),
            Family::LadderTop(n) => ladder_top(n),
            Family::LadderDualchain(n, m) => ladder_dualchain(n, m),
            Family::ChainDualchain(n, m) => chain_dualchain(n, m),
            Family::FunayamaTrunc(n) => funayama_trunc(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Chain(n) => write!(f, "chain({n})"),
            Family::Antichain(n) => write!(f, "antichain({n})"),
            Family::Boolean(k) => write!(f, "boolean({k})"),
            Family::M3 => write!(f, "m3"),
            Family::N5 => write!(f, "n5"),
            Family::Ladder(n) => write!(f, "ladder({n})"),
            Family::LadderTop(n) => write!(f, "ladder_top({n})"),
            Family::LadderDualchain(n, m) => write!(f, "ladder_dualchain({n},{m})"),
            Family::ChainDualchain(n, m) => write!(f, "chain_dualchain({n},{m})"),
            Family::FunayamaTrunc(n) => write!(f, "funayama_trunc({n})"),
        }
    }
}

pub fn generate(name: &str, params: &[usize]) -> Result<Poset> {
    Ok(Family::parse(name, params)?.build())
}

/// A one-parameter or fixed family member isomorphic to `p`, if any;
/// used to name completions in reports.
pub fn identify(p: &Poset) -> Option<Family> {
    let n = p.len();
    let mut candidates = vec![Family::Chain(n), Family::Antichain(n), Family::M3, Family::N5];
    if n.is_power_of_two() {
        candidates.push(Family::Boolean(n.trailing_zeros() as usize));
    }
    if n % 2 == 0 && n >= 2 {
        candidates.push(Family::Ladder(n / 2));
    }
    candidates
        .into_iter()
        .filter(|f| n >= 1 && !matches!(f, Family::Boolean(k) if *k > 12))
        .find(|f| crate::iso::is_isomorphic(&f.build(), p).is_some())
}
