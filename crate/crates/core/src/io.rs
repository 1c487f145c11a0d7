//! JSON poset files and Graphviz output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Poset;

/// On-disk poset: `covers` lists pairs `[i, j]` with `i` covered by `j`.
/// Any generating relation is accepted; the reader takes the
/// reflexive-transitive closure and validates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> Self {
        PosetJson {
            name: p.name().to_string(),
            elements: p.labels().to_vec(),
            covers: p.covers().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        Ok(Poset::from_covers(self.elements.clone(), &covers)?.with_name(self.name.clone()))
    }
}

pub fn read_poset_json(text: &str) -> Result<Poset> {
    let parsed: PosetJson = serde_json::from_str(text)?;
    parsed.to_poset()
}

pub fn write_poset_json(p: &Poset) -> String {
    serde_json::to_string(&PosetJson::from_poset(p)).expect("poset serializes")
}

pub fn read_poset_file(path: &std::path::Path) -> Result<Poset> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    read_poset_json(&text)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A Hasse diagram in DOT, bottom to top, with one `rank=same` group per
/// height. `attrs[i]`, when given, is appended to node `i`'s attribute list.
pub fn hasse_dot(title: &str, labels: &[String], covers: &[(usize, usize)], heights: &[usize], attrs: &[String]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n  node [shape=box];\n", quote(title));
    for (i, l) in labels.iter().enumerate() {
        let extra = attrs.get(i).filter(|a| !a.is_empty()).map(|a| format!(", {a}")).unwrap_or_default();
        out.push_str(&format!("  n{i} [label={}{extra}];\n", quote(l)));
    }
    let top = heights.iter().copied().max().map_or(0, |h| h + 1);
    for h in 0..top {
        let row: Vec<String> = (0..labels.len()).filter(|&i| heights[i] == h).map(|i| format!("n{i}")).collect();
        if !row.is_empty() {
            out.push_str(&format!("  {{ rank=same; {}; }}\n", row.join("; ")));
        }
    }
    for &(i, j) in covers {
        out.push_str(&format!("  n{i} -> n{j} [arrowhead=none];\n"));
    }
    out.push_str("}\n");
    out
}

pub fn poset_dot(p: &Poset) -> String {
    hasse_dot(p.name(), p.labels(), &p.covers(), &p.heights(), &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{ladder_top, m3};

    #[test]
    fn json_round_trip() {
        for p in [m3(), ladder_top(3)] {
            let text = write_poset_json(&p);
            let q = read_poset_json(&text).unwrap();
            assert_eq!(q, p);
        }
    }

    #[test]
    fn reader_closes_and_validates() {
        let q = read_poset_json(r#"{"name":"c3","elements":["0","m","1"],"covers":[[0,1],[1,2]]}"#).unwrap();
        assert!(q.leq(0, 2));
        let bad = read_poset_json(r#"{"name":"x","elements":["a","b"],"covers":[[0,1],[1,0]]}"#);
        assert_eq!(bad, Err(Error::AntisymmetryViolation(0, 1)));
        let range = read_poset_json(r#"{"name":"x","elements":["a"],"covers":[[0,3]]}"#);
        assert_eq!(range, Err(Error::CoverOutOfRange(0, 3)));
        assert!(matches!(read_poset_json("{"), Err(Error::Input(_))));
    }

    #[test]
    fn dot_has_ranks() {
        let dot = poset_dot(&m3());
        assert!(dot.contains("rank=same; n1; n2; n3;"));
        assert_eq!(dot.matches("->").count(), 6);
    }
}
