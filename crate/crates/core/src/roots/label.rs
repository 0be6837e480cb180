//! The 40 labels, their triples of orthogonal A2 subsystems, and the action
//! of reflections on them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use super::group::Generator;
use super::vector::{reflect, RootName, RootVec};
use crate::arith::{QMatrix, Rational};
use crate::error::{Error, Result};

/// A divisor label: a split of `{1..6}` into two triples, or a cyclically
/// ordered triple of disjoint pairs.
///
/// Always stored in canonical form: indices sorted inside each block, the
/// block containing 1 first. Cyclic rotations of a `PairCycle` are identified,
/// reflections of the cycle are not.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    Split([u8; 3], [u8; 3]),
    PairCycle([[u8; 2]; 3]),
}

fn sorted<const N: usize>(mut a: [u8; N]) -> [u8; N] {
    a.sort_unstable();
    a
}

fn check_partition(blocks: &[&[u8]]) -> Result<()> {
    let mut seen = [false; 7];
    for &i in blocks.iter().flat_map(|b| b.iter()) {
        if !(1..=6).contains(&i) || seen[i as usize] {
            return Err(Error::Parse(format!("label blocks {blocks:?} do not partition 1..6")));
        }
        seen[i as usize] = true;
    }
    Ok(())
}

impl Label {
    pub fn split(a: [u8; 3], b: [u8; 3]) -> Result<Label> {
        check_partition(&[&a, &b])?;
        let (a, b) = (sorted(a), sorted(b));
        Ok(if a[0] == 1 {
            Label::Split(a, b)
        } else {
            Label::Split(b, a)
        })
    }

    pub fn pair_cycle(p: [[u8; 2]; 3]) -> Result<Label> {
        check_partition(&[&p[0], &p[1], &p[2]])?;
        let mut p = p.map(sorted);
        let k = p.iter().position(|q| q[0] == 1).expect("1 is covered");
        p.rotate_left(k);
        Ok(Label::PairCycle(p))
    }

    pub fn is_split(&self) -> bool {
        matches!(self, Label::Split(..))
    }

    /// The three A2 subsystems, each given by three positive roots.
    pub fn root_names(&self) -> [[RootName; 3]; 3] {
        match *self {
            Label::Split([a, b, c], [d, e, f]) => [
                [RootName::pair(a, b), RootName::pair(b, c), RootName::pair(a, c)],
                [RootName::pair(d, e), RootName::pair(e, f), RootName::pair(d, f)],
                [RootName::R, RootName::triple(a, b, c), RootName::triple(d, e, f)],
            ],
            Label::PairCycle([[a, b], [c, d], [e, f]]) => [
                [
                    RootName::pair(a, b),
                    RootName::triple(a, c, d),
                    RootName::triple(b, c, d),
                ],
                [
                    RootName::pair(c, d),
                    RootName::triple(c, e, f),
                    RootName::triple(d, e, f),
                ],
                [
                    RootName::pair(e, f),
                    RootName::triple(e, a, b),
                    RootName::triple(f, a, b),
                ],
            ],
        }
    }

    pub fn triple(&self) -> A2Triple {
        A2Triple {
            systems: self.root_names().map(|s| s.map(|n| n.vector())),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |b: &[u8]| b.iter().map(|i| i.to_string()).collect::<String>();
        match self {
            Label::Split(a, b) => write!(f, "({},{})", block(a), block(b)),
            Label::PairCycle(p) => {
                write!(f, "({},{},{})", block(&p[0]), block(&p[1]), block(&p[2]))
            }
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Accepts `(123,456)` or `(12,34,56)` in any representative order,
    /// with or without the parentheses.
    fn from_str(s: &str) -> Result<Label> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let blocks: Vec<Vec<u8>> = t
            .split(',')
            .map(|b| {
                b.trim()
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<Vec<u8>>>()
            })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("invalid label `{s}`")))?;
        match blocks.as_slice() {
            [a, b] if a.len() == 3 && b.len() == 3 => Label::split([a[0], a[1], a[2]], [b[0], b[1], b[2]]),
            [a, b, c] if a.len() == 2 && b.len() == 2 && c.len() == 2 => {
                Label::pair_cycle([[a[0], a[1]], [b[0], b[1]], [c[0], c[1]]])
            }
            _ => Err(Error::Parse(format!("invalid label `{s}`"))),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Three A2 subsystems, each represented by three of its six roots (the
/// other three are their negatives).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct A2Triple {
    pub systems: [[RootVec; 3]; 3],
}

/// Order-free, sign-free fingerprint of an [`A2Triple`].
pub type TripleKey = [[RootVec; 3]; 3];

impl A2Triple {
    pub fn key(&self) -> TripleKey {
        let mut k = self.systems.map(|s| sorted_roots(s.map(|v| v.sign_normalized())));
        k.sort_unstable();
        k
    }

    pub fn reflect(&self, v: &RootVec) -> Result<A2Triple> {
        let mut systems = self.systems;
        for s in &mut systems {
            for u in s.iter_mut() {
                *u = reflect(v, u)?;
            }
        }
        Ok(A2Triple { systems })
    }

    /// Checks that each system is a root system of type A2, that the three
    /// are mutually orthogonal and that together they span a 6-dimensional
    /// space.
    pub fn verify(&self) -> std::result::Result<(), String> {
        for s in &self.systems {
            for u in s {
                if u.norm2() != 2 {
                    return Err(format!("root {u} has norm {}", u.norm2()));
                }
            }
            for i in 0..3 {
                for j in i + 1..3 {
                    if s[i].dot(&s[j]).abs() != 1 {
                        return Err(format!("{} and {} are not at 60/120 degrees", s[i], s[j]));
                    }
                    // Closure: the reflection of one root in another is ± the third.
                    let w = reflect(&s[i], &s[j]).expect("nonzero").sign_normalized();
                    if w != s[3 - i - j].sign_normalized() {
                        return Err(format!("{{{}, {}, {}}} is not closed", s[0], s[1], s[2]));
                    }
                }
            }
        }
        for a in 0..3 {
            for b in a + 1..3 {
                for u in &self.systems[a] {
                    for v in &self.systems[b] {
                        if u.dot(v) != 0 {
                            return Err(format!("{u} and {v} are not orthogonal"));
                        }
                    }
                }
            }
        }
        let rows: Vec<Vec<Rational>> = self
            .systems
            .iter()
            .flatten()
            .map(|v| v.0.iter().map(|&a| Rational::from_integer(a.into())).collect())
            .collect();
        let rank = QMatrix::from_rows(rows).rank();
        if rank != 6 {
            return Err(format!("span has dimension {rank}"));
        }
        Ok(())
    }
}

fn sorted_roots(mut s: [RootVec; 3]) -> [RootVec; 3] {
    s.sort_unstable();
    s
}

/// The labels of the coordinates `y1..y40`, in coordinate order.
pub const COORDINATE_LABELS: [&str; 40] = [
    "(156,234)",
    "(123,456)",
    "(124,356)",
    "(145,236)",
    "(146,235)",
    "(134,256)",
    "(135,246)",
    "(136,245)",
    "(125,346)",
    "(126,345)",
    "(12,56,34)",
    "(16,23,45)",
    "(15,23,46)",
    "(13,56,24)",
    "(15,24,36)",
    "(16,24,35)",
    "(15,34,26)",
    "(16,34,25)",
    "(12,36,45)",
    "(12,35,46)",
    "(13,26,45)",
    "(13,25,46)",
    "(13,24,56)",
    "(15,46,23)",
    "(16,45,23)",
    "(12,34,56)",
    "(13,46,25)",
    "(13,45,26)",
    "(12,46,35)",
    "(12,45,36)",
    "(14,35,26)",
    "(14,36,25)",
    "(14,25,36)",
    "(14,26,35)",
    "(16,25,34)",
    "(15,26,34)",
    "(16,35,24)",
    "(15,36,24)",
    "(14,56,23)",
    "(14,23,56)",
];

/// The 40 labels with their A2 triples, indexed by coordinate (`0` is `y1`).
#[derive(Debug)]
pub struct LabelCatalog {
    labels: Vec<Label>,
    triples: Vec<A2Triple>,
    by_key: HashMap<TripleKey, usize>,
    by_label: HashMap<Label, usize>,
}

impl LabelCatalog {
    fn build() -> Result<LabelCatalog> {
        let labels: Vec<Label> = COORDINATE_LABELS.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let triples: Vec<A2Triple> = labels.iter().map(Label::triple).collect();
        for (l, t) in labels.iter().zip(&triples) {
            t.verify()
                .map_err(|e| Error::ConstructionFailure(format!("{l}: {e}")))?;
        }
        let by_key: HashMap<_, _> = triples.iter().enumerate().map(|(i, t)| (t.key(), i)).collect();
        let by_label: HashMap<_, _> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        if by_key.len() != 40 || by_label.len() != 40 {
            return Err(Error::ConstructionFailure("labels are not distinct".into()));
        }
        Ok(LabelCatalog {
            labels,
            triples,
            by_key,
            by_label,
        })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn triples(&self) -> &[A2Triple] {
        &self.triples
    }

    pub fn label(&self, index: usize) -> Label {
        self.labels[index]
    }

    /// Coordinate index (0-based) of a label.
    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    /// Index of the label whose triple has this fingerprint.
    pub fn match_triple(&self, t: &A2Triple) -> Option<usize> {
        self.by_key.get(&t.key()).copied()
    }
}

/// The shared label catalog. Panics if the built-in tables are inconsistent,
/// which the test suite rules out.
pub fn label_catalog() -> &'static LabelCatalog {
    static CELL: OnceLock<LabelCatalog> = OnceLock::new();
    CELL.get_or_init(|| LabelCatalog::build().expect("label catalog"))
}

/// Image of a label under the reflection in `root`.
pub fn label_action(root: &RootVec, label: &Label) -> Result<Label> {
    let cat = label_catalog();
    let t = label.triple().reflect(root)?;
    cat.match_triple(&t)
        .map(|i| cat.label(i))
        .ok_or_else(|| Error::NoMatch(label.to_string()))
}

/// Orbit of a label under the reflections `s1..s6`, in discovery order.
pub fn label_orbit(seed: &Label) -> Result<Vec<Label>> {
    let roots: Vec<RootVec> = Generator::COXETER.iter().map(|g| g.root().vector()).collect();
    let mut out = vec![*seed];
    let mut next = 0;
    while next < out.len() {
        let l = out[next];
        for r in &roots {
            let m = label_action(r, &l)?;
            if !out.contains(&m) {
                out.push(m);
            }
        }
        next += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_identify_representatives() {
        let a: Label = "(456,123)".parse().unwrap();
        let b: Label = "(321,654)".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(123,456)");
        let c: Label = "(56,21,34)".parse().unwrap();
        assert_eq!(c.to_string(), "(12,34,56)");
        let d: Label = "(12,56,34)".parse().unwrap();
        assert_ne!(c, d);
        assert!("(12,23,45)".parse::<Label>().is_err());
        assert!("(1234,56)".parse::<Label>().is_err());
    }

    #[test]
    fn reference_table_labels_are_canonical() {
        for (s, l) in COORDINATE_LABELS.iter().zip(label_catalog().labels()) {
            assert_eq!(*s, l.to_string());
        }
    }

    #[test]
    fn catalog_builds_and_counts() {
        let cat = label_catalog();
        assert_eq!(cat.labels().iter().filter(|l| l.is_split()).count(), 10);
        assert_eq!(cat.labels().len(), 40);
    }
}
