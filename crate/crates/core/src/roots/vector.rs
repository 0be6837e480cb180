//! Root vectors in doubled coordinates and the catalog of positive roots.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// A vector of the ambient 8-space, stored as twice its coordinates so that
/// every root has integer entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct RootVec(pub [i32; 8]);

impl RootVec {
    pub const ZERO: RootVec = RootVec([0; 8]);

    /// Twice the basis vector `e_i` (`i` in `1..=8`).
    pub fn unit(i: usize) -> RootVec {
        let mut v = [0; 8];
        v[i - 1] = 2;
        RootVec(v)
    }

    /// Inner product of the true (halved) vectors. Panics if it is not an
    /// integer, which cannot happen for lattice vectors built here.
    pub fn dot(&self, other: &RootVec) -> i32 {
        let s: i32 = self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum();
        assert_eq!(s % 4, 0, "non-integral inner product");
        s / 4
    }

    pub fn norm2(&self) -> i32 {
        self.dot(self)
    }

    pub fn add(&self, o: &RootVec) -> RootVec {
        RootVec(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn sub(&self, o: &RootVec) -> RootVec {
        RootVec(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    pub fn scale(&self, k: i32) -> RootVec {
        RootVec(self.0.map(|a| a * k))
    }

    pub fn neg(&self) -> RootVec {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// The representative of `±self` whose first nonzero entry is positive.
    pub fn sign_normalized(&self) -> RootVec {
        match self.0.iter().find(|&&a| a != 0) {
            Some(&a) if a < 0 => self.neg(),
            _ => *self,
        }
    }

    /// Membership in the 6-dimensional subspace `E`: entries 7 and 8 equal
    /// minus entry 6.
    pub fn in_e6_space(&self) -> bool {
        self.0[6] == -self.0[5] && self.0[7] == -self.0[5]
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&a| {
                if a % 2 == 0 {
                    (a / 2).to_string()
                } else {
                    format!("{a}/2")
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Reflection of `u` in the hyperplane orthogonal to `v`:
/// `u − 2⟨u,v⟩/⟨v,v⟩ · v`, which is `u − ⟨u,v⟩ v` for roots.
pub fn reflect(v: &RootVec, u: &RootVec) -> Result<RootVec> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = v.norm2();
    let k = 2 * u.dot(v);
    assert_eq!(k % n, 0, "reflection leaves the lattice");
    Ok(u.sub(&v.scale(k / n)))
}

/// Names of the 36 positive roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RootName {
    R,
    Pair(u8, u8),
    Triple(u8, u8, u8),
}

impl RootName {
    /// Name with sorted indices; panics on repeated or out-of-range indices.
    pub fn pair(i: u8, j: u8) -> RootName {
        assert!(i != j && (1..=6).contains(&i) && (1..=6).contains(&j));
        RootName::Pair(i.min(j), i.max(j))
    }

    pub fn triple(i: u8, j: u8, k: u8) -> RootName {
        let mut t = [i, j, k];
        t.sort_unstable();
        assert!(t[0] >= 1 && t[2] <= 6 && t[0] < t[1] && t[1] < t[2]);
        RootName::Triple(t[0], t[1], t[2])
    }

    /// Parses `r`, `r12`, `r123` (also accepting an `s` prefix for the
    /// matching reflection).
    pub fn parse(s: &str) -> Result<RootName> {
        let s = s.trim();
        let digits = s
            .strip_prefix('r')
            .or_else(|| s.strip_prefix('s'))
            .ok_or_else(|| Error::Parse(format!("invalid root name `{s}`")))?;
        let idx: Vec<u8> = digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("invalid root name `{s}`")))?;
        let ok = idx.iter().all(|i| (1..=6).contains(i));
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if !ok || sorted.len() != idx.len() {
            return Err(Error::Parse(format!("invalid root name `{s}`")));
        }
        match idx.len() {
            0 => Ok(RootName::R),
            2 => Ok(RootName::pair(idx[0], idx[1])),
            3 => Ok(RootName::triple(idx[0], idx[1], idx[2])),
            _ => Err(Error::Parse(format!("invalid root name `{s}`"))),
        }
    }

    pub fn all() -> Vec<RootName> {
        let mut out = vec![RootName::R];
        for i in 1..=6 {
            for j in i + 1..=6 {
                out.push(RootName::Pair(i, j));
            }
        }
        for i in 1..=6 {
            for j in i + 1..=6 {
                for k in j + 1..=6 {
                    out.push(RootName::Triple(i, j, k));
                }
            }
        }
        out
    }

    pub fn vector(&self) -> RootVec {
        let e = |i: u8| RootVec::unit(i as usize - 1);
        let r0 = aux_r0();
        match *self {
            RootName::R => RootVec([-1, -1, -1, -1, -1, -1, 1, 1]),
            RootName::Pair(1, j) => e(j).neg().add(&r0),
            RootName::Pair(j, k) => e(j).sub(&e(k)),
            RootName::Triple(1, j, k) => e(j).add(&e(k)).neg(),
            RootName::Triple(i, j, k) => e(i).add(&e(j)).add(&e(k)).neg().add(&r0),
        }
    }
}

impl fmt::Display for RootName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootName::R => write!(f, "r"),
            RootName::Pair(i, j) => write!(f, "r{i}{j}"),
            RootName::Triple(i, j, k) => write!(f, "r{i}{j}{k}"),
        }
    }
}

/// The auxiliary vector `r0 = (1,1,1,1,1,−1,1,1)/2`.
pub fn aux_r0() -> RootVec {
    RootVec([1, 1, 1, 1, 1, -1, 1, 1])
}

/// The auxiliary vector `e6 − e7 − e8`.
pub fn aux_r_tilde() -> RootVec {
    RootVec([0, 0, 0, 0, 0, 2, -2, -2])
}

/// The 36 positive roots with their names, in [`RootName::all`] order.
pub fn root_catalog() -> &'static [(RootName, RootVec)] {
    static CELL: OnceLock<Vec<(RootName, RootVec)>> = OnceLock::new();
    CELL.get_or_init(|| RootName::all().into_iter().map(|n| (n, n.vector())).collect())
}

/// The simple roots `r12, r123, r23, r34, r45, r56`.
pub fn simple_roots() -> [RootName; 6] {
    [
        RootName::Pair(1, 2),
        RootName::Triple(1, 2, 3),
        RootName::Pair(2, 3),
        RootName::Pair(3, 4),
        RootName::Pair(4, 5),
        RootName::Pair(5, 6),
    ]
}

/// Whether the index pattern of two root names is one of the listed
/// orthogonal configurations: `r` against a pair, disjoint pairs, a pair
/// inside a triple, a pair disjoint from a triple, and triples meeting in
/// exactly one index.
pub fn predicted_orthogonal(a: &RootName, b: &RootName) -> bool {
    use RootName::*;
    let set = |n: &RootName| -> Vec<u8> {
        match *n {
            R => vec![],
            Pair(i, j) => vec![i, j],
            Triple(i, j, k) => vec![i, j, k],
        }
    };
    let common = set(a).iter().filter(|i| set(b).contains(i)).count();
    match (a, b) {
        (R, Pair(..)) | (Pair(..), R) => true,
        (Pair(..), Pair(..)) => common == 0,
        (Pair(..), Triple(..)) | (Triple(..), Pair(..)) => common != 1,
        (Triple(..), Triple(..)) => common == 1,
        _ => false,
    }
}

/// Checks every unordered pair of catalog roots whose names fit the
/// orthogonal patterns; returns the number of such pairs and the pairs with
/// nonzero inner product.
pub fn orthogonality_failures() -> (usize, Vec<(RootName, RootName)>) {
    let cat = root_catalog();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (i, (a, u)) in cat.iter().enumerate() {
        for (b, v) in &cat[i + 1..] {
            if predicted_orthogonal(a, b) {
                checked += 1;
                if u.dot(v) != 0 {
                    failures.push((*a, *b));
                }
            }
        }
    }
    (checked, failures)
}

/// Looks up the catalog root equal to `±v`; returns its name and the sign.
pub fn find_root(v: &RootVec) -> Option<(RootName, i32)> {
    root_catalog().iter().find_map(|(n, r)| {
        if r == v {
            Some((*n, 1))
        } else if r.neg() == *v {
            Some((*n, -1))
        } else {
            None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_36_roots_of_norm_two() {
        let cat = root_catalog();
        assert_eq!(cat.len(), 36);
        for (n, v) in cat {
            assert_eq!(v.norm2(), 2, "{n}");
            assert!(v.in_e6_space(), "{n}");
        }
        assert_eq!(RootName::R.vector().norm2(), 2);
    }

    #[test]
    fn reflecting_in_itself_negates() {
        for (_, v) in root_catalog() {
            assert_eq!(reflect(v, v).unwrap(), v.neg());
        }
        assert_eq!(reflect(&RootVec::ZERO, &aux_r0()), Err(Error::ZeroVector));
    }

    #[test]
    fn orthogonality_pattern_is_exact() {
        let (checked, failures) = orthogonality_failures();
        assert!(failures.is_empty(), "{failures:?}");
        assert_eq!(checked, 15 + 45 + 120 + 90);
        // The listed patterns are also the only orthogonal pairs.
        let cat = root_catalog();
        for (i, (a, u)) in cat.iter().enumerate() {
            for (b, v) in &cat[i + 1..] {
                assert_eq!(u.dot(v) == 0, predicted_orthogonal(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(RootName::parse("r").unwrap(), RootName::R);
        assert_eq!(RootName::parse("s21").unwrap(), RootName::Pair(1, 2));
        assert_eq!(RootName::parse("r315").unwrap(), RootName::Triple(1, 3, 5));
        assert!(RootName::parse("r11").is_err());
        assert!(RootName::parse("r7").is_err());
        assert_eq!(RootName::Triple(2, 4, 6).to_string(), "r246");
    }
}
