//! Signed permutations of the 40 coordinates, the generators, group closure
//! and orbits.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::Serialize;

use super::label::{label_action, label_catalog};
use super::vector::RootName;
use crate::arith::{y_context, MPoly, Monomial, Rational};
use crate::error::{Error, Result};

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_BUDGET: usize = 200_000;

/// A signed permutation of `y1..y40`: coordinate `α` goes to `sign[α]·y_{target[α]}`
/// (0-based indices).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm40 {
    target: [u8; 40],
    sign: [i8; 40],
}

impl SignedPerm40 {
    pub fn identity() -> Self {
        SignedPerm40 {
            target: std::array::from_fn(|i| i as u8),
            sign: [1; 40],
        }
    }

    /// Builds from `(target, sign)` pairs with 1-based targets, as written in
    /// transformation tables. Errors unless the targets form a permutation.
    pub fn from_table(rows: &[(usize, i8); 40]) -> Result<Self> {
        let mut seen = [false; 40];
        let mut target = [0u8; 40];
        let mut sign = [0i8; 40];
        for (a, &(b, e)) in rows.iter().enumerate() {
            if !(1..=40).contains(&b) || seen[b - 1] || (e != 1 && e != -1) {
                return Err(Error::Parse(format!("row {} is not a signed permutation", a + 1)));
            }
            seen[b - 1] = true;
            target[a] = (b - 1) as u8;
            sign[a] = e;
        }
        Ok(SignedPerm40 { target, sign })
    }

    /// `(target, sign)` of coordinate `alpha` (0-based).
    pub fn apply(&self, alpha: usize) -> (usize, i8) {
        (self.target[alpha] as usize, self.sign[alpha])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm40) -> SignedPerm40 {
        let mut out = SignedPerm40::identity();
        for a in 0..40 {
            let (b, e1) = other.apply(a);
            let (c, e2) = self.apply(b);
            out.target[a] = c as u8;
            out.sign[a] = e1 * e2;
        }
        out
    }

    pub fn inverse(&self) -> SignedPerm40 {
        let mut out = SignedPerm40::identity();
        for a in 0..40 {
            let (b, e) = self.apply(a);
            out.target[b] = a as u8;
            out.sign[b] = e;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPerm40::identity()
    }

    pub fn pow(&self, n: u32) -> SignedPerm40 {
        (0..n).fold(SignedPerm40::identity(), |acc, _| self.compose(&acc))
    }

    /// Underlying unsigned permutation.
    pub fn unsigned(&self) -> [u8; 40] {
        self.target
    }

    /// Rows `(target, sign)` with 1-based targets.
    pub fn to_table(&self) -> Vec<(usize, i8)> {
        (0..40).map(|a| (self.target[a] as usize + 1, self.sign[a])).collect()
    }

    /// Action on a linear form `Σ c_α y_α`: `y_α` is replaced by its image.
    pub fn act_vector(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), 40);
        let mut out = vec![Rational::default(); 40];
        for (a, c) in v.iter().enumerate() {
            let (b, e) = self.apply(a);
            out[b] = if e < 0 { -c } else { c.clone() };
        }
        out
    }

    /// Action on a polynomial in `y1..y40` by the same substitution.
    pub fn act_poly(&self, p: &MPoly) -> MPoly {
        let terms = p.terms().iter().map(|(m, c)| {
            let mut exps = Monomial::one(40);
            let mut negative = false;
            for (a, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    let (b, e) = self.apply(a);
                    exps.0[b] = k;
                    negative ^= e < 0 && k % 2 == 1;
                }
            }
            (exps, if negative { -c } else { c.clone() })
        });
        MPoly::from_terms(p.ctx(), terms)
    }
}

/// Signed permutation induced by the reflection in a root: labels move by
/// the reflection, with sign −1 on moved labels and +1 on fixed ones.
pub fn signed_perm_for_root(root: RootName) -> Result<SignedPerm40> {
    let cat = label_catalog();
    let v = root.vector();
    let mut rows = [(0usize, 0i8); 40];
    for (a, l) in cat.labels().iter().enumerate() {
        let img = label_action(&v, l)?;
        let b = cat.index_of(&img).expect("catalog label");
        rows[a] = (b + 1, if a == b { 1 } else { -1 });
    }
    SignedPerm40::from_table(&rows)
}

/// The six Coxeter generators `s1..s6` and the extra involution `sr`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Generator {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    Sr,
}

impl Generator {
    pub const COXETER: [Generator; 6] = [
        Generator::S1,
        Generator::S2,
        Generator::S3,
        Generator::S4,
        Generator::S5,
        Generator::S6,
    ];

    pub const ALL: [Generator; 7] = [
        Generator::S1,
        Generator::S2,
        Generator::S3,
        Generator::S4,
        Generator::S5,
        Generator::S6,
        Generator::Sr,
    ];

    /// The root whose reflection this generator is.
    pub fn root(&self) -> RootName {
        match self {
            Generator::S1 => RootName::Pair(1, 2),
            Generator::S2 => RootName::Pair(2, 3),
            Generator::S3 => RootName::Pair(3, 4),
            Generator::S4 => RootName::Pair(4, 5),
            Generator::S5 => RootName::Pair(5, 6),
            Generator::S6 => RootName::Triple(1, 2, 3),
            Generator::Sr => RootName::R,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::S1 => "s1",
            Generator::S2 => "s2",
            Generator::S3 => "s3",
            Generator::S4 => "s4",
            Generator::S5 => "s5",
            Generator::S6 => "s6",
            Generator::Sr => "sr",
        }
    }

    /// Order of `self·other` in the Coxeter group: 3 on edges of the graph
    /// `s1–s2–s3–s4–s5` with `s3–s6`, 2 between distinct non-adjacent
    /// generators, 1 on the diagonal. `sr` commutes with `s1..s5`.
    pub fn coxeter_exponent(&self, other: &Generator) -> u32 {
        use Generator::*;
        if self == other {
            return 1;
        }
        let edges = [(S1, S2), (S2, S3), (S3, S4), (S4, S5), (S3, S6)];
        if edges.contains(&(*self, *other)) || edges.contains(&(*other, *self)) {
            3
        } else {
            2
        }
    }

    pub fn signed_perm(&self) -> SignedPerm40 {
        signed_perm_for_root(self.root()).expect("catalog is closed under reflections")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Accepts `s1..s6`, `sr`, and the root-reflection names
    /// `s12, s23, s34, s45, s56, s123`.
    fn from_str(s: &str) -> Result<Generator> {
        let g = match s.trim() {
            "s1" | "s12" => Generator::S1,
            "s2" | "s23" => Generator::S2,
            "s3" | "s34" => Generator::S3,
            "s4" | "s45" => Generator::S4,
            "s5" | "s56" => Generator::S5,
            "s6" | "s123" => Generator::S6,
            "sr" | "s_r" => Generator::Sr,
            other => return Err(Error::UnknownGenerator(other.to_string())),
        };
        Ok(g)
    }
}

/// Breadth-first closure of `generators` under left multiplication.
pub fn closure<T, F>(identity: T, generators: &[T], mul: F, budget: usize) -> Result<HashSet<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let n = mul(g, &e);
            if !seen.contains(&n) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    Ok(seen)
}

/// All elements of the group generated by signed permutations.
pub fn enumerate_group(generators: &[SignedPerm40], budget: usize) -> Result<HashSet<SignedPerm40>> {
    closure(SignedPerm40::identity(), generators, |a, b| a.compose(b), budget)
}

/// Objects the signed permutations act on, with a canonical representative
/// of each class up to nonzero scalars.
pub trait Orbitable: Clone + Eq + Hash {
    fn act(&self, g: &SignedPerm40) -> Self;
    fn normalize(&self) -> Self;
}

impl Orbitable for Vec<Rational> {
    fn act(&self, g: &SignedPerm40) -> Self {
        g.act_vector(self)
    }

    fn normalize(&self) -> Self {
        match crate::arith::rational::primitive_integer_vector(self) {
            Some(v) => v.into_iter().map(Rational::from_integer).collect(),
            None => self.clone(),
        }
    }
}

impl std::hash::Hash for MPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx().name().hash(state);
        for (m, c) in self.terms() {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Orbitable for MPoly {
    fn act(&self, g: &SignedPerm40) -> Self {
        g.act_poly(self)
    }

    fn normalize(&self) -> Self {
        self.integer_primitive().1
    }
}

/// Orbit of `seed` under the group generated by `generators`, as distinct
/// normalized representatives in discovery order.
pub fn orbit<T: Orbitable>(seed: &T, generators: &[SignedPerm40]) -> Vec<T> {
    let start = seed.normalize();
    let mut seen: HashSet<T> = HashSet::new();
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let n = e.act(g).normalize();
            if seen.insert(n.clone()) {
                out.push(n.clone());
                queue.push_back(n);
            }
        }
    }
    out
}

/// The seed polynomial `y_i` (1-based) in the y-context.
pub fn y(i: usize) -> MPoly {
    MPoly::var(&y_context(), i - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for g in Generator::ALL {
            let p = g.signed_perm();
            assert!(p.compose(&p).is_identity(), "{g}");
            assert_eq!(p.inverse(), p);
        }
    }

    #[test]
    fn parse_generator_names() {
        assert_eq!("s123".parse::<Generator>().unwrap(), Generator::S6);
        assert_eq!("s4".parse::<Generator>().unwrap(), Generator::S4);
        assert!(matches!("s7".parse::<Generator>(), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn polynomial_action_matches_substitution() {
        let g = Generator::S6.signed_perm();
        let p = &(&y(3) * &y(13)) * &y(21) - &(&(&y(4) * &y(14)) * &y(20));
        let images: Vec<MPoly> = (0..40)
            .map(|a| {
                let (b, e) = g.apply(a);
                y(b + 1).scale(&Rational::from_integer(e.into()))
            })
            .collect();
        assert_eq!(g.act_poly(&p), p.substitute(&images).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let gens: Vec<_> = Generator::COXETER.iter().map(|g| g.signed_perm()).collect();
        assert_eq!(enumerate_group(&gens, 100), Err(Error::BudgetExceeded(100)));
    }
}
