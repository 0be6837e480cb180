//! The orbit of the two-term cubic seed and the reduced cubics in the pivot
//! coordinates.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::linear::{group_generators, linear_relation_basis, PivotBasis};
use super::reference::CUBICS;
use crate::arith::{g_context, poly, y_context, EchelonBasis, MPoly, Monomial, Scalar, SparseVec};
use crate::error::{Error, Result};
use crate::roots::{orbit, Generator};

/// Expected number of independent reduced cubics.
pub const CUBIC_COUNT: usize = 30;

/// `y_a y_b y_c − y_d y_e y_f`, each triple sorted and `plus < minus`
/// lexicographically (the relation is only defined up to sign).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwoTermCubic {
    pub plus: [usize; 3],
    pub minus: [usize; 3],
}

impl TwoTermCubic {
    /// Canonical form of `y_a y_b y_c − y_d y_e y_f`.
    pub fn new(plus: [usize; 3], minus: [usize; 3]) -> Result<Self> {
        let (mut a, mut b) = (plus, minus);
        a.sort_unstable();
        b.sort_unstable();
        let distinct = |t: &[usize; 3]| t[0] < t[1] && t[1] < t[2] && t[0] >= 1 && t[2] <= 40;
        if !distinct(&a) || !distinct(&b) || a == b {
            return Err(Error::ConstructionFailure(format!("invalid cubic {a:?} - {b:?}")));
        }
        Ok(if a < b {
            TwoTermCubic { plus: a, minus: b }
        } else {
            TwoTermCubic { plus: b, minus: a }
        })
    }

    /// The seed `y3 y13 y21 − y4 y14 y20`.
    pub fn seed() -> Self {
        Self::new([3, 13, 21], [4, 14, 20]).expect("valid seed")
    }

    /// Reads `±(m1 − m2)` for squarefree cubic monomials `m1, m2` in the
    /// y-context.
    pub fn from_poly(p: &MPoly) -> Result<Self> {
        let bad = || Error::ConstructionFailure(format!("{p} is not a two-term binomial cubic"));
        if p.len() != 2 || p.total_degree() != 3 {
            return Err(bad());
        }
        let mut parts = Vec::with_capacity(2);
        for (m, c) in p.terms() {
            let idx: Vec<usize> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1)
                .collect();
            let c = c.to_integer().to_i64().ok_or_else(bad)?;
            if idx.len() != 3 || c.abs() != 1 {
                return Err(bad());
            }
            parts.push(([idx[0], idx[1], idx[2]], c));
        }
        if parts[0].1 != -parts[1].1 {
            return Err(bad());
        }
        Self::new(parts[0].0, parts[1].0)
    }

    pub fn to_poly(&self) -> MPoly {
        let ctx = y_context();
        let mono = |t: &[usize; 3]| {
            MPoly::product(
                &ctx,
                t.iter().map(|&i| MPoly::var(&ctx, i - 1)).collect::<Vec<_>>().iter(),
            )
        };
        &mono(&self.plus) - &mono(&self.minus)
    }

    pub fn eval<S: Scalar>(&self, point: &[S]) -> S {
        let m = |t: &[usize; 3]| point[t[0] - 1].times(&point[t[1] - 1]).times(&point[t[2] - 1]);
        m(&self.plus).minus(&m(&self.minus))
    }
}

impl fmt::Display for TwoTermCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

fn build_cubics() -> Result<Vec<TwoTermCubic>> {
    let mut out = orbit(&TwoTermCubic::seed().to_poly(), &group_generators())
        .iter()
        .map(TwoTermCubic::from_poly)
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// The orbit of the cubic seed, one representative per scalar class,
/// sorted.
pub fn cubic_relation_set() -> Result<&'static [TwoTermCubic]> {
    static CELL: OnceLock<Result<Vec<TwoTermCubic>>> = OnceLock::new();
    CELL.get_or_init(build_cubics).as_deref().map_err(Clone::clone)
}

/// Coefficient vectors of cubics in the g-context over a growing monomial
/// index.
#[derive(Clone, Debug, Default)]
pub struct CubicSpan {
    index: HashMap<Monomial, usize>,
    basis: EchelonBasis,
}

impl CubicSpan {
    fn vector(&mut self, p: &MPoly) -> SparseVec {
        let n = self.index.len();
        let mut next = n;
        let mut v = SparseVec::new();
        for (m, c) in p.terms() {
            let k = *self.index.entry(m.clone()).or_insert_with(|| {
                next += 1;
                next - 1
            });
            v.insert(k, c.clone());
        }
        v
    }

    /// Adds `p`; returns false if it was already in the span.
    pub fn insert(&mut self, p: &MPoly) -> bool {
        let v = self.vector(p);
        self.basis.insert(&v)
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        let mut v = SparseVec::new();
        for (m, c) in p.terms() {
            match self.index.get(m) {
                Some(&k) => {
                    v.insert(k, c.clone());
                }
                None => return false,
            }
        }
        self.basis.contains(&v)
    }

    pub fn dimension(&self) -> usize {
        self.basis.rank()
    }
}

/// The thirty independent reduced cubics and their span.
#[derive(Clone, Debug)]
pub struct ReducedCubics {
    /// Orbit members whose reductions were selected, with the reductions.
    pub selected: Vec<(TwoTermCubic, MPoly)>,
    pub span: CubicSpan,
}

/// A y-context polynomial rewritten in the pivot coordinates.
pub fn reduce_to_g(p: &MPoly, pivots: &PivotBasis) -> Result<MPoly> {
    Ok(p.substitute(&pivots.y_images())?.integer_primitive().1)
}

fn build_reduced() -> Result<ReducedCubics> {
    let pivots = &linear_relation_basis()?.pivots;
    let images = pivots.y_images();
    let mut span = CubicSpan::default();
    let mut selected = Vec::new();
    for c in cubic_relation_set()? {
        let r = c.to_poly().substitute(&images)?.integer_primitive().1;
        if !r.is_zero() && span.insert(&r) {
            selected.push((c.clone(), r));
        }
    }
    if selected.len() != CUBIC_COUNT {
        return Err(Error::CountMismatch {
            expected: CUBIC_COUNT,
            found: selected.len(),
        });
    }
    Ok(ReducedCubics { selected, span })
}

/// First-come independent reductions of the sorted cubic orbit.
pub fn reduced_cubics() -> Result<&'static ReducedCubics> {
    static CELL: OnceLock<Result<ReducedCubics>> = OnceLock::new();
    CELL.get_or_init(build_reduced).as_ref().map_err(Clone::clone)
}

/// The reference cubic with the given index (1..11 or 19).
pub fn reference_cubic(j: usize) -> Option<MPoly> {
    CUBICS.iter().find(|(k, _)| *k == j).map(|(_, s)| poly(&g_context(), s))
}

/// Indices of the reference cubics.
pub fn reference_cubic_indices() -> impl Iterator<Item = usize> {
    CUBICS.iter().map(|(k, _)| *k)
}

/// A g-context polynomial read back in the y-context through the pivots.
pub fn lift_to_y(p: &MPoly) -> Result<MPoly> {
    p.substitute(&PivotBasis::g_images())
}

/// Whether a generator maps the span of reduced cubics into itself.
pub fn span_is_stable_under(g: Generator) -> Result<bool> {
    let red = reduced_cubics()?;
    let pivots = &linear_relation_basis()?.pivots;
    let perm = g.signed_perm();
    for (_, r) in &red.selected {
        let image = reduce_to_g(&perm.act_poly(&lift_to_y(r)?), pivots)?;
        if !image.is_zero() && !red.span.contains(&image) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis of the reduced cubics extending the reference cubics by orbit
/// members, numbered `1..=30` with the reference indices kept.
pub fn numbered_cubic_basis() -> Result<&'static [(usize, MPoly)]> {
    static CELL: OnceLock<Result<Vec<(usize, MPoly)>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let red = reduced_cubics()?;
        let mut span = CubicSpan::default();
        let mut out: Vec<(usize, MPoly)> = Vec::new();
        for (j, s) in CUBICS {
            let p = poly(&g_context(), s);
            if !span.insert(&p) {
                return Err(Error::CountMismatch {
                    expected: CUBICS.len(),
                    found: out.len(),
                });
            }
            out.push((j, p));
        }
        let mut free = (1..=CUBIC_COUNT).filter(|j| !CUBICS.iter().any(|(k, _)| k == j));
        for (_, r) in &red.selected {
            if span.insert(r) {
                out.push((free.next().expect("at most thirty"), r.clone()));
            }
        }
        if out.len() != CUBIC_COUNT {
            return Err(Error::CountMismatch {
                expected: CUBIC_COUNT,
                found: out.len(),
            });
        }
        out.sort_by_key(|(j, _)| *j);
        Ok(out)
    })
    .as_deref()
    .map_err(Clone::clone)
}
