//! The orbit of the linear seed, its rank and the pivot expressions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::reference::PIVOT_EXPRESSIONS;
use crate::arith::{g_context, poly, y_context, MPoly, QMatrix, Rational, Scalar};
use crate::error::{Error, Result};
use crate::roots::{orbit, Generator, SignedPerm40};

/// The pivot coordinates, in the order of the g-variables `g1..g9, g0`.
pub const PIVOTS: [usize; 10] = [1, 3, 4, 5, 7, 11, 12, 13, 15, 19];

/// Expected rank of the linear system.
pub const LINEAR_RANK: usize = 30;

/// The generators of the group as signed permutations.
pub fn group_generators() -> Vec<SignedPerm40> {
    Generator::COXETER.iter().map(Generator::signed_perm).collect()
}

/// A linear form in `y1..y40` with coprime integer coefficients and a
/// positive first nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm40(Vec<BigInt>);

impl LinearForm40 {
    /// Canonical form of a nonzero coefficient vector.
    pub fn new(coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != 40 {
            return Err(Error::ArityMismatch {
                expected: 40,
                got: coeffs.len(),
            });
        }
        crate::arith::rational::primitive_integer_vector(coeffs)
            .map(LinearForm40)
            .ok_or(Error::ZeroVector)
    }

    /// The seed `y3 − y4 + y5 − y6`.
    pub fn seed() -> Self {
        let mut v = vec![Rational::zero(); 40];
        for (i, c) in [(3, 1), (4, -1), (5, 1), (6, -1)] {
            v[i - 1] = Rational::from_integer(c.into());
        }
        Self::new(&v).expect("nonzero")
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    /// Value at a point with 40 coordinates.
    pub fn eval<S: Scalar>(&self, point: &[S]) -> S {
        self.0
            .iter()
            .zip(point)
            .filter(|(c, _)| !c.is_zero())
            .fold(S::null(), |acc, (c, p)| {
                acc.plus(&S::from_rational(&Rational::from_integer(c.clone())).times(p))
            })
    }

    pub fn to_poly(&self) -> MPoly {
        let ctx = y_context();
        let mut acc = MPoly::zero(&ctx);
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &MPoly::var(&ctx, i).scale(&Rational::from_integer(c.clone()));
            }
        }
        acc
    }
}

impl fmt::Display for LinearForm40 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl Serialize for LinearForm40 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<i64> = self.0.iter().map(|c| c.to_i64().expect("small coefficient")).collect();
        v.serialize(s)
    }
}

/// Each non-pivot coordinate expressed through the pivots.
#[derive(Clone, Debug)]
pub struct PivotBasis {
    /// `expressions[j]` for a non-pivot `j` (1-based): coefficients on
    /// [`PIVOTS`].
    expressions: BTreeMap<usize, [Rational; 10]>,
}

impl PivotBasis {
    pub fn pivots(&self) -> &'static [usize; 10] {
        &PIVOTS
    }

    /// Coefficients of `y_j` on the pivots; a pivot maps to a unit vector.
    pub fn coefficients(&self, j: usize) -> [Rational; 10] {
        match PIVOTS.iter().position(|&p| p == j) {
            Some(k) => std::array::from_fn(|i| Rational::from_integer(BigInt::from((i == k) as i32))),
            None => self.expressions[&j].clone(),
        }
    }

    /// `y_j` as a polynomial in the pivot y's.
    pub fn expression(&self, j: usize) -> MPoly {
        let ctx = y_context();
        let c = self.coefficients(j);
        PIVOTS.iter().zip(&c).fold(MPoly::zero(&ctx), |acc, (&p, c)| {
            &acc + &MPoly::var(&ctx, p - 1).scale(c)
        })
    }

    /// `y_j` in the g-context.
    pub fn y_in_g(&self, j: usize) -> MPoly {
        let ctx = g_context();
        let c = self.coefficients(j);
        (0..10).fold(MPoly::zero(&ctx), |acc, k| &acc + &MPoly::var(&ctx, k).scale(&c[k]))
    }

    /// Images of `y1..y40` in the g-context, for [`MPoly::substitute`].
    pub fn y_images(&self) -> Vec<MPoly> {
        (1..=40).map(|j| self.y_in_g(j)).collect()
    }

    /// Images of `g1..g9, g0` in the y-context.
    pub fn g_images() -> Vec<MPoly> {
        PIVOTS.iter().map(|&p| MPoly::var(&y_context(), p - 1)).collect()
    }

    /// All forty coordinates from the ten pivot values.
    pub fn extend<S: Scalar>(&self, g: &[S; 10]) -> Vec<S> {
        (1..=40)
            .map(|j| {
                let c = self.coefficients(j);
                c.iter()
                    .zip(g)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(S::null(), |acc, (c, v)| acc.plus(&S::from_rational(c).times(v)))
            })
            .collect()
    }

    /// Non-pivot indices whose expression differs from the reference list.
    pub fn reference_mismatches(&self) -> Vec<usize> {
        PIVOT_EXPRESSIONS
            .iter()
            .filter(|(j, text)| self.expression(*j) != poly(&y_context(), text))
            .map(|(j, _)| *j)
            .collect()
    }
}

/// The linear part of the defining equations.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub forms: Vec<LinearForm40>,
    pub rank: usize,
    pub pivots: PivotBasis,
}

fn build_linear() -> Result<LinearSystem> {
    let seed = LinearForm40::seed().to_rationals();
    let mut forms = orbit(&seed, &group_generators())
        .iter()
        .map(|v| LinearForm40::new(v))
        .collect::<Result<Vec<_>>>()?;
    forms.sort();
    // Columns: non-pivots ascending, then pivots.
    let order: Vec<usize> = (1..=40)
        .filter(|j| !PIVOTS.contains(j))
        .chain(PIVOTS.iter().copied())
        .collect();
    let rows = forms
        .iter()
        .map(|f| {
            order
                .iter()
                .map(|&j| Rational::from_integer(f.0[j - 1].clone()))
                .collect()
        })
        .collect();
    let (r, pcols) = QMatrix::from_rows(rows).rref();
    if pcols.len() != LINEAR_RANK {
        return Err(Error::RankMismatch {
            expected: LINEAR_RANK,
            found: pcols.len(),
        });
    }
    if pcols.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(Error::NonGeneric(
            "pivot coordinates are not independent modulo the relations".into(),
        ));
    }
    let expressions = (0..LINEAR_RANK)
        .map(|i| (order[i], std::array::from_fn(|k| -r[(i, LINEAR_RANK + k)].clone())))
        .collect();
    Ok(LinearSystem {
        forms,
        rank: pcols.len(),
        pivots: PivotBasis { expressions },
    })
}

/// The orbit of `y3 − y4 + y5 − y6` (sorted), its rank and the solved
/// pivot expressions. Computed once.
pub fn linear_relation_basis() -> Result<&'static LinearSystem> {
    static CELL: OnceLock<Result<LinearSystem>> = OnceLock::new();
    CELL.get_or_init(build_linear).as_ref().map_err(Clone::clone)
}
