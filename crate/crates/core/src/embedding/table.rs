//! The forty coordinate polynomials, the discriminant and projective points.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::reference::{D1, D2, Q, Y_FACTORS};
use crate::arith::rational::{parse_rational_list, primitive_integer_vector};
use crate::arith::{poly, x_context, MPoly, Rational};
use crate::error::{Error, Result};
use crate::roots::COORDINATE_LABELS;

/// Named polynomial text used by the factored table.
fn factor_text(name: &str) -> &str {
    match name {
        "D1" => D1,
        "D2" => D2,
        "Q" => Q,
        other => other,
    }
}

/// The forty coordinate polynomials `y1..y40` in `x1..x4`, with their
/// factorizations.
#[derive(Debug)]
pub struct EmbeddingTable {
    polys: Vec<MPoly>,
    factored: Vec<(i8, Vec<usize>)>,
    factors: Vec<MPoly>,
    d1: MPoly,
    d2: MPoly,
    q: MPoly,
}

impl EmbeddingTable {
    fn build() -> EmbeddingTable {
        let ctx = x_context();
        let mut factors: Vec<MPoly> = Vec::new();
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut factored = Vec::with_capacity(40);
        for (sign, names) in Y_FACTORS.iter() {
            let ids = names
                .iter()
                .map(|n| {
                    *index.entry(n).or_insert_with(|| {
                        factors.push(poly(&ctx, factor_text(n)));
                        factors.len() - 1
                    })
                })
                .collect();
            factored.push((*sign, ids));
        }
        let polys = factored
            .iter()
            .map(|(s, ids): &(i8, Vec<usize>)| {
                let p = MPoly::product(&ctx, ids.iter().map(|&i| &factors[i]));
                if *s < 0 {
                    -p
                } else {
                    p
                }
            })
            .collect();
        EmbeddingTable {
            polys,
            factored,
            factors,
            d1: poly(&ctx, D1),
            d2: poly(&ctx, D2),
            q: poly(&ctx, Q),
        }
    }

    /// `y_i` for `i` in `1..=40`.
    pub fn y(&self, i: usize) -> &MPoly {
        &self.polys[i - 1]
    }

    pub fn polys(&self) -> &[MPoly] {
        &self.polys
    }

    /// The distinct irreducible factors appearing in the table.
    pub fn factors(&self) -> &[MPoly] {
        &self.factors
    }

    /// Sign and factor indices of `y_i` (`i` in `1..=40`).
    pub fn factorization(&self, i: usize) -> (i8, &[usize]) {
        let (s, ids) = &self.factored[i - 1];
        (*s, ids)
    }

    pub fn label(&self, i: usize) -> &'static str {
        COORDINATE_LABELS[i - 1]
    }

    pub fn d1(&self) -> &MPoly {
        &self.d1
    }

    pub fn d2(&self) -> &MPoly {
        &self.d2
    }

    pub fn q(&self) -> &MPoly {
        &self.q
    }

    /// All forty values at a point, without any genericity check.
    pub fn eval_all(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        let fv = self.factors.iter().map(|f| f.eval(x)).collect::<Result<Vec<_>>>()?;
        Ok(self
            .factored
            .iter()
            .map(|(s, ids)| {
                let v: Rational = ids.iter().map(|&i| fv[i].clone()).product();
                if *s < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect())
    }
}

/// The shared embedding table.
pub fn embedding_table() -> &'static EmbeddingTable {
    static CELL: OnceLock<EmbeddingTable> = OnceLock::new();
    CELL.get_or_init(EmbeddingTable::build)
}

/// The fifteen factors of the discriminant `D(x)`.
pub fn discriminant_factors() -> Vec<MPoly> {
    let ctx = x_context();
    [
        "x1", "x2", "x3", "x4", "x1 - 1", "x2 - 1", "x3 - 1", "x4 - 1", "x1 - x2", "x1 - x3", "x2 - x4", "x3 - x4", D1,
        D2, Q,
    ]
    .iter()
    .map(|s| poly(&ctx, s))
    .collect()
}

/// `D(x)`; zero exactly on degenerate arrangements.
pub fn discriminant(x: &[Rational]) -> Result<Rational> {
    let mut acc = Rational::from_integer(1.into());
    for f in discriminant_factors() {
        acc *= f.eval(x)?;
    }
    Ok(acc)
}

/// A point `(x1, x2, x3, x4)` of the moduli space: `D(x) ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointM([Rational; 4]);

impl PointM {
    pub fn new(x: [Rational; 4]) -> Result<PointM> {
        if discriminant(&x)?.is_zero() {
            return Err(Error::DegeneratePoint);
        }
        Ok(PointM(x))
    }

    /// Parses `"x1,x2,x3,x4"`.
    pub fn parse(s: &str) -> Result<PointM> {
        let v = parse_rational_list(s, 4)?;
        PointM::new(v.try_into().expect("length checked"))
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.0
    }
}

/// Projective point with exact coordinates, stored canonically: coprime
/// integers with the first nonzero coordinate positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint(Vec<BigInt>);

impl ProjPoint {
    pub fn new(coords: &[Rational]) -> Result<ProjPoint> {
        primitive_integer_vector(coords).map(ProjPoint).ok_or(Error::Undefined)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    /// Projective equality of raw coordinate vectors.
    pub fn same_point(a: &[Rational], b: &[Rational]) -> bool {
        match (ProjPoint::new(a), ProjPoint::new(b)) {
            (Ok(p), Ok(q)) => p == q,
            _ => false,
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// `φ(x)` as a canonical point of `P^39`.
pub fn eval_phi(p: &PointM) -> Result<ProjPoint> {
    let v = embedding_table().eval_all(p.coords())?;
    ProjPoint::new(&v)
}

/// The coordinates `(y1 : y3 : y4 : y5 : y7)` of a point of `P^39`.
pub fn projection_p4(point: &[Rational]) -> Result<ProjPoint> {
    if point.len() != 40 {
        return Err(Error::ArityMismatch {
            expected: 40,
            got: point.len(),
        });
    }
    let v: Vec<Rational> = [1, 3, 4, 5, 7].iter().map(|&i| point[i - 1].clone()).collect();
    ProjPoint::new(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn pt() -> Vec<Rational> {
        vec![int(2), int(3), int(4), int(5)]
    }

    #[test]
    fn values_at_a_sample_point() {
        let t = embedding_table();
        let v = t.eval_all(&pt()).unwrap();
        assert_eq!(v[0], int(24));
        assert_eq!(v[1], int(24));
        assert_eq!(&v[2..7], &[int(-12), int(-24), int(-24), int(-12), int(-96)]);
        assert_eq!(v[39], int(4));
        assert_eq!(t.q().eval(&pt()).unwrap(), int(-12));
        assert_eq!(t.d2().eval(&pt()).unwrap(), int(-2));
    }

    #[test]
    fn table_linear_identity_and_factored_form() {
        let t = embedding_table();
        assert!((t.y(2) - t.y(1) + t.y(5) - t.y(4)).is_zero());
        assert_eq!(t.y(39), &(t.d1() * t.d2()));
        assert!(t.polys().iter().all(|p| !p.is_zero()));
    }

    #[test]
    fn discriminant_vanishing() {
        assert!(!discriminant(&pt()).unwrap().is_zero());
        assert!(discriminant(&[int(0), int(3), int(4), int(5)]).unwrap().is_zero());
        assert!(discriminant(&[int(2), int(3), int(4), int(6)]).unwrap().is_zero());
        assert_eq!(PointM::parse("2,3,4,6"), Err(Error::DegeneratePoint));
    }

    #[test]
    fn projection_to_p4() {
        let v = embedding_table().eval_all(&pt()).unwrap();
        assert_eq!(projection_p4(&v).unwrap().to_string(), "(2:-1:-2:-2:-8)");
        assert_eq!(projection_p4(&vec![Rational::zero(); 40]), Err(Error::Undefined));
    }
}
