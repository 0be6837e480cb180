//! The embedding on arrangements with six points on a conic and at a
//! boundary limit: the z-parametrization, the prolongation table, the
//! fifteen minor products and the limit point.

mod reference;

use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use reference::{DUPLICATES, FACTOR, PROLONG, Z_TO_X};

use crate::arith::{poly, t_context, z_context, MPoly, QMatrix, RatFunc, Rational, RationalMap};
use crate::embedding::{embedding_table, ProjPoint};
use crate::error::{Error, Result};

/// A point of the configuration space of six points on a line, in the
/// normalization `(0, ∞, 1, z1, z2, z3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointZ([Rational; 3]);

impl PointZ {
    /// Rejects `z_i ∈ {0, 1}` and coincident `z_i`.
    pub fn new(z: [Rational; 3]) -> Result<Self> {
        for (i, v) in z.iter().enumerate() {
            if v.is_zero() || v.is_one() {
                return Err(Error::DegenerateZ(format!("z{} = {v}", i + 1)));
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if z[i] == z[j] {
                    return Err(Error::DegenerateZ(format!("z{} = z{}", i + 1, j + 1)));
                }
            }
        }
        Ok(PointZ(z))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let v = crate::arith::rational::parse_rational_list(s, 3)?;
        Self::new([v[0].clone(), v[1].clone(), v[2].clone()])
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }
}

/// The conic parametrization as a rational map from the z-context.
pub fn z_to_x_map() -> &'static RationalMap {
    static CELL: OnceLock<RationalMap> = OnceLock::new();
    CELL.get_or_init(|| {
        let z = z_context();
        let c = Z_TO_X
            .iter()
            .map(|(n, d)| RatFunc::new(poly(&z, n), poly(&z, d)).expect("nonzero"))
            .collect();
        RationalMap::new(&z, c).expect("z-context")
    })
}

/// `x(z)` for a nondegenerate z-point.
pub fn z_to_x(z: &PointZ) -> Result<[Rational; 4]> {
    let v = z_to_x_map().eval(z.coords())?;
    Ok([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
}

/// The prolongation table and its common factor.
#[derive(Clone, Debug)]
pub struct ProlongTable {
    /// `rows[j - 11]` for `j = 11..=40`.
    pub rows: Vec<MPoly>,
    pub factor: RatFunc,
}

impl ProlongTable {
    pub fn row(&self, j: usize) -> &MPoly {
        &self.rows[j - 11]
    }

    /// The coincidences `cy_i = cy_j` of the table.
    pub fn duplicates_hold(&self) -> bool {
        DUPLICATES.iter().all(|&(i, j)| self.row(i) == self.row(j))
    }
}

pub fn prolong_table() -> &'static ProlongTable {
    static CELL: OnceLock<ProlongTable> = OnceLock::new();
    CELL.get_or_init(|| {
        let z = z_context();
        ProlongTable {
            rows: PROLONG.iter().map(|(_, s)| poly(&z, s)).collect(),
            factor: RatFunc::new(poly(&z, FACTOR.0), poly(&z, FACTOR.1)).expect("nonzero"),
        }
    })
}

/// `φ` on the conic locus: zero in the first ten coordinates and the table
/// values after.
pub fn prolonged_phi(z: &PointZ) -> Result<ProjPoint> {
    let mut v = vec![Rational::zero(); 40];
    for (j, row) in prolong_table().rows.iter().enumerate() {
        v[10 + j] = row.eval(z.coords())?;
    }
    ProjPoint::new(&v)
}

/// Each coordinate polynomial composed with `x(z)`, from its factors.
fn composed_coordinates() -> Result<Vec<RatFunc>> {
    let t = embedding_table();
    let map = z_to_x_map();
    let factors = t
        .factors()
        .iter()
        .map(|f| map.compose_poly(f))
        .collect::<Result<Vec<_>>>()?;
    (1..=40)
        .map(|i| {
            let (sign, ids) = t.factorization(i);
            let mut acc = RatFunc::constant(&z_context(), Rational::from_integer(sign.into()));
            for &f in ids {
                acc = acc.checked_mul(&factors[f])?;
            }
            Ok(acc)
        })
        .collect()
}

/// Outcome of the symbolic verification of the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProlongReport {
    pub quadric_vanishes: bool,
    pub zero_rows: usize,
    pub table_rows: usize,
    pub duplicates_hold: bool,
}

/// Checks `Q∘x(z) = 0`, `y_j∘x(z) = 0` for `j ≤ 10`, and
/// `y_j∘x(z) = c · cy_j` for `j ≥ 11`, all as rational functions of z.
pub fn verify_prolong_table() -> Result<ProlongReport> {
    let failure = |j: usize, details: &str| Error::IdentityFailure {
        generator: "prolongation".into(),
        alpha: j,
        details: details.into(),
    };
    let quadric_vanishes = z_to_x_map().compose_poly(embedding_table().q())?.is_zero();
    let composed = composed_coordinates()?;
    let table = prolong_table();
    for (i, c) in composed.iter().enumerate().take(10) {
        if !c.is_zero() {
            return Err(failure(i + 1, "expected zero on the conic locus"));
        }
    }
    for j in 11..=40 {
        let expected = table.factor.checked_mul(&RatFunc::from_poly(table.row(j).clone()))?;
        if !composed[j - 1].cross_eq(&expected) {
            return Err(failure(j, "differs from the table row times the common factor"));
        }
    }
    Ok(ProlongReport {
        quadric_vanishes,
        zero_rows: 10,
        table_rows: 30,
        duplicates_hold: table.duplicates_hold(),
    })
}

/// The fifteen products of three disjoint 2×2 minors of the matrix with
/// columns `(1,0), (0,1), (1,1), (1,z1), (1,z2), (1,z3)`.
pub fn minor_products() -> Vec<MPoly> {
    let z = z_context();
    let col = |i: usize| -> (MPoly, MPoly) {
        match i {
            0 => (MPoly::one(&z), MPoly::zero(&z)),
            1 => (MPoly::zero(&z), MPoly::one(&z)),
            2 => (MPoly::one(&z), MPoly::one(&z)),
            k => (MPoly::one(&z), MPoly::var(&z, k - 3)),
        }
    };
    let minor = |i: usize, j: usize| {
        let (a, b) = col(i);
        let (c, d) = col(j);
        &(&a * &d) - &(&b * &c)
    };
    let mut out = Vec::with_capacity(15);
    let mut rest = vec![1, 2, 3, 4, 5];
    for k in 0..5 {
        let j = rest.remove(k);
        // Pair 0 with j, then match the remaining four.
        let r = rest.clone();
        for (a, b, c, d) in [
            (r[0], r[1], r[2], r[3]),
            (r[0], r[2], r[1], r[3]),
            (r[0], r[3], r[1], r[2]),
        ] {
            out.push(&(&minor(0, j) * &minor(a, b)) * &minor(c, d));
        }
        rest.insert(k, j);
    }
    out
}

/// Whether the thirty table rows are, up to sign, the fifteen minor
/// products each taken twice.
pub fn rows_match_minor_products() -> bool {
    let mut counts: HashMap<MPoly, usize> = HashMap::new();
    for r in &prolong_table().rows {
        *counts.entry(r.integer_primitive().1).or_insert(0) += 1;
    }
    let products: Vec<MPoly> = minor_products().iter().map(|p| p.integer_primitive().1).collect();
    counts.len() == 15 && products.iter().all(|p| counts.get(p) == Some(&2))
}

/// Dimension of the linear span of the thirty table rows.
pub fn span_check() -> usize {
    let rows = &prolong_table().rows;
    let mut index: HashMap<crate::arith::Monomial, usize> = HashMap::new();
    for r in rows {
        for (m, _) in r.terms() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let matrix = rows
        .iter()
        .map(|r| r.coefficient_vector(&index).expect("indexed"))
        .collect();
    QMatrix::from_rows(matrix).rank()
}

/// A direction of approach `x = (tξ1, tξ2, tξ3, 1 + tξ4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitDirection(pub [Rational; 4]);

impl LimitDirection {
    pub fn parse(s: &str) -> Result<Self> {
        let v = crate::arith::rational::parse_rational_list(s, 4)?;
        Ok(LimitDirection([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
    }
}

/// Lowest-order coefficient and its order of a nonzero univariate
/// polynomial.
fn lowest(p: &MPoly) -> Option<(u32, Rational)> {
    p.terms()
        .iter()
        .map(|(m, c)| (m.exponents()[0] as u32, c.clone()))
        .min_by_key(|(e, _)| *e)
}

/// Order in `t` of each factor along a generic direction: the lowest total
/// degree of `f(x1, x2, x3, 1 + x4)`.
fn generic_orders() -> &'static [Option<u32>] {
    static CELL: OnceLock<Vec<Option<u32>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let x = crate::arith::x_context();
        let mut shift: Vec<MPoly> = (0..4).map(|i| MPoly::var(&x, i)).collect();
        shift[3] = &shift[3] + &MPoly::one(&x);
        embedding_table()
            .factors()
            .iter()
            .map(|f| {
                let g = f.substitute(&shift).expect("x-context arity");
                g.terms().iter().map(|(m, _)| m.degree()).min()
            })
            .collect()
    })
}

/// The limit of `φ` along a direction as `t → 0`: the vector of
/// lowest-order coefficients at the overall minimal order. A direction is
/// admissible when the coordinates of generic minimal order keep that order
/// along it.
pub fn limit_point(xi: &LimitDirection) -> Result<ProjPoint> {
    let t = t_context();
    let tv = MPoly::var(&t, 0);
    let images: Vec<MPoly> =
        xi.0.iter()
            .enumerate()
            .map(|(i, c)| {
                let p = tv.scale(c);
                if i == 3 {
                    &p + &MPoly::one(&t)
                } else {
                    p
                }
            })
            .collect();
    let table = embedding_table();
    let factors: Vec<Option<(u32, Rational)>> = table
        .factors()
        .iter()
        .map(|f| f.substitute(&images).map(|p| lowest(&p)))
        .collect::<Result<_>>()?;
    // Coordinates of generic minimal order must keep it along the direction.
    let generic = generic_orders();
    let coordinate_order = |i: usize| -> Option<u32> { table.factorization(i).1.iter().map(|&f| generic[f]).sum() };
    let leading = (1..=40)
        .filter_map(coordinate_order)
        .min()
        .ok_or(Error::InadmissibleDirection)?;
    for i in (1..=40).filter(|&i| coordinate_order(i) == Some(leading)) {
        if table
            .factorization(i)
            .1
            .iter()
            .any(|&f| factors[f].as_ref().map(|(e, _)| *e) != generic[f])
        {
            return Err(Error::InadmissibleDirection);
        }
    }
    let leads: Vec<Option<(u32, Rational)>> = (1..=40)
        .map(|i| {
            let (sign, ids) = table.factorization(i);
            let mut order = 0;
            let mut coeff = Rational::from_integer(sign.into());
            for &f in ids {
                let (e, c) = factors[f].clone()?;
                order += e;
                coeff *= c;
            }
            Some((order, coeff))
        })
        .collect();
    let min = leads
        .iter()
        .flatten()
        .map(|(e, _)| *e)
        .min()
        .ok_or(Error::InadmissibleDirection)?;
    let v: Vec<Rational> = leads
        .iter()
        .map(|l| match l {
            Some((e, c)) if *e == min => c.clone(),
            _ => Rational::zero(),
        })
        .collect();
    ProjPoint::new(&v).map_err(|_| Error::InadmissibleDirection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn parametrization_example() {
        let z = PointZ::new([int(2), int(3), int(5)]).unwrap();
        assert_eq!(z_to_x(&z).unwrap(), [rat(1, 2), rat(1, 4), rat(2, 3), rat(2, 5)]);
        assert!(matches!(
            PointZ::new([int(2), int(1), int(5)]),
            Err(Error::DegenerateZ(_))
        ));
    }

    #[test]
    fn table_value_before_scaling() {
        let z = [int(2), int(3), int(5)];
        assert_eq!(prolong_table().row(11).eval(&z).unwrap(), int(4));
        assert!(prolong_table().duplicates_hold());
    }
}
