//! The coordinates as products of maximal minors of a 3×6 matrix.

use num_traits::{One, Zero};

use super::table::ProjPoint;
use crate::arith::rational::parse_rational_list;
use crate::arith::{QMatrix, Rational};
use crate::error::{Error, Result};
use crate::roots::{label_catalog, Label};

/// A 3×6 matrix whose columns represent six points of the projective plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix36(pub [[Rational; 6]; 3]);

impl Matrix36 {
    /// The normalized matrix with columns `e1, e2, e3, (1,1,1),
    /// (1,x1,x3), (1,x2,x4)`.
    pub fn normalized(x: &[Rational; 4]) -> Matrix36 {
        let o = Rational::one;
        let z = Rational::zero;
        Matrix36([
            [o(), z(), z(), o(), o(), o()],
            [z(), o(), z(), o(), x[0].clone(), x[1].clone()],
            [z(), z(), o(), o(), x[2].clone(), x[3].clone()],
        ])
    }

    /// Parses 18 comma-separated rationals in row-major order.
    pub fn parse(s: &str) -> Result<Matrix36> {
        let v = parse_rational_list(s, 18)?;
        Ok(Matrix36(std::array::from_fn(|r| {
            std::array::from_fn(|c| v[6 * r + c].clone())
        })))
    }

    pub fn column(&self, j: usize) -> [Rational; 3] {
        std::array::from_fn(|r| self.0[r][j].clone())
    }

    /// `D_{ijk}`: determinant of columns `i, j, k` (1-based) in that order.
    pub fn minor(&self, i: u8, j: u8, k: u8) -> Rational {
        let cols = [i, j, k].map(|c| self.column(c as usize - 1));
        let m = QMatrix::from_rows((0..3).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect());
        m.determinant()
    }

    /// Determinant of the 6×6 matrix whose `j`-th column is
    /// `(x1 x2, x2 x3, x3 x1, x1², x2², x3²)` of the `j`-th column; it
    /// vanishes exactly when the six points lie on a conic.
    pub fn conic_determinant(&self) -> Rational {
        let rows: Vec<Vec<Rational>> = (0..6)
            .map(|k| {
                (0..6)
                    .map(|j| {
                        let [a, b, c] = self.column(j);
                        match k {
                            0 => &a * &b,
                            1 => &b * &c,
                            2 => &c * &a,
                            3 => &a * &a,
                            4 => &b * &b,
                            _ => &c * &c,
                        }
                    })
                    .collect()
            })
            .collect();
        QMatrix::from_rows(rows).determinant()
    }

    /// `g · self · h` for a 3×3 matrix `g` and a diagonal `h`.
    pub fn transform(&self, g: &[[Rational; 3]; 3], h: &[Rational; 6]) -> Matrix36 {
        Matrix36(std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let s: Rational = (0..3).map(|k| &g[r][k] * &self.0[k][c]).sum();
                s * &h[c]
            })
        }))
    }
}

/// Value of the coordinate with the given label: `D_abc D_def Q` for a
/// split, `D_acd D_bcd D_cef D_def D_eab D_fab` for a cycle `(ab,cd,ef)`.
/// Each `D` here is the minor on the increasing column triple; with this
/// reading all forty values agree with the coordinate table up to one
/// global sign.
pub fn label_value(a: &Matrix36, label: &Label, q: &Rational) -> Rational {
    let d = |i: u8, j: u8, k: u8| {
        let mut t = [i, j, k];
        t.sort_unstable();
        a.minor(t[0], t[1], t[2])
    };
    match *label {
        Label::Split([a1, b1, c1], [e, f, g]) => d(a1, b1, c1) * d(e, f, g) * q,
        Label::PairCycle([[p, b], [c, e], [f, g]]) => {
            d(p, c, e) * d(b, c, e) * d(c, f, g) * d(e, f, g) * d(f, p, b) * d(g, p, b)
        }
    }
}

/// The forty minor products, in coordinate order.
pub fn phi_from_matrix_raw(a: &Matrix36) -> Vec<Rational> {
    let q = a.conic_determinant();
    label_catalog().labels().iter().map(|l| label_value(a, l, &q)).collect()
}

/// `φ` of a matrix as a point of `P^39`. Fails if the matrix has a vanishing
/// maximal minor or its points lie on a conic.
pub fn phi_from_matrix(a: &Matrix36) -> Result<ProjPoint> {
    for i in 1..=6u8 {
        for j in i + 1..=6 {
            for k in j + 1..=6 {
                if a.minor(i, j, k).is_zero() {
                    return Err(Error::DegenerateMatrix(format!("minor D{i}{j}{k} vanishes")));
                }
            }
        }
    }
    if a.conic_determinant().is_zero() {
        return Err(Error::DegenerateMatrix("the six points lie on a conic".into()));
    }
    ProjPoint::new(&phi_from_matrix_raw(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::embedding::embedding_table;

    #[test]
    fn minor_products_match_the_table_with_one_sign() {
        let x = [rat(2, 7), int(3), rat(-4, 3), int(5)];
        let raw = phi_from_matrix_raw(&Matrix36::normalized(&x));
        let table = embedding_table().eval_all(&x).unwrap();
        for (m, t) in raw.iter().zip(&table) {
            assert_eq!(m, &-t);
        }
    }

    #[test]
    fn minors_follow_the_written_column_order() {
        let a = Matrix36::normalized(&[int(2), int(3), int(4), int(5)]);
        assert_eq!(a.minor(5, 1, 2), a.minor(1, 2, 5));
        assert_eq!(a.minor(2, 1, 5), -a.minor(1, 2, 5));
    }
}
