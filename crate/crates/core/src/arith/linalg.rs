//! Exact linear algebra over the rationals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{primitive_integer_vector, Rational};

/// Dense rectangular matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        QMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : M v = 0}`, each vector scaled to coprime integers with
    /// a positive first nonzero entry.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                primitive_integer_vector(&v)
                    .expect("nonzero")
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect()
            })
            .collect()
    }

    /// Rank and nullspace together.
    pub fn rank_nullspace(&self) -> (usize, Vec<Vec<Rational>>) {
        (self.rank(), self.nullspace())
    }

    /// Determinant by elimination. Panics unless square.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= &m[(c, c)];
            let inv = m[(c, c)].recip();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&f * &m[(c, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

/// Sparse vector: coordinate index to nonzero value.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Incrementally built echelon basis of a subspace of a (possibly huge)
/// coordinate space, storing sparse rows.
///
/// Each stored row has a pivot (its smallest index, normalized to one) that
/// no other row shares.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot it meets.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v: SparseVec = v
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(k) = next else {
                return v;
            };
            let f = v[&k].clone();
            for (j, c) in &self.rows[&k] {
                let e = v.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * c;
                if e.is_zero() {
                    v.remove(j);
                }
            }
            cursor = k + 1;
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let row = r.iter().map(|(k, c)| (*k, c * &inv)).collect();
        self.rows.insert(p, row);
        true
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        self.insert(&dense_to_sparse(v))
    }

    pub fn contains_dense(&self, v: &[Rational]) -> bool {
        self.contains(&dense_to_sparse(v))
    }
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let (r, n) = QMatrix::identity(3).rank_nullspace();
        assert_eq!(r, 3);
        assert!(n.is_empty());
    }

    #[test]
    fn single_relation_row() {
        let m = QMatrix::from_i64_rows(&[&[1, -1, 1, -1]]);
        let (r, n) = m.rank_nullspace();
        assert_eq!(r, 1);
        assert_eq!(n.len(), 3);
        for v in &n {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_small() {
        let m = QMatrix::from_i64_rows(&[&[0, 2, 1], &[1, 1, 1], &[3, 0, 2]]);
        assert_eq!(m.determinant(), int(-1));
    }

    #[test]
    fn echelon_membership() {
        let mut b = EchelonBasis::new();
        assert!(b.insert_dense(&[int(1), int(2), int(0)]));
        assert!(b.insert_dense(&[int(0), int(1), int(1)]));
        assert!(!b.insert_dense(&[int(1), int(3), int(1)]));
        assert!(b.contains_dense(&[int(2), int(5), int(1)]));
        assert!(!b.contains_dense(&[int(0), int(0), int(1)]));
        assert_eq!(b.rank(), 2);
    }
}
