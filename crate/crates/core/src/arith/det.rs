//! Determinants of small matrices with polynomial entries.

use std::collections::HashMap;

use super::context::Ctx;
use super::poly::MPoly;

/// Determinant of a square matrix of polynomials (at most 16 columns) by
/// Laplace expansion along rows, memoized on the set of remaining columns.
pub fn poly_det(ctx: &Ctx, m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    assert!(n <= 16, "matrix too large for Laplace expansion");
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    let mut memo: HashMap<u32, MPoly> = HashMap::new();
    minor(ctx, m, 0, (1u32 << n) - 1, &mut memo)
}

fn minor(ctx: &Ctx, m: &[Vec<MPoly>], row: usize, cols: u32, memo: &mut HashMap<u32, MPoly>) -> MPoly {
    if row == m.len() {
        return MPoly::one(ctx);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = MPoly::zero(ctx);
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(ctx, m, row + 1, cols & !(1 << c), memo);
            let term = entry * &sub;
            acc = if sign_positive { &acc + &term } else { &acc - &term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::super::context::x_context;
    use super::*;

    #[test]
    fn two_by_two_and_three_by_three() {
        let ctx = x_context();
        let p = |s: &str| MPoly::parse(&ctx, s).unwrap();
        let m = vec![vec![p("x1"), p("x2")], vec![p("x3"), p("x4")]];
        assert_eq!(poly_det(&ctx, &m), p("x1*x4 - x2*x3"));
        let m3 = vec![
            vec![p("1"), p("0"), p("1")],
            vec![p("0"), p("1"), p("x1")],
            vec![p("0"), p("0"), p("x3")],
        ];
        assert_eq!(poly_det(&ctx, &m3), p("x3"));
    }
}
