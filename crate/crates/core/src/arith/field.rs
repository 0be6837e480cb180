//! Minimal field interface for evaluating relations over extensions of Q.

use std::fmt::Debug;

use num_traits::Zero;

use super::poly::MPoly;
use super::rational::Rational;

/// Exact field elements that relations can be evaluated at.
pub trait Scalar: Clone + PartialEq + Debug {
    fn from_rational(r: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_null(&self) -> bool;
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn null() -> Self {
        Self::from_rational(&Rational::zero())
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn is_null(&self) -> bool {
        self.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Value of a polynomial at a point with coordinates in any exact field.
pub fn eval_poly<S: Scalar>(p: &MPoly, point: &[S]) -> S {
    let mut powers: Vec<Vec<S>> = point
        .iter()
        .map(|v| vec![S::from_rational(&Rational::from_integer(1.into())), v.clone()])
        .collect();
    let mut acc = S::null();
    for (m, c) in p.terms() {
        let mut term = S::from_rational(c);
        for (i, &e) in m.exponents().iter().enumerate() {
            let e = e as usize;
            if e == 0 {
                continue;
            }
            while powers[i].len() <= e {
                let next = powers[i].last().expect("nonempty").times(&point[i]);
                powers[i].push(next);
            }
            term = term.times(&powers[i][e]);
        }
        acc = acc.plus(&term);
    }
    acc
}
