//! Arithmetic in a quadratic extension `Q(√d)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{Rational, Scalar};

/// `a + b√d`. Rational elements may carry `d = 0`; any two elements
/// combined must agree on `d` unless one of them is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: BigInt,
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: BigInt::zero(),
        }
    }

    /// `√d` itself.
    pub fn sqrt(d: &BigInt) -> Self {
        QuadExt {
            a: Rational::zero(),
            b: Rational::one(),
            d: d.clone(),
        }
    }

    pub fn new(a: Rational, b: Rational, d: &BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            QuadExt { a, b, d: d.clone() }
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    fn common_d(&self, other: &Self) -> BigInt {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "elements of different quadratic fields");
                self.d.clone()
            }
        }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }
}

impl Scalar for QuadExt {
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }

    fn plus(&self, other: &Self) -> Self {
        let d = self.common_d(other);
        Self::new(&self.a + &other.a, &self.b + &other.b, &d)
    }

    fn minus(&self, other: &Self) -> Self {
        let d = self.common_d(other);
        Self::new(&self.a - &other.a, &self.b - &other.b, &d)
    }

    fn times(&self, other: &Self) -> Self {
        let d = self.common_d(other);
        let dr = Rational::from_integer(d.clone());
        Self::new(
            &self.a * &other.a + &self.b * &other.b * dr,
            &self.a * &other.b + &self.b * &other.a,
            &d,
        )
    }

    fn is_null(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact as long as `d` is not a perfect square.
    fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.a / &n, -&self.b / &n, &self.d))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.d)
        }
    }
}

/// JSON form: `{"rational": "p/q", "sqrt_d": "p/q"}`.
impl Serialize for QuadExt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadExt", 2)?;
        st.serialize_field("rational", &self.a.to_string())?;
        st.serialize_field("sqrt_d", &self.b.to_string())?;
        st.end()
    }
}

/// Small primes for the squarefree reduction.
const TRIAL_LIMIT: u32 = 10_000;

/// Writes a nonzero rational `r` as `m² · d` with `d` an integer free of
/// square prime factors below the trial limit, and not itself a square
/// unless `d = 1`. Returns `(m, d)`.
pub fn square_split(r: &Rational) -> (Rational, BigInt) {
    assert!(!r.is_zero(), "square split of zero");
    // r = p/q = (p·q)/q².
    let mut n = r.numer() * r.denom();
    let mut m = BigInt::one();
    let q = r.denom().clone();
    let negative = n.is_negative();
    if negative {
        n = -n;
    }
    let mut p = 2u32;
    while p < TRIAL_LIMIT && BigInt::from(p) * BigInt::from(p) <= n {
        let pp = BigInt::from(p) * BigInt::from(p);
        while (&n % &pp).is_zero() {
            n /= &pp;
            m *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = n.sqrt();
    if &root * &root == n {
        m *= &root;
        n = BigInt::one();
    }
    if negative {
        n = -n;
    }
    (Rational::new(m, q), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn field_laws_and_conjugation() {
        let d = BigInt::from(5);
        let x = QuadExt::new(rat(1, 2), int(3), &d);
        let y = QuadExt::new(int(-2), rat(1, 3), &d);
        let p = x.times(&y);
        assert_eq!(p.times(&y.inverse().unwrap()), x);
        assert_eq!(x.conjugate().times(&x), QuadExt::rational(x.norm()));
        let s = QuadExt::sqrt(&d);
        assert_eq!(s.times(&s), QuadExt::rational(int(5)));
        assert!(QuadExt::rational(int(0)).inverse().is_none());
    }

    #[test]
    fn square_splitting() {
        assert_eq!(square_split(&int(72)), (int(6), BigInt::from(2)));
        assert_eq!(square_split(&rat(9, 4)), (rat(3, 2), BigInt::one()));
        assert_eq!(square_split(&rat(-3, 4)), (rat(1, 2), BigInt::from(-3)));
    }
}
