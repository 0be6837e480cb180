//! Quotients of polynomials in a shared context.

use std::fmt;

use num_traits::{One, Zero};

use super::context::{Ctx, VarContext};
use super::gcd::gcd;
use super::poly::{MPoly, Monomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num / den` with `den ≠ 0`.
///
/// Values built with [`RatFunc::new`] are canonical: the gcd of numerator
/// and denominator has been divided out, both have integer coefficients
/// whose contents are coprime, and the denominator has a positive leading
/// coefficient. The arithmetic operators only cancel scalars and monomials,
/// so call [`canonical`](Self::canonical) when a reduced form matters.
/// Equality should be tested with [`cross_eq`](Self::cross_eq).
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

fn monomial_content(p: &MPoly) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().expect("nonzero").0.clone();
    it.fold(first, |acc, t| acc.gcd(&t.0))
}

impl RatFunc {
    /// Canonical quotient.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        Ok(Self::new_raw(num, den)?.canonical())
    }

    /// Quotient with only scalar and monomial cancellation.
    pub fn new_raw(num: MPoly, den: MPoly) -> Result<Self> {
        VarContext::check(num.ctx(), den.ctx())?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::light(num, den))
    }

    fn light(num: MPoly, den: MPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                den: MPoly::one(num.ctx()),
                num,
            };
        }
        let m = monomial_content(&num).gcd(&monomial_content(&den));
        let (num, den) = if m.is_one() {
            (num, den)
        } else {
            let mp = MPoly::monomial(num.ctx(), m, Rational::one());
            (
                num.div_exact(&mp).expect("monomial"),
                den.div_exact(&mp).expect("monomial"),
            )
        };
        // Both sides become integer-primitive; the ratio of their contents
        // p/q is split as p into the numerator and q into the denominator.
        let (a, num) = num.integer_primitive();
        let (b, den) = den.integer_primitive();
        let ratio = a / b;
        let q = Rational::from_integer(ratio.denom().clone());
        let p = Rational::from_integer(ratio.numer().clone());
        RatFunc {
            num: num.scale(&p),
            den: den.scale(&q),
        }
    }

    pub fn from_poly(p: MPoly) -> Self {
        let den = MPoly::one(p.ctx());
        RatFunc { num: p, den }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Self::from_poly(MPoly::zero(ctx))
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_poly(MPoly::one(ctx))
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        Self::from_poly(MPoly::constant(ctx, c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn ctx(&self) -> &Ctx {
        self.num.ctx()
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Divides out the polynomial gcd and normalizes contents and sign.
    /// Idempotent.
    pub fn canonical(&self) -> RatFunc {
        if self.num.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        let g = gcd(&self.num, &self.den);
        let (num, den) = if g.is_constant() {
            (self.num.clone(), self.den.clone())
        } else {
            (
                self.num.div_exact(&g).expect("gcd divides numerator"),
                self.den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::light(num, den)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// `a/b = c/d` iff `a·d − c·b = 0`.
    pub fn cross_eq(&self, other: &RatFunc) -> bool {
        VarContext::same(self.ctx(), other.ctx()) && (&self.num * &other.den) == (&other.num * &self.den)
    }

    pub fn checked_add(&self, other: &RatFunc) -> Result<RatFunc> {
        VarContext::check(self.ctx(), other.ctx())?;
        if self.den == other.den {
            return Ok(Self::light(&self.num + &other.num, self.den.clone()));
        }
        Ok(Self::light(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        ))
    }

    pub fn checked_sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        VarContext::check(self.ctx(), other.ctx())?;
        Ok(Self::light(&self.num * &other.num, &self.den * &other.den))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        VarContext::check(self.ctx(), other.ctx())?;
        if other.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::light(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        Self::new_raw(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.ctx());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i32) -> Result<RatFunc> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(Self::light(base.num.pow(k), base.den.pow(k)))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::context::x_context;
    use super::super::rational::{int, rat};
    use super::*;

    fn px(s: &str) -> MPoly {
        MPoly::parse(&x_context(), s).unwrap()
    }

    #[test]
    fn content_and_monomial_cancellation() {
        let r = RatFunc::new(px("2*x1"), px("4*x1^2")).unwrap();
        assert_eq!(r.num(), &px("1"));
        assert_eq!(r.den(), &px("2*x1"));
    }

    #[test]
    fn canonical_is_idempotent_and_removes_gcd() {
        let g = px("x1*x4 - x2*x3");
        let r = RatFunc::new_raw(&g * &px("x1 - 1"), &g * &px("-3*x2 + 6")).unwrap();
        let c = r.canonical();
        assert_eq!(c.num(), &px("-x1 + 1"));
        assert_eq!(c.den(), &px("3*x2 - 6"));
        let cc = c.canonical();
        assert_eq!(cc.num(), c.num());
        assert_eq!(cc.den(), c.den());
        let p = [int(2), int(3), int(4), int(7)];
        assert_eq!(r.eval(&p).unwrap(), c.eval(&p).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(px("x1"), MPoly::zero(&x_context())).unwrap_err(),
            Error::ZeroDenominator
        );
        let r = RatFunc::new(px("1"), px("x1 - 2")).unwrap();
        assert_eq!(r.eval(&[int(2), int(0), int(0), int(0)]), Err(Error::ZeroDenominator));
    }

    #[test]
    fn field_operations() {
        let a = RatFunc::new(px("x1"), px("x2")).unwrap();
        let b = RatFunc::new(px("1"), px("x1 + x2")).unwrap();
        let s = a.checked_add(&b).unwrap();
        let back = s.checked_sub(&b).unwrap();
        assert!(back.cross_eq(&a));
        let q = a.checked_div(&b).unwrap().checked_mul(&b).unwrap();
        assert!(q.cross_eq(&a));
        let p = [rat(1, 2), int(3), int(0), int(0)];
        assert_eq!(a.pow(-2).unwrap().eval(&p).unwrap(), int(36));
    }
}
