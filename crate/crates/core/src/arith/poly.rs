//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::context::{Ctx, VarContext};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per context variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the first variable, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in a [`VarContext`]. Terms are kept sorted with the leading
/// (greatest) monomial first and never store a zero coefficient.
#[derive(Clone)]
pub struct MPoly {
    ctx: Ctx,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        VarContext::same(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({})", self.ctx.name(), self)
    }
}

impl MPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        MPoly {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Ctx, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ctx.arity()), c));
        }
        p
    }

    pub fn from_int(ctx: &Ctx, c: i64) -> Self {
        Self::constant(ctx, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(ctx: &Ctx, i: usize) -> Self {
        assert!(i < ctx.arity(), "variable index out of range");
        MPoly {
            ctx: ctx.clone(),
            terms: vec![(Monomial::var(ctx.arity(), i), Rational::one())],
        }
    }

    pub fn var_named(ctx: &Ctx, name: &str) -> Result<Self> {
        Ok(Self::var(ctx, ctx.index_of(name)?))
    }

    /// All variables of the context, in order.
    pub fn vars(ctx: &Ctx) -> Vec<MPoly> {
        (0..ctx.arity()).map(|i| Self::var(ctx, i)).collect()
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), ctx.arity());
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(ctx: &Ctx, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ctx.arity(), "monomial arity");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Ctx, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.arity()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.0 .0[var] as u32).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.iter().any(|t| t.0 .0[i] > 0))
            .collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|t| &t.0 == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly> {
        VarContext::check(&self.ctx, &other.ctx)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly> {
        VarContext::check(&self.ctx, &other.ctx)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly> {
        VarContext::check(&self.ctx, &other.ctx)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &MPoly, subtract: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if subtract { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MPoly {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        let integral = self.terms.iter().all(|t| t.1.is_integer()) && other.terms.iter().all(|t| t.1.is_integer());
        if integral {
            // Integer fast path: avoids rational normalization on every product.
            let mut iacc: HashMap<Monomial, BigInt> =
                HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let prod = ca.numer() * cb.numer();
                    *iacc.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += prod;
                }
            }
            acc.extend(
                iacc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, Rational::from_integer(c))),
            );
        } else {
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
                }
            }
        }
        Self::from_map(&self.ctx, acc)
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        // Multiplying every monomial by the same monomial preserves the order.
        MPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ctx);
        }
        MPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, cc)| (m.clone(), cc * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut result = MPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn product<'a>(ctx: &Ctx, factors: impl IntoIterator<Item = &'a MPoly>) -> MPoly {
        factors.into_iter().fold(MPoly::one(ctx), |acc, f| &acc * f)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        // Cache powers per variable; degrees are small.
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(point.len());
        for (i, v) in point.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut row = Vec::with_capacity(d + 1);
            row.push(Rational::one());
            for k in 1..=d {
                let next = &row[k - 1] * v;
                row.push(next);
            }
            powers.push(row);
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            sum += term;
        }
        Ok(sum)
    }

    /// Substitutes variable `i` by `images[i]`; the images live in a common
    /// target context.
    pub fn substitute(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => return Ok(self.clone()),
        };
        for img in images {
            VarContext::check(&target, &img.ctx)?;
        }
        let mut powers: Vec<Vec<MPoly>> = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut row = vec![MPoly::one(&target)];
            for k in 1..=d {
                let next = &row[k - 1] * img;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Ok(Self::from_map(&target, acc))
    }

    /// Same polynomial read in another context with the same arity.
    pub fn with_context(&self, ctx: &Ctx) -> Result<MPoly> {
        if ctx.arity() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: ctx.arity(),
            });
        }
        Ok(MPoly {
            ctx: ctx.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Coefficients with respect to one variable: `self = Σ_k out[k] · var^k`,
    /// where each `out[k]` is free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut mm = m.clone();
            mm.0[var] = 0;
            buckets[k].push((mm, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                // Zeroing one exponent can reorder terms.
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MPoly {
                    ctx: self.ctx.clone(),
                    terms: ts,
                }
            })
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(ctx: &Ctx, var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero(ctx);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut m = Monomial::one(ctx.arity());
            m.0[var] = k as u16;
            acc = &acc + &c.mul_term(&m, &Rational::one());
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(VarContext::same(&self.ctx, &divisor.ctx));
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = divisor.terms[0].clone();
        if divisor.terms.len() == 1 {
            let inv = lc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.div(&lm)?, c * &inv));
            }
            return Some(MPoly {
                ctx: self.ctx.clone(),
                terms,
            });
        }
        let mut quotient: Vec<(Monomial, Rational)> = Vec::new();
        let mut rem = self.clone();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = rm.div(&lm)?;
            let qc = &rc / &lc;
            rem = rem.merge(&divisor.mul_term(&qm, &qc), true);
            quotient.push((qm, qc));
        }
        // Quotient terms were produced in decreasing order.
        Some(MPoly {
            ctx: self.ctx.clone(),
            terms: quotient,
        })
    }

    /// `self = factor · primitive`, where `primitive` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn integer_primitive(&self) -> (Rational, MPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let lcm = self.terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.1.denom()));
        let gcd = self
            .terms
            .iter()
            .fold(BigInt::zero(), |acc, t| acc.gcd(&(t.1.numer() * (&lcm / t.1.denom()))));
        let mut factor = Rational::new(gcd, lcm);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        let inv = factor.recip();
        (factor, self.scale(&inv))
    }

    /// Monic scaling (leading coefficient one); zero stays zero.
    pub fn monic(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.terms[0].1.recip())
    }

    /// Coefficient vector over a fixed list of monomials; `None` if the
    /// polynomial has a term outside the list.
    pub fn coefficient_vector(&self, basis: &HashMap<Monomial, usize>) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[*basis.get(m)?] = c.clone();
        }
        Some(v)
    }

    /// Derivative with respect to one variable.
    pub fn derivative(&self, var: usize) -> MPoly {
        let terms = self.terms.iter().filter(|t| t.0 .0[var] > 0).map(|(m, c)| {
            let mut mm = m.clone();
            let e = mm.0[var];
            mm.0[var] -= 1;
            (mm, c * Rational::from_integer(BigInt::from(e)))
        });
        MPoly::from_terms(&self.ctx, terms)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ctx.var_name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ctx.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MPoly> for &MPoly {
            type Output = MPoly;
            /// Panics if the operands live in different contexts; use the
            /// `checked_*` methods to get a `Result` instead.
            fn $method(self, rhs: &MPoly) -> MPoly {
                self.$checked(rhs).expect("MPoly context mismatch")
            }
        }
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::context::{x_context, z_context};
    use super::super::rational::{int, rat};
    use super::*;

    fn x(i: usize) -> MPoly {
        MPoly::var(&x_context(), i - 1)
    }

    #[test]
    fn additive_inverse_is_zero() {
        assert!((x(1) + (-x(1))).is_zero());
        assert!((x(1) - x(1)).is_zero());
    }

    #[test]
    fn multiplicative_identity() {
        let p = x(1) * x(4) - x(2) * x(3);
        assert_eq!(&p * &MPoly::one(&x_context()), p);
    }

    #[test]
    fn display_uses_grlex_order() {
        let p = x(1) * x(4) - x(2) * x(3);
        assert_eq!(p.to_string(), "x1*x4 - x2*x3");
        let q = x(2).scale(&rat(-1, 2)) + x(1).pow(2) + MPoly::from_int(&x_context(), 3);
        assert_eq!(q.to_string(), "x1^2 - 1/2*x2 + 3");
        assert_eq!(MPoly::zero(&x_context()).to_string(), "0");
    }

    #[test]
    fn mixing_contexts_is_an_error() {
        let z1 = MPoly::var(&z_context(), 0);
        assert!(matches!(x(1).checked_add(&z1), Err(Error::ContextMismatch(..))));
        assert!(x(1).checked_mul(&z1).is_err());
    }

    #[test]
    fn eval_checks_arity() {
        let p = x(1) + x(2);
        assert!(matches!(
            p.eval(&[int(1)]),
            Err(Error::ArityMismatch { expected: 4, got: 1 })
        ));
        let p = x(1).pow(3) + MPoly::from_int(&x_context(), 7);
        assert_eq!(p.eval(&[int(0), int(0), int(0), int(0)]).unwrap(), int(7));
        assert_eq!(p.eval(&[int(2), int(0), int(0), int(0)]).unwrap(), int(15));
    }

    #[test]
    fn exact_division() {
        let a = x(1) - x(2);
        let b = x(3) * x(3) + x(4);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(prod.div_exact(&(x(1) + x(2))).is_none());
        assert_eq!((&prod * &x(2)).div_exact(&x(2)).unwrap(), prod);
    }

    #[test]
    fn coefficients_round_trip() {
        let p = x(1).pow(2) * x(2) + x(1) * x(3) - x(4);
        let cs = p.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], x(2));
        assert_eq!(MPoly::from_coefficients_in(&x_context(), 0, &cs), p);
    }

    #[test]
    fn primitive_part() {
        let p = x(1).scale(&rat(-2, 3)) + x(2).scale(&rat(4, 9));
        let (c, prim) = p.integer_primitive();
        assert_eq!(c, rat(-2, 9));
        assert_eq!(prim.to_string(), "3*x1 - 2*x2");
    }

    #[test]
    fn substitution() {
        let p = x(1) * x(2) + x(3);
        let z = z_context();
        let images = vec![MPoly::var(&z, 0), MPoly::var(&z, 0), MPoly::var(&z, 1), MPoly::zero(&z)];
        assert_eq!(p.substitute(&images).unwrap().to_string(), "z1^2 + z2");
    }
}
