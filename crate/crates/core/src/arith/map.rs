//! Rational maps between coordinate spaces and substitution of rational
//! functions into polynomials.

use super::context::{Ctx, VarContext};
use super::poly::{MPoly, Monomial};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A tuple of rational functions in a common source context.
///
/// A polynomial `p` in a context of arity `m` can be pulled back along a map
/// with `m` components: its `i`-th variable is replaced by component `i`.
#[derive(Clone, Debug)]
pub struct RationalMap {
    source: Ctx,
    components: Vec<RatFunc>,
}

impl RationalMap {
    pub fn new(source: &Ctx, components: Vec<RatFunc>) -> Result<Self> {
        for c in &components {
            VarContext::check(source, c.ctx())?;
        }
        Ok(RationalMap {
            source: source.clone(),
            components,
        })
    }

    pub fn identity(ctx: &Ctx) -> Self {
        RationalMap {
            source: ctx.clone(),
            components: MPoly::vars(ctx).into_iter().map(RatFunc::from_poly).collect(),
        }
    }

    /// Map with polynomial components.
    pub fn from_polys(source: &Ctx, polys: Vec<MPoly>) -> Result<Self> {
        Self::new(source, polys.into_iter().map(RatFunc::from_poly).collect())
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[RatFunc] {
        &self.components
    }

    /// Pullback `p ∘ self` as an unreduced pair `(numerator, denominator)`.
    ///
    /// If component `i` is `n_i / d_i` and `p` has degree `D_i` in variable
    /// `i`, the denominator is `∏ d_i^{D_i}` and the numerator is
    /// `Σ c_e ∏ n_i^{e_i} d_i^{D_i − e_i}`. No gcd is taken.
    pub fn compose_poly_raw(&self, p: &MPoly) -> Result<(MPoly, MPoly)> {
        let nums: Vec<&MPoly> = self.components.iter().map(RatFunc::num).collect();
        let dens: Vec<&MPoly> = self.components.iter().map(RatFunc::den).collect();
        pullback_raw(&self.source, p, &nums, &dens)
    }

    /// Pullback `p ∘ self` as a canonical rational function.
    pub fn compose_poly(&self, p: &MPoly) -> Result<RatFunc> {
        let (n, d) = self.compose_poly_raw(p)?;
        RatFunc::new(n, d)
    }

    /// Pullback of a rational function, without gcd reduction.
    pub fn compose_ratfunc_raw(&self, r: &RatFunc) -> Result<RatFunc> {
        let (nn, nd) = self.compose_poly_raw(r.num())?;
        let (dn, dd) = self.compose_poly_raw(r.den())?;
        if dn.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        RatFunc::new_raw(&nn * &dd, &nd * &dn)
    }

    pub fn compose_ratfunc(&self, r: &RatFunc) -> Result<RatFunc> {
        Ok(self.compose_ratfunc_raw(r)?.canonical())
    }

    /// `self ∘ inner`: apply `inner` first. Components are canonicalized.
    pub fn compose(&self, inner: &RationalMap) -> Result<RationalMap> {
        let components = self
            .components
            .iter()
            .map(|c| inner.compose_ratfunc(&c.with_arity_context(inner.arity())?))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(&inner.source, components)
    }

    /// Like [`compose`](Self::compose) but skipping gcd reduction.
    pub fn compose_raw(&self, inner: &RationalMap) -> Result<RationalMap> {
        let components = self
            .components
            .iter()
            .map(|c| inner.compose_ratfunc_raw(&c.with_arity_context(inner.arity())?))
            .collect::<Result<Vec<_>>>()?;
        RationalMap::new(&inner.source, components)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    /// Componentwise cross-multiplied equality.
    pub fn eq_cross(&self, other: &RationalMap) -> bool {
        self.arity() == other.arity()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.cross_eq(b))
    }

    /// True if every component is `x_i` itself.
    pub fn is_identity(&self) -> bool {
        self.eq_cross(&RationalMap::identity(&self.source))
    }
}

impl RatFunc {
    /// Checks that this function can be fed a map of the given arity.
    fn with_arity_context(&self, arity: usize) -> Result<RatFunc> {
        if self.ctx().arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                got: self.ctx().arity(),
            });
        }
        Ok(self.clone())
    }
}

/// Substitutes `nums[i] / dens[i]` for variable `i` of `p`, returning
/// `(numerator, denominator)` over the common denominator
/// `∏ dens[i]^{deg_i p}`. The numerator is
/// `Σ c_e ∏ nums[i]^{e_i} dens[i]^{deg_i p − e_i}`.
pub fn pullback_raw(target: &Ctx, p: &MPoly, nums: &[&MPoly], dens: &[&MPoly]) -> Result<(MPoly, MPoly)> {
    if p.nvars() != nums.len() || nums.len() != dens.len() {
        return Err(Error::ArityMismatch {
            expected: nums.len(),
            got: p.nvars(),
        });
    }
    // powers[i][j] = n_i^j · d_i^{D_i − j}
    let mut powers: Vec<Vec<MPoly>> = Vec::with_capacity(p.nvars());
    let mut den = MPoly::one(target);
    for i in 0..p.nvars() {
        let d = p.degree_in(i) as usize;
        let mut num_pows = vec![MPoly::one(target)];
        let mut den_pows = vec![MPoly::one(target)];
        for k in 1..=d {
            num_pows.push(&num_pows[k - 1] * nums[i]);
            den_pows.push(&den_pows[k - 1] * dens[i]);
        }
        powers.push((0..=d).map(|j| &num_pows[j] * &den_pows[d - j]).collect());
        den = &den * &den_pows[d];
    }
    let mut acc: Vec<(Monomial, Rational)> = Vec::new();
    for (m, c) in p.terms() {
        let mut term = MPoly::constant(target, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            let f = &powers[i][e as usize];
            if !f.is_one() {
                term = &term * f;
            }
        }
        acc.extend(term.terms().iter().cloned());
    }
    Ok((MPoly::from_terms(target, acc), den))
}

/// Pullback of `p` along a map, evaluated at a point without building the
/// composite: `p(map(point))`.
pub fn eval_pullback(p: &MPoly, map: &RationalMap, point: &[Rational]) -> Result<Rational> {
    p.eval(&map.eval(point)?)
}

#[cfg(test)]
mod tests {
    use super::super::context::x_context;
    use super::super::rational::{int, rat};
    use super::*;

    fn px(s: &str) -> MPoly {
        MPoly::parse(&x_context(), s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(px(n), px(d)).unwrap()
    }

    fn inversion() -> RationalMap {
        RationalMap::new(
            &x_context(),
            vec![rf("1", "x1"), rf("1", "x2"), rf("x3", "1"), rf("x4", "x1")],
        )
        .unwrap()
    }

    #[test]
    fn identity_pullback() {
        let p = px("x1*x4 - x2*x3 + 3");
        let r = RationalMap::identity(&x_context()).compose_poly(&p).unwrap();
        assert_eq!(r.num(), &p);
        assert!(r.den().is_one());
    }

    #[test]
    fn pullback_matches_pointwise_evaluation() {
        let p = px("x1^2*x4 - x2*x3 + x1");
        let m = inversion();
        let r = m.compose_poly(&p).unwrap();
        let pt = [int(2), int(3), rat(-1, 5), int(7)];
        assert_eq!(r.eval(&pt).unwrap(), eval_pullback(&p, &m, &pt).unwrap());
    }

    #[test]
    fn composition_and_involution() {
        let m = RationalMap::new(
            &x_context(),
            vec![rf("1", "x1"), rf("1", "x2"), rf("x3", "x1"), rf("x4", "x2")],
        )
        .unwrap();
        assert!(m.compose(&m).unwrap().is_identity());
        assert!(!m.is_identity());
    }

    #[test]
    fn zero_denominator_after_substitution() {
        let r = rf("1", "x1 - x2");
        let m = RationalMap::from_polys(&x_context(), vec![px("x3"), px("x3"), px("x1"), px("x2")]).unwrap();
        assert_eq!(m.compose_ratfunc(&r).unwrap_err(), Error::DivisionByZeroPolynomial);
    }
}
