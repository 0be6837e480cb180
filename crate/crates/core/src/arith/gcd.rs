//! Polynomial division with respect to one variable, pseudo-remainders and
//! greatest common divisors.
//!
//! The multivariate gcd is the classical recursive primitive-PRS algorithm:
//! pick a main variable, split off contents (gcds of coefficients, computed
//! recursively in fewer variables) and run a primitive pseudo-remainder
//! sequence on the primitive parts. It is exact but makes no attempt at
//! modular speedups, so callers on hot paths should prefer cross-multiplied
//! equality tests.

use num_traits::One;

use super::context::VarContext;
use super::poly::{MPoly, Monomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Leading coefficient of `p` viewed as a polynomial in `var`.
pub fn lc_in(p: &MPoly, var: usize) -> MPoly {
    p.coefficients_in(var).pop().unwrap_or_else(|| MPoly::zero(p.ctx()))
}

fn var_power(p: &MPoly, var: usize, k: u32) -> Monomial {
    let mut m = Monomial::one(p.nvars());
    m.0[var] = k as u16;
    m
}

/// Division `a = q·b + r` with `deg_var(r) < deg_var(b)`, valid when the
/// leading coefficient of `b` in `var` is a nonzero constant.
pub fn div_rem_in(a: &MPoly, b: &MPoly, var: usize) -> Result<(MPoly, MPoly)> {
    VarContext::check(a.ctx(), b.ctx())?;
    if b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let lc = lc_in(b, var);
    if !lc.is_constant() {
        return Err(Error::NonGeneric(format!("leading coefficient {lc} is not constant")));
    }
    let inv = lc.constant_term().recip();
    let db = b.degree_in(var);
    let mut q = MPoly::zero(a.ctx());
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let coeff = lc_in(&r, var).scale(&inv);
        let shift = coeff.mul_term(&var_power(a, var, dr - db), &Rational::one());
        r = &r - &(&shift * b);
        q = &q + &shift;
    }
    Ok((q, r))
}

/// Pseudo-division: returns `(q, r, e)` with `lc^e · a = q·b + r` and
/// `deg_var(r) < deg_var(b)`, where `lc` is the leading coefficient of `b` in
/// `var` and `e = max(deg a - deg b + 1, 0)`.
pub fn pseudo_div_rem(a: &MPoly, b: &MPoly, var: usize) -> Result<(MPoly, MPoly, u32)> {
    VarContext::check(a.ctx(), b.ctx())?;
    if b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let lc = lc_in(b, var);
    let db = b.degree_in(var);
    let da = a.degree_in(var);
    if a.is_zero() || da < db {
        return Ok((MPoly::zero(a.ctx()), a.clone(), 0));
    }
    let e = da - db + 1;
    let mut q = MPoly::zero(a.ctx());
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = lc_in(&r, var);
        let shift = lr.mul_term(&var_power(a, var, dr - db), &Rational::one());
        r = &(&r * &lc) - &(&shift * b);
        q = &(&q * &lc) + &shift;
        steps += 1;
    }
    let fix = lc.pow(e - steps);
    Ok((&q * &fix, &r * &fix, e))
}

/// Pseudo-remainder only.
pub fn pseudo_rem(a: &MPoly, b: &MPoly, var: usize) -> Result<MPoly> {
    pseudo_div_rem(a, b, var).map(|t| t.1)
}

fn normalize(p: &MPoly) -> MPoly {
    p.integer_primitive().1
}

/// Greatest common divisor, normalized to coprime integer coefficients with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    assert!(VarContext::same(a.ctx(), b.ctx()), "gcd context mismatch");
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    normalize(&gcd_nonzero(a, b))
}

fn monomial_content(p: &MPoly) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().expect("nonzero").0.clone();
    it.fold(first, |acc, t| acc.gcd(&t.0))
}

fn gcd_nonzero(a: &MPoly, b: &MPoly) -> MPoly {
    let ctx = a.ctx();
    if a.is_constant() || b.is_constant() {
        return MPoly::one(ctx);
    }
    if a.is_monomial() || b.is_monomial() {
        let m = monomial_content(a).gcd(&monomial_content(b));
        return MPoly::monomial(ctx, m, Rational::one());
    }
    let sa = a.support();
    let sb = b.support();
    if let Some(&v) = sa.iter().find(|v| !sb.contains(v)) {
        return gcd_nonzero(&content_in(a, v), b);
    }
    if let Some(&v) = sb.iter().find(|v| !sa.contains(v)) {
        return gcd_nonzero(a, &content_in(b, v));
    }
    // Main variable: the common one of smallest degree keeps the PRS short.
    let v = *sa
        .iter()
        .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
        .expect("non-constant");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_nonzero(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    &c * &g
}

/// Gcd of the coefficients of `p` with respect to `var`.
pub fn content_in(p: &MPoly, var: usize) -> MPoly {
    let mut acc: Option<MPoly> = None;
    for c in p.coefficients_in(var).into_iter().filter(|c| !c.is_zero()) {
        acc = Some(match acc {
            None => normalize(&c),
            Some(g) => normalize(&gcd_nonzero(&g, &c)),
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            return MPoly::one(p.ctx());
        }
    }
    acc.unwrap_or_else(|| MPoly::zero(p.ctx()))
}

/// Primitive part with respect to `var`.
pub fn primitive_part_in(p: &MPoly, var: usize) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    normalize(&p.div_exact(&c).expect("content divides"))
}

fn primitive_prs(a: MPoly, b: MPoly, var: usize) -> MPoly {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        if b.degree_in(var) == 0 {
            // b is a nonzero polynomial free of var and primitive in var.
            return MPoly::one(a.ctx());
        }
        let r = pseudo_rem(&a, &b, var).expect("same context");
        if r.is_zero() {
            return primitive_part_in(&b, var);
        }
        a = b;
        b = primitive_part_in(&r, var);
    }
}

/// Gcd of two polynomials that involve at most the single variable `var`,
/// returned monic. `univar_gcd(p, 0)` is `p` made monic.
pub fn univar_gcd(p: &MPoly, q: &MPoly, var: usize) -> Result<MPoly> {
    VarContext::check(p.ctx(), q.ctx())?;
    for f in [p, q] {
        if f.support().iter().any(|&v| v != var) {
            return Err(Error::NonGeneric(format!(
                "{f} is not univariate in {}",
                p.ctx().var_name(var)
            )));
        }
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = div_rem_in(&a, &b, var)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// True if `d` divides `p` exactly.
pub fn divides(d: &MPoly, p: &MPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    p.div_exact(d).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::context::{st_context, x_context};
    use super::*;

    fn px(s: &str) -> MPoly {
        MPoly::parse(&x_context(), s).unwrap()
    }

    #[test]
    fn univariate_gcd_examples() {
        let ctx = st_context();
        let p = MPoly::parse(&ctx, "s^2 - 1").unwrap();
        let q = MPoly::parse(&ctx, "s - 1").unwrap();
        assert_eq!(univar_gcd(&p, &q, 0).unwrap().to_string(), "s - 1");
        let z = MPoly::zero(&ctx);
        let p2 = MPoly::parse(&ctx, "2*s^2 - 2").unwrap();
        assert_eq!(univar_gcd(&p2, &z, 0).unwrap().to_string(), "s^2 - 1");
        assert!(univar_gcd(&MPoly::parse(&ctx, "s*t").unwrap(), &q, 0).is_err());
    }

    #[test]
    fn multivariate_gcd_recovers_common_factor() {
        let g = px("x1*x4 - x2*x3");
        let a = &g * &px("x1 - x3 + 2");
        let b = &g * &px("x2^2 + x4");
        assert_eq!(gcd(&a, &b), g);
        assert!(gcd(&px("x1 + 1"), &px("x1 - 1")).is_one());
        assert_eq!(gcd(&px("2*x1^2*x2"), &px("4*x1*x2^3")), px("x1*x2"));
    }

    #[test]
    fn pseudo_division_identity() {
        let a = px("x1^3*x2 + x1 + x3");
        let b = px("x2*x1^2 - x4");
        let (q, r, e) = pseudo_div_rem(&a, &b, 0).unwrap();
        let lc = lc_in(&b, 0);
        assert_eq!(&lc.pow(e) * &a, &(&q * &b) + &r);
        assert!(r.degree_in(0) < 2);
    }

    #[test]
    fn division_with_constant_leading_coefficient() {
        let a = px("x1^3 + x2*x1 + 1");
        let b = px("2*x1^2 + x3");
        let (q, r) = div_rem_in(&a, &b, 0).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree_in(0) < 2);
        assert!(div_rem_in(&a, &px("x2*x1 + 1"), 0).is_err());
    }
}
