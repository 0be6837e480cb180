//! Symbolic verification of the transformation tables.

use std::collections::HashMap;

use serde::Serialize;

use super::generators::{generator_map, GeneratorMap};
use super::table::{embedding_table, PointM};
use crate::arith::map::pullback_raw;
use crate::arith::{x_context, MPoly, Rational};
use crate::error::{Error, Result};
use crate::roots::Generator;
use crate::sample;

/// A rational function `num / ∏ base_k^{exps_k}` over the denominator
/// factors of a generator map.
#[derive(Clone, Debug)]
pub struct Pulled {
    pub num: MPoly,
    pub exps: Vec<u32>,
}

impl Pulled {
    fn mul(&self, other: &Pulled) -> Pulled {
        Pulled {
            num: &self.num * &other.num,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Cancels base factors that divide the numerator.
    fn reduce(mut self, base: &[MPoly]) -> Pulled {
        for (k, b) in base.iter().enumerate() {
            while self.exps[k] > 0 {
                match self.num.div_exact(b) {
                    Some(q) => {
                        self.num = q;
                        self.exps[k] -= 1;
                    }
                    None => break,
                }
            }
        }
        self
    }
}

/// Writes `p` as `scalar · ∏ base_k^{e_k}`, if it factors that way.
fn factor_over(base: &[MPoly], p: &MPoly) -> Option<(Rational, Vec<u32>)> {
    let mut rest = p.clone();
    let mut exps = vec![0u32; base.len()];
    for (k, b) in base.iter().enumerate() {
        while let Some(q) = rest.div_exact(b) {
            if rest.is_constant() {
                break;
            }
            rest = q;
            exps[k] += 1;
        }
    }
    rest.is_constant().then(|| (rest.constant_term(), exps))
}

impl GeneratorMap {
    /// `f ∘ self` with its denominator tracked over [`den_factors`](Self::den_factors).
    pub fn pull_back(&self, f: &MPoly) -> Result<Pulled> {
        let ctx = x_context();
        let base = self.den_factors();
        let mut nums = Vec::with_capacity(4);
        let mut dens = Vec::with_capacity(4);
        let mut scalar = Rational::from_integer(1.into());
        let mut exps = vec![0u32; base.len()];
        for i in 0..4 {
            let (n, s, e) = self.component_parts(i);
            let d = f.degree_in(i);
            let mut den = MPoly::constant(&ctx, s.clone());
            for (k, &ek) in e.iter().enumerate() {
                den = &den * &base[k].pow(ek);
                exps[k] += d * ek;
            }
            for _ in 0..d {
                scalar *= s;
            }
            nums.push(n.clone());
            dens.push(den);
        }
        let nrefs: Vec<&MPoly> = nums.iter().collect();
        let drefs: Vec<&MPoly> = dens.iter().collect();
        let (num, _) = pullback_raw(&ctx, f, &nrefs, &drefs)?;
        Ok(Pulled {
            num: num.scale(&scalar.recip()),
            exps,
        }
        .reduce(base))
    }
}

/// Outcome for one coordinate.
#[derive(Clone, Debug, Serialize)]
pub struct RowCheck {
    pub alpha: usize,
    pub beta: usize,
    pub sign: i8,
    pub matches_reference: bool,
    pub matches_combinatorial: bool,
}

/// Outcome of verifying one generator's table.
#[derive(Clone, Debug, Serialize)]
pub struct EquivarianceReport {
    pub generator: Generator,
    /// Every row holds as an exact identity `y_α ∘ g = ε c y_β`.
    pub rows: Vec<RowCheck>,
    pub reference_mismatches: Vec<usize>,
    pub combinatorial_mismatches: Vec<usize>,
}

impl EquivarianceReport {
    pub fn all_match(&self) -> bool {
        self.reference_mismatches.is_empty() && self.combinatorial_mismatches.is_empty()
    }
}

/// For each coordinate `α` finds `(β, ε)` with `y_α ∘ g = ε · c_g · y_β` by
/// evaluation at a random point, proves the identity by cross-multiplication
/// and compares with the reference table and with the combinatorial signed
/// permutation (for `sr` the reference table is the expectation).
pub fn verify_equivariance(g: Generator) -> Result<EquivarianceReport> {
    let gm = generator_map(g);
    let table = embedding_table();
    let base = gm.den_factors();
    let fail = |alpha: usize, details: String| Error::IdentityFailure {
        generator: g.name().to_string(),
        alpha,
        details,
    };

    let (cnum, cden) = (gm.cofactor().num(), gm.cofactor().den());
    let (cscalar, cexps) = factor_over(base, cden)
        .ok_or_else(|| fail(0, "cofactor denominator is not a product of map denominators".into()))?;

    // Candidate (β, ε) by evaluation at two sample points.
    let mut rng = sample::rng(0x5eed ^ g as u64);
    let pts: Vec<PointM> = (0..2).map(|_| sample::random_point(&mut rng)).collect();
    let mut evals = Vec::new();
    for p in &pts {
        let x = p.coords();
        let gx = gm.apply(x)?;
        evals.push((table.eval_all(&gx)?, table.eval_all(x)?, gm.cofactor().eval(x)?));
    }

    let expected_comb = if g == Generator::Sr {
        *gm.reference_table()
    } else {
        g.signed_perm()
    };

    let mut pulled: HashMap<usize, Pulled> = HashMap::new();
    let mut rows = Vec::with_capacity(40);
    for alpha in 1..=40 {
        let mut found = None;
        'beta: for beta in 1..=40 {
            for eps in [1i8, -1] {
                let ok = evals.iter().all(|(v, w, c)| {
                    let rhs = c * &w[beta - 1];
                    if eps < 0 {
                        v[alpha - 1] == -rhs
                    } else {
                        v[alpha - 1] == rhs
                    }
                });
                if ok {
                    found = Some((beta, eps));
                    break 'beta;
                }
            }
        }
        let (beta, eps) = found.ok_or_else(|| fail(alpha, "no coordinate matches".into()))?;

        let (sign, ids) = table.factorization(alpha);
        let mut q = Pulled {
            num: MPoly::from_int(&x_context(), sign as i64),
            exps: vec![0; base.len()],
        };
        for &i in ids {
            if let std::collections::hash_map::Entry::Vacant(e) = pulled.entry(i) {
                e.insert(gm.pull_back(&table.factors()[i])?);
            }
            q = q.mul(&pulled[&i]);
        }
        let q = q.reduce(base);

        // q.num / B^{q.exps} = ε · cnum / (cscalar · B^{cexps}) · y_β
        let mut lhs = q.num.scale(&cscalar);
        let mut rhs = cnum * table.y(beta);
        if eps < 0 {
            rhs = -rhs;
        }
        for k in 0..base.len() {
            let m = q.exps[k].min(cexps[k]);
            if cexps[k] > m {
                lhs = &lhs * &base[k].pow(cexps[k] - m);
            }
            if q.exps[k] > m {
                rhs = &rhs * &base[k].pow(q.exps[k] - m);
            }
        }
        if !(&lhs - &rhs).is_zero() {
            return Err(fail(alpha, format!("y{alpha} ∘ {g} ≠ {eps}·c·y{beta}")));
        }
        rows.push(RowCheck {
            alpha,
            beta,
            sign: eps,
            matches_reference: gm.reference_table().apply(alpha - 1) == (beta - 1, eps),
            matches_combinatorial: expected_comb.apply(alpha - 1) == (beta - 1, eps),
        });
    }
    let reference_mismatches = rows.iter().filter(|r| !r.matches_reference).map(|r| r.alpha).collect();
    let combinatorial_mismatches = rows
        .iter()
        .filter(|r| !r.matches_combinatorial)
        .map(|r| r.alpha)
        .collect();
    Ok(EquivarianceReport {
        generator: g,
        rows,
        reference_mismatches,
        combinatorial_mismatches,
    })
}
