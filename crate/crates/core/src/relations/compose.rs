//! Composition of polynomials in the coordinates with the embedding, kept in
//! factored form for as long as possible.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::Zero;

use super::linear::PIVOTS;
use crate::arith::{x_context, MPoly, Rational};
use crate::embedding::embedding_table;
use crate::error::{Error, Result};

/// The coordinate polynomials as scalars times products of distinct
/// integer-primitive irreducible factors.
struct Factored {
    factors: Vec<MPoly>,
    ys: Vec<(Rational, BTreeMap<usize, u32>)>,
}

fn factored() -> &'static Factored {
    static CELL: OnceLock<Factored> = OnceLock::new();
    CELL.get_or_init(|| {
        let t = embedding_table();
        let mut factors: Vec<MPoly> = Vec::new();
        let mut index: HashMap<MPoly, usize> = HashMap::new();
        let normalized: Vec<(Rational, usize)> = t
            .factors()
            .iter()
            .map(|f| {
                let (c, p) = f.integer_primitive();
                let id = *index.entry(p.clone()).or_insert_with(|| {
                    factors.push(p);
                    factors.len() - 1
                });
                (c, id)
            })
            .collect();
        let ys = (1..=40)
            .map(|i| {
                let (sign, ids) = t.factorization(i);
                let mut scalar = Rational::from_integer(sign.into());
                let mut exps = BTreeMap::new();
                for &f in ids {
                    let (c, id) = &normalized[f];
                    scalar *= c;
                    *exps.entry(*id).or_insert(0) += 1;
                }
                (scalar, exps)
            })
            .collect();
        Factored { factors, ys }
    })
}

/// Which coordinate `y_j` each variable of a context stands for.
fn coordinate_map(p: &MPoly) -> Result<Vec<usize>> {
    match p.ctx().name() {
        "y" => Ok((1..=40).collect()),
        "g" => Ok(PIVOTS.to_vec()),
        other => Err(Error::ContextMismatch(other.to_string(), "y or g".to_string())),
    }
}

/// Exponents on the factor list.
type FactorExps = BTreeMap<usize, u32>;

/// `p ∘ φ` as a common factor times a sum with equal factor products
/// already merged.
fn product_form(p: &MPoly) -> Result<(FactorExps, Vec<(Rational, FactorExps)>)> {
    let coords = coordinate_map(p)?;
    let fz = factored();
    let mut merged: BTreeMap<Vec<(usize, u32)>, Rational> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut scalar = c.clone();
        let mut exps: BTreeMap<usize, u32> = BTreeMap::new();
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (s, f) = &fz.ys[coords[v] - 1];
            for _ in 0..e {
                scalar *= s;
            }
            for (id, k) in f {
                *exps.entry(*id).or_insert(0) += k * e as u32;
            }
        }
        *merged.entry(exps.into_iter().collect()).or_insert_with(Rational::zero) += scalar;
    }
    let terms: Vec<(Rational, BTreeMap<usize, u32>)> = merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (c, e.into_iter().collect()))
        .collect();
    let mut common: BTreeMap<usize, u32> = terms.first().map(|t| t.1.clone()).unwrap_or_default();
    for (_, e) in &terms[1.min(terms.len())..] {
        common = common
            .into_iter()
            .filter_map(|(id, k)| e.get(&id).map(|&j| (id, k.min(j))))
            .collect();
    }
    let terms = terms
        .into_iter()
        .map(|(c, e)| {
            let rest = e
                .into_iter()
                .filter_map(|(id, k)| {
                    let r = k - common.get(&id).copied().unwrap_or(0);
                    (r > 0).then_some((id, r))
                })
                .collect();
            (c, rest)
        })
        .collect();
    Ok((common, terms))
}

fn expand(exps: &BTreeMap<usize, u32>, cache: &mut HashMap<(usize, u32), MPoly>) -> MPoly {
    let fz = factored();
    let ctx = x_context();
    let mut acc = MPoly::one(&ctx);
    for (&id, &k) in exps {
        let f = cache.entry((id, k)).or_insert_with(|| fz.factors[id].pow(k)).clone();
        acc = &acc * &f;
    }
    acc
}

fn expand_sum(terms: &[(Rational, BTreeMap<usize, u32>)]) -> MPoly {
    let mut cache = HashMap::new();
    terms.iter().fold(MPoly::zero(&x_context()), |acc, (c, e)| {
        &acc + &expand(e, &mut cache).scale(c)
    })
}

/// Whether `p` (in the y- or g-context) vanishes identically on the
/// embedding. Exact: common factors are split off and only the cofactor
/// sum is expanded.
pub fn vanishes_on_phi(p: &MPoly) -> Result<bool> {
    let (_, terms) = product_form(p)?;
    Ok(terms.is_empty() || expand_sum(&terms).is_zero())
}

/// `p ∘ φ` as a polynomial in the x-context.
pub fn pullback_to_x(p: &MPoly) -> Result<MPoly> {
    let (common, terms) = product_form(p)?;
    let rest = expand_sum(&terms);
    if rest.is_zero() {
        return Ok(rest);
    }
    let mut cache = HashMap::new();
    Ok(&expand(&common, &mut cache) * &rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, poly, y_context};

    #[test]
    fn pullback_agrees_with_evaluation() {
        let p = poly(&y_context(), "y3*y13 - 2*y4 + y40^2");
        let x = [int(2), int(3), int(4), int(5)];
        let v = embedding_table().eval_all(&x).unwrap();
        assert_eq!(pullback_to_x(&p).unwrap().eval(&x).unwrap(), p.eval(&v).unwrap());
        assert!(!vanishes_on_phi(&p).unwrap());
        assert!(vanishes_on_phi(&poly(&y_context(), "y2 - y1 + y5 - y4")).unwrap());
    }
}
