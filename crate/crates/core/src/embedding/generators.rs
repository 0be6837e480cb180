//! The seven birational involutions of the moduli space and their cofactors.

use std::sync::OnceLock;

use super::reference::{C1, C2, C3, C4, C5, C6, CR, S1, S2, S3, S4, S5, S6, SR};
use crate::arith::{poly, x_context, MPoly, RatFunc, Rational, RationalMap};
use crate::error::Result;
use crate::roots::{Generator, SignedPerm40};

const SR_NUM: [&str; 4] = [
    "(x4 - 1)*(x1*x4 - x2*x3)",
    "(x3 - 1)*(x1*x4 - x2*x3)",
    "(x2 - 1)*(x1*x4 - x2*x3)",
    "(x1 - 1)*(x1*x4 - x2*x3)",
];

/// Numerators and factored denominators of the four components.
fn components(g: Generator) -> [(&'static str, &'static [&'static str]); 4] {
    match g {
        Generator::S1 => [("1", &["x1"]), ("1", &["x2"]), ("x3", &["x1"]), ("x4", &["x2"])],
        Generator::S2 => [("x3", &[]), ("x4", &[]), ("x1", &[]), ("x2", &[])],
        Generator::S3 => [
            ("x1 - x3", &["1 - x3"]),
            ("x2 - x4", &["1 - x4"]),
            ("x3", &["x3 - 1"]),
            ("x4", &["x4 - 1"]),
        ],
        Generator::S4 => [("1", &["x1"]), ("x2", &["x1"]), ("1", &["x3"]), ("x4", &["x3"])],
        Generator::S5 => [("x2", &[]), ("x1", &[]), ("x4", &[]), ("x3", &[])],
        Generator::S6 => [("1", &["x1"]), ("1", &["x2"]), ("1", &["x3"]), ("1", &["x4"])],
        Generator::Sr => [
            (SR_NUM[0], &["x4 - x2", "x4 - x3"]),
            (SR_NUM[1], &["x3 - x1", "x4 - x3"]),
            (SR_NUM[2], &["x4 - x2", "x2 - x1"]),
            (SR_NUM[3], &["x3 - x1", "x2 - x1"]),
        ],
    }
}

fn cofactor_text(g: Generator) -> (&'static str, &'static str) {
    match g {
        Generator::S1 => C1,
        Generator::S2 => C2,
        Generator::S3 => C3,
        Generator::S4 => C4,
        Generator::S5 => C5,
        Generator::S6 => C6,
        Generator::Sr => CR,
    }
}

fn reference_rows(g: Generator) -> &'static [(usize, i8); 40] {
    match g {
        Generator::S1 => &S1,
        Generator::S2 => &S2,
        Generator::S3 => &S3,
        Generator::S4 => &S4,
        Generator::S5 => &S5,
        Generator::S6 => &S6,
        Generator::Sr => &SR,
    }
}

/// One involution of the moduli space: its components, the linear factors
/// of their denominators, its cofactor and the reference transformation
/// table of the coordinates.
#[derive(Debug)]
pub struct GeneratorMap {
    generator: Generator,
    map: RationalMap,
    /// Distinct denominator factors, normalized by [`MPoly::integer_primitive`].
    den_factors: Vec<MPoly>,
    /// Component `i` is `num[i] / (scalar[i] · ∏ den_factors[k]^exps[i][k])`.
    nums: Vec<MPoly>,
    den_scalars: Vec<Rational>,
    den_exps: Vec<Vec<u32>>,
    cofactor: RatFunc,
    table: SignedPerm40,
}

fn intern(base: &mut Vec<MPoly>, f: &MPoly) -> (Rational, usize) {
    let (c, prim) = f.integer_primitive();
    let k = base.iter().position(|b| *b == prim).unwrap_or_else(|| {
        base.push(prim);
        base.len() - 1
    });
    (c, k)
}

impl GeneratorMap {
    fn build(generator: Generator) -> GeneratorMap {
        let ctx = x_context();
        let mut base = Vec::new();
        let mut nums = Vec::new();
        let mut den_scalars = Vec::new();
        let mut den_exps_raw = Vec::new();
        let mut rats = Vec::new();
        for (n, dens) in components(generator) {
            let num = poly(&ctx, n);
            let mut scalar = Rational::from_integer(1.into());
            let mut exps = Vec::new();
            let mut den = MPoly::one(&ctx);
            for d in dens {
                let dp = poly(&ctx, d);
                den = &den * &dp;
                let (c, k) = intern(&mut base, &dp);
                scalar *= c;
                exps.push(k);
            }
            rats.push(RatFunc::new(num.clone(), den).expect("nonzero denominator"));
            nums.push(num);
            den_scalars.push(scalar);
            den_exps_raw.push(exps);
        }
        let (cn, cd) = cofactor_text(generator);
        let cofactor = RatFunc::new_raw(poly(&ctx, cn), poly(&ctx, cd)).expect("cofactor");
        let den_exps = den_exps_raw
            .into_iter()
            .map(|ks: Vec<usize>| {
                let mut e = vec![0u32; base.len()];
                for k in ks {
                    e[k] += 1;
                }
                e
            })
            .collect();
        GeneratorMap {
            generator,
            map: RationalMap::new(&ctx, rats).expect("x-context"),
            den_factors: base,
            nums,
            den_scalars,
            den_exps,
            cofactor,
            table: SignedPerm40::from_table(reference_rows(generator)).expect("reference table"),
        }
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn name(&self) -> &'static str {
        self.generator.name()
    }

    pub fn map(&self) -> &RationalMap {
        &self.map
    }

    pub fn cofactor(&self) -> &RatFunc {
        &self.cofactor
    }

    /// The reference transformation table as a signed permutation.
    pub fn reference_table(&self) -> &SignedPerm40 {
        &self.table
    }

    pub fn den_factors(&self) -> &[MPoly] {
        &self.den_factors
    }

    pub(crate) fn component_parts(&self, i: usize) -> (&MPoly, &Rational, &[u32]) {
        (&self.nums[i], &self.den_scalars[i], &self.den_exps[i])
    }

    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.map.eval(x)
    }

    /// `self ∘ self` equals the identity as a rational map.
    pub fn is_involution(&self) -> Result<bool> {
        Ok(self.map.compose(&self.map)?.is_identity())
    }
}

/// The shared map of a generator.
pub fn generator_map(g: Generator) -> &'static GeneratorMap {
    static CELLS: [OnceLock<GeneratorMap>; 7] = [const { OnceLock::new() }; 7];
    let i = Generator::ALL.iter().position(|h| *h == g).expect("generator");
    CELLS[i].get_or_init(|| GeneratorMap::build(g))
}

/// Checks the Coxeter relations between two generator maps in braid form:
/// `s t = t s` when the exponent is 2, `s t s = t s t` when it is 3.
pub fn braid_relation_holds(a: Generator, b: Generator) -> Result<bool> {
    let (ma, mb) = (generator_map(a).map(), generator_map(b).map());
    match a.coxeter_exponent(&b) {
        1 => generator_map(a).is_involution(),
        2 => Ok(ma.compose(mb)?.eq_cross(&mb.compose(ma)?)),
        _ => {
            let aba = ma.compose(&mb.compose(ma)?)?;
            let bab = mb.compose(&ma.compose(mb)?)?;
            Ok(aba.eq_cross(&bab))
        }
    }
}
