//! Elimination over the base `(g1, …, g5)`: the closed forms for `g6, g8,
//! g9`, the quadrics `qq` and `dd`, the equations linear in `t`, and the
//! reconstruction of the two points over a base point.

mod quad;
mod reference;

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

pub use quad::{square_split, QuadExt};
use reference::{CONSUMED, CUB8_FACTOR, DD, G6, G8, G9, MINIMAL, QQ};

use crate::arith::gcd::{div_rem_in, pseudo_rem, univar_gcd};
use crate::arith::{
    eval_poly, g_context, k_context, poly, st_context, Ctx, MPoly, RatFunc, Rational, RationalMap, Scalar,
};
use crate::embedding::{embedding_table, eval_phi, generator_map, PointM, ProjPoint};
use crate::error::{Error, Result};
use crate::relations::{linear_relation_basis, membership, numbered_cubic_basis};
use crate::roots::Generator;
use crate::sample::small_rational;

/// Indices of `g6, s = g7, g8, g9, t = g0` in the g-context.
const G6_IX: usize = 5;
const S_IX: usize = 6;
const G8_IX: usize = 7;
const G9_IX: usize = 8;
const T_IX: usize = 9;

/// The base of the projection: numeric values of `g1..g5`, or the
/// rational function field in five variables.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum BaseField5 {
    Numeric([Rational; 5]),
    Symbolic,
}

impl BaseField5 {
    /// A numeric base, rejecting the loci where `qq` or `cub8` degenerate.
    pub fn numeric(g: [Rational; 5]) -> Result<Self> {
        if g[0].is_zero() || g[3].is_zero() {
            return Err(Error::NonGeneric("g1*g4 = 0".into()));
        }
        if g[0] == g[4] {
            return Err(Error::NonGeneric("g1 = g5".into()));
        }
        Ok(BaseField5::Numeric(g))
    }

    /// The base `π(p)` of a point of `P^39`, scaled to the canonical integer
    /// representative of `(y1 : y3 : y4 : y5 : y7)`.
    pub fn from_point(point: &[Rational]) -> Result<(Self, Rational)> {
        let p = crate::embedding::projection_p4(point)?;
        let g: [Rational; 5] = std::array::from_fn(|i| Rational::from_integer(p.coords()[i].clone()));
        let scale = if point[0].is_zero() {
            return Err(Error::NonGeneric("y1 = 0".into()));
        } else {
            &g[0] / &point[0]
        };
        Ok((Self::numeric(g)?, scale))
    }
}

fn closed_form_polys() -> &'static [(MPoly, MPoly); 3] {
    static CELL: OnceLock<[(MPoly, MPoly); 3]> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = g_context();
        [G6, G8, G9].map(|(n, d)| (poly(&g, n), poly(&g, d)))
    })
}

/// Polynomial ring the elimination runs in, with the images of `g1..g5`,
/// `s` and `t`.
#[derive(Clone, Debug)]
struct Setting {
    ctx: Ctx,
    base: Vec<MPoly>,
    s: MPoly,
    t: MPoly,
    svar: usize,
    tvar: usize,
    numeric: bool,
}

impl Setting {
    fn new(base: &BaseField5) -> Self {
        match base {
            BaseField5::Numeric(g) => {
                let ctx = st_context();
                Setting {
                    base: g.iter().map(|c| MPoly::constant(&ctx, c.clone())).collect(),
                    s: MPoly::var(&ctx, 0),
                    t: MPoly::var(&ctx, 1),
                    svar: 0,
                    tvar: 1,
                    numeric: true,
                    ctx,
                }
            }
            BaseField5::Symbolic => {
                let ctx = k_context();
                Setting {
                    base: (0..5).map(|i| MPoly::var(&ctx, i)).collect(),
                    s: MPoly::var(&ctx, 5),
                    t: MPoly::var(&ctx, 6),
                    svar: 5,
                    tvar: 6,
                    numeric: false,
                    ctx,
                }
            }
        }
    }

    /// A k-context polynomial specialized to this setting.
    fn specialize(&self, p: &MPoly) -> MPoly {
        let mut images = self.base.clone();
        images.push(self.s.clone());
        images.push(self.t.clone());
        p.substitute(&images).expect("k-context arity")
    }

    fn images(&self, closed: Option<&ClosedForms>) -> Result<RationalMap> {
        let zero = RatFunc::zero(&self.ctx);
        let mut c: Vec<RatFunc> = self.base.iter().cloned().map(RatFunc::from_poly).collect();
        c.extend([zero.clone(), RatFunc::from_poly(self.s.clone()), zero.clone(), zero]);
        c.push(RatFunc::from_poly(self.t.clone()));
        if let Some(f) = closed {
            c[G6_IX] = f.g6.clone();
            c[G8_IX] = f.g8.clone();
            c[G9_IX] = f.g9.clone();
        }
        RationalMap::new(&self.ctx, c)
    }
}

/// `g6, g8, g9` as rational functions of `s, t` over the base.
#[derive(Clone, Debug)]
pub struct ClosedForms {
    pub g6: RatFunc,
    pub g8: RatFunc,
    pub g9: RatFunc,
}

fn closed_forms(setting: &Setting) -> Result<ClosedForms> {
    let [f6, f8, f9] = closed_form_polys();
    let guard = |name: &'static str| {
        move |e: Error| match e {
            Error::DivisionByZeroPolynomial | Error::ZeroDenominator => {
                Error::NonGeneric(format!("denominator of {name} vanishes"))
            }
            other => other,
        }
    };
    let rf = |(n, d): &(MPoly, MPoly)| RatFunc::new_raw(n.clone(), d.clone()).expect("nonzero reference denominator");
    let map = setting.images(None)?;
    let g6 = map.compose_ratfunc(&rf(f6)).map_err(guard("g6"))?;
    let mut partial = ClosedForms {
        g6: g6.clone(),
        g8: RatFunc::zero(&setting.ctx),
        g9: RatFunc::zero(&setting.ctx),
    };
    let map = setting.images(Some(&partial))?;
    partial.g8 = map.compose_ratfunc(&rf(f8)).map_err(guard("g8"))?;
    partial.g9 = map.compose_ratfunc(&rf(f9)).map_err(guard("g9"))?;
    Ok(partial)
}

/// Evaluates the closed forms at a base point and values of `s, t` in any
/// exact field, returning `(g6, g8, g9)`.
pub fn solve_g8_g9_g6<S: Scalar>(base: &[Rational; 5], s: &S, t: &S) -> Result<(S, S, S)> {
    let [f6, f8, f9] = closed_form_polys();
    let mut point: Vec<S> = base.iter().map(S::from_rational).collect();
    point.extend([S::null(), s.clone(), S::null(), S::null(), t.clone()]);
    let quotient = |(n, d): &(MPoly, MPoly), point: &[S], name: &str| -> Result<S> {
        let inv = eval_poly(d, point)
            .inverse()
            .ok_or_else(|| Error::NonGeneric(format!("denominator of {name} vanishes")))?;
        Ok(eval_poly(n, point).times(&inv))
    };
    let g6 = quotient(f6, &point, "g6")?;
    point[G6_IX] = g6.clone();
    let g8 = quotient(f8, &point, "g8")?;
    let g9 = quotient(f9, &point, "g9")?;
    Ok((g6, g8, g9))
}

/// One equation `a·t + b = 0` obtained from a reduced cubic.
#[derive(Clone, Debug)]
pub struct CubeEquation {
    pub index: usize,
    pub a: MPoly,
    pub b: MPoly,
}

/// Everything derived from one base.
#[derive(Clone, Debug)]
pub struct QuadraticData {
    pub base: BaseField5,
    setting_ctx: Ctx,
    svar: usize,
    tvar: usize,
    numeric: bool,
    pub closed: ClosedForms,
    pub qq: MPoly,
    pub dd: MPoly,
    pub cube_list: Vec<CubeEquation>,
    /// The minimal equation, with the gcd of its coefficients removed over
    /// a numeric base.
    pub a11: MPoly,
    pub b11: MPoly,
    map: RationalMap,
}

/// Builds `qq`, `dd` and the equations linear in `t` over a base.
pub fn build_qq_dd(base: &BaseField5) -> Result<QuadraticData> {
    let setting = Setting::new(base);
    let k = k_context();
    let qq = setting.specialize(&poly(&k, QQ));
    let dd = setting.specialize(&poly(&k, DD));
    if dd.degree_in(setting.svar) < 2 {
        return Err(Error::DegenerateQuadratic("leading coefficient of dd vanishes".into()));
    }
    let closed = closed_forms(&setting)?;
    let map = setting.images(Some(&closed))?;
    let mut cube_list = Vec::new();
    for (j, cub) in numbered_cubic_basis()? {
        if CONSUMED.contains(j) {
            continue;
        }
        let (n, _) = map.compose_poly_raw(cub)?;
        let r = if setting.numeric {
            div_rem_in(&n, &qq, setting.tvar)?.1
        } else {
            pseudo_rem(&n, &qq, setting.tvar)?
        };
        let mut c = r.coefficients_in(setting.tvar).into_iter();
        let b = c.next().unwrap_or_else(|| MPoly::zero(&setting.ctx));
        let a = c.next().unwrap_or_else(|| MPoly::zero(&setting.ctx));
        cube_list.push(CubeEquation { index: *j, a, b });
    }
    let m = cube_list
        .iter()
        .find(|c| c.index == MINIMAL)
        .expect("minimal equation is kept");
    if m.a.is_zero() && m.b.is_zero() {
        return Err(Error::NonGeneric("minimal equation vanishes".into()));
    }
    // Over the symbolic base the multivariate gcd is out of reach; the pair
    // stays unreduced and `dd_divides_substitution` certifies coprimality.
    let (a11, b11) = if setting.numeric {
        let g = univar_gcd(&m.a, &m.b, setting.svar)?;
        (m.a.div_exact(&g).expect("gcd divides"), m.b.div_exact(&g).expect("gcd divides"))
    } else {
        (m.a.clone(), m.b.clone())
    };
    Ok(QuadraticData {
        base: base.clone(),
        setting_ctx: setting.ctx.clone(),
        svar: setting.svar,
        tvar: setting.tvar,
        numeric: setting.numeric,
        closed,
        qq,
        dd,
        cube_list,
        a11,
        b11,
        map,
    })
}

impl QuadraticData {
    /// The cubics consumed by the closed forms compose to zero.
    pub fn consumed_vanish(&self) -> Result<bool> {
        for (j, cub) in numbered_cubic_basis()? {
            if CONSUMED.contains(j) && !self.map.compose_poly_raw(cub)?.0.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `cub8 = −(g1 − g5)·qq / den(g6)` after the substitutions.
    pub fn cub8_factorization_holds(&self) -> Result<bool> {
        let cub8 = &numbered_cubic_basis()?.iter().find(|(j, _)| *j == 8).expect("kept").1;
        let lhs = self.map.compose_poly(cub8)?;
        let setting = Setting::new(&self.base);
        let g = g_context();
        let rhs_num = &setting_from_g(&setting, &poly(&g, CUB8_FACTOR))? * &self.qq;
        let rhs_den = setting_from_g(&setting, &poly(&g, G6.1))?;
        Ok(lhs.cross_eq(&RatFunc::new_raw(rhs_num, rhs_den)?))
    }

    /// Degrees of `a11` and `b11` in `s`.
    pub fn minimal_degrees(&self) -> (u32, u32) {
        (self.a11.degree_in(self.svar), self.b11.degree_in(self.svar))
    }

    /// All `D_jk = a_j b_k − a_k b_j` are divisible by `dd`.
    pub fn pairwise_divisible(&self) -> bool {
        let l = &self.cube_list;
        (0..l.len()).all(|j| {
            (j + 1..l.len()).all(|k| {
                let d = &(&l[j].a * &l[k].b) - &(&l[k].a * &l[j].b);
                d.is_zero() || d.div_exact(&self.dd).is_some()
            })
        })
    }

    /// `qq` with `t = −b11/a11`, times `a11²`, as a polynomial in `s`.
    pub fn substituted_qq(&self) -> MPoly {
        let c = self.qq.coefficients_in(self.tvar);
        let zero = MPoly::zero(&self.setting_ctx);
        let at = |k: usize| c.get(k).cloned().unwrap_or_else(|| zero.clone());
        let (a, b) = (&self.a11, &self.b11);
        &(&(&at(2) * &(b * b)) - &(&at(1) * &(a * b))) + &(&at(0) * &(a * a))
    }

    /// `dd` divides [`substituted_qq`](Self::substituted_qq) as polynomials
    /// in `s` over the base field.
    ///
    /// Over the symbolic base the pair is unreduced, so the substitution
    /// carries the square of the common factor `h` of `a11, b11`. The
    /// pseudo-remainder is then zero for the reduced pair as well provided
    /// `gcd(dd, a11) = 1`, which holds once it holds at one base point where
    /// both leading coefficients survive.
    pub fn dd_divides_substitution(&self) -> bool {
        let p = self.substituted_qq();
        if self.numeric {
            div_rem_in(&p, &self.dd, self.svar).is_ok_and(|(_, r)| r.is_zero())
        } else {
            pseudo_rem(&p, &self.dd, self.svar).is_ok_and(|r| r.is_zero()) && self.coprime_at_a_base_point()
        }
    }

    /// `gcd(dd, a11) = 1` at the first sample base where the leading
    /// coefficients in `s` of both do not vanish.
    fn coprime_at_a_base_point(&self) -> bool {
        let st = st_context();
        let (s, t) = (MPoly::var(&st, 0), MPoly::var(&st, 1));
        for base in [[2, -1, -2, -2, -8], [1, 2, 3, 5, 11], [3, -5, 7, 2, -4]] {
            let mut images: Vec<MPoly> =
                base.iter().map(|&c| MPoly::constant(&st, Rational::from_integer(c.into()))).collect();
            images.extend([s.clone(), t.clone()]);
            let (Ok(dd), Ok(a)) = (self.dd.substitute(&images), self.a11.substitute(&images)) else {
                return false;
            };
            let kept = |p: &MPoly, q: &MPoly| p.degree_in(0) == q.degree_in(self.svar);
            if kept(&dd, &self.dd) && kept(&a, &self.a11) {
                return univar_gcd(&dd, &a, 0).is_ok_and(|g| g.degree_in(0) == 0);
            }
        }
        false
    }

    /// The coefficients of `dd` in `s`, low degree first, for a numeric
    /// base.
    fn dd_coefficients(&self) -> Vec<Rational> {
        self.dd
            .coefficients_in(self.svar)
            .iter()
            .map(MPoly::constant_term)
            .collect()
    }
}

fn setting_from_g(setting: &Setting, p: &MPoly) -> Result<MPoly> {
    let map = setting.images(None)?;
    let (n, d) = map.compose_poly_raw(p)?;
    Ok(n.div_exact(&d).expect("polynomial image"))
}

/// One reconstructed point over the base.
#[derive(Clone, Debug, Serialize)]
pub struct FiberPoint {
    /// Coordinates scaled so that the first nonzero one is 1.
    pub coords: Vec<QuadExt>,
    /// The canonical integer point when all coordinates are rational.
    pub rational: Option<ProjPoint>,
    pub s: QuadExt,
    pub t: QuadExt,
    pub relations_hold: bool,
}

/// The fiber of the projection over a numeric base.
#[derive(Clone, Debug, Serialize)]
pub struct FiberSolution {
    #[serde(serialize_with = "crate::fiber::as_text")]
    pub discriminant: Rational,
    /// `d` with `Q(√d)` the field of definition; 1 when rational.
    #[serde(serialize_with = "crate::fiber::as_text")]
    pub d: BigInt,
    pub double_root: bool,
    pub points: Vec<FiberPoint>,
}

pub(crate) fn as_text<T: ToString, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn normalize_projective(v: &[QuadExt]) -> Result<Vec<QuadExt>> {
    let first = v.iter().find(|c| !c.is_null()).ok_or(Error::ZeroVector)?;
    let inv = first.inverse().ok_or(Error::ZeroVector)?;
    Ok(v.iter().map(|c| c.times(&inv)).collect())
}

/// Solves `dd = 0`, then `t` from the minimal equation, then the closed
/// forms, and extends the pivots to all forty coordinates.
pub fn reconstruct_fiber(base: &BaseField5) -> Result<FiberSolution> {
    let BaseField5::Numeric(g) = base else {
        return Err(Error::NonGeneric("reconstruction needs a numeric base".into()));
    };
    solve_fiber(&build_qq_dd(base)?, g)
}

fn solve_fiber(data: &QuadraticData, g: &[Rational; 5]) -> Result<FiberSolution> {
    let c = data.dd_coefficients();
    let (c0, c1, c2) = (&c[0], &c[1], &c[2]);
    let disc = c1 * c1 - Rational::from_integer(4.into()) * c2 * c0;
    let (root, d) = if disc.is_zero() {
        (QuadExt::rational(Rational::zero()), BigInt::one())
    } else {
        let (m, d) = square_split(&disc);
        if d.is_one() {
            (QuadExt::rational(m), d)
        } else {
            (QuadExt::new(Rational::zero(), m, &d), d)
        }
    };
    let two_a = QuadExt::rational(c2 * Rational::from_integer(2.into()));
    let inv_two_a = two_a.inverse().ok_or_else(|| Error::DegenerateQuadratic("dd".into()))?;
    let minus_b = QuadExt::rational(-c1);
    let roots = if disc.is_zero() {
        vec![minus_b.times(&inv_two_a)]
    } else {
        vec![
            minus_b.plus(&root).times(&inv_two_a),
            minus_b.minus(&root).times(&inv_two_a),
        ]
    };
    let pivots = &linear_relation_basis()?.pivots;
    let mut points = Vec::with_capacity(2);
    for s in roots {
        let at = [s.clone(), QuadExt::rational(Rational::zero())];
        let a = eval_poly(&data.a11, &at);
        let b = eval_poly(&data.b11, &at);
        let inv = a
            .inverse()
            .ok_or_else(|| Error::NonGeneric("a11 vanishes at a root of dd".into()))?;
        let t = QuadExt::rational(Rational::zero()).minus(&b.times(&inv));
        let (g6, g8, g9) = solve_g8_g9_g6(g, &s, &t)?;
        let mut gv: [QuadExt; 10] = std::array::from_fn(|i| {
            if i < 5 {
                QuadExt::rational(g[i].clone())
            } else {
                QuadExt::rational(Rational::zero())
            }
        });
        gv[G6_IX] = g6;
        gv[S_IX] = s.clone();
        gv[G8_IX] = g8;
        gv[G9_IX] = g9;
        gv[T_IX] = t.clone();
        let full = pivots.extend(&gv);
        let relations_hold = membership(&full)?.member;
        let rational = if full.iter().all(QuadExt::is_rational) {
            let r: Vec<Rational> = full.iter().map(|c| c.a.clone()).collect();
            Some(ProjPoint::new(&r)?)
        } else {
            None
        };
        points.push(FiberPoint {
            coords: normalize_projective(&full)?,
            rational,
            s,
            t,
            relations_hold,
        });
    }
    Ok(FiberSolution {
        discriminant: disc.clone(),
        d,
        double_root: disc.is_zero(),
        points,
    })
}

/// Outcome of projecting `φ(x)` to the base and lifting it back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub qq_vanishes: bool,
    pub dd_vanishes: bool,
    /// The rational fiber points are exactly `{φ(x), φ(s_r x)}`.
    pub matches: bool,
    /// Two distinct points are returned whenever `φ(x) ≠ φ(s_r x)`.
    pub distinct: bool,
    pub relations_hold: bool,
}

impl RoundTrip {
    pub fn passed(&self) -> bool {
        self.qq_vanishes && self.dd_vanishes && self.matches && self.distinct && self.relations_hold
    }
}

/// Reconstructs the fiber through `φ(x)` and compares it with
/// `{φ(x), φ(s_r x)}`; `qq` and `dd` are also evaluated at the point's own
/// `(s, t) = (y12, y19)`.
pub fn fiber_round_trip(x: &PointM) -> Result<RoundTrip> {
    let table = embedding_table();
    let v = table.eval_all(x.coords())?;
    let (base, scale) = BaseField5::from_point(&v)?;
    let BaseField5::Numeric(g) = &base else {
        unreachable!("numeric base")
    };
    let data = build_qq_dd(&base)?;
    let own = [&scale * &v[11], &scale * &v[18]];
    let qq_vanishes = data.qq.eval(&own)?.is_zero();
    let dd_vanishes = data.dd.eval(&own)?.is_zero();
    let sol = solve_fiber(&data, g)?;
    let p1 = eval_phi(x)?;
    let sx = generator_map(Generator::Sr).apply(x.coords())?;
    let p2 = ProjPoint::new(&table.eval_all(&sx)?)?;
    let mut got: Vec<ProjPoint> = sol.points.iter().filter_map(|p| p.rational.clone()).collect();
    got.sort();
    got.dedup();
    let mut expected = vec![p1.clone(), p2.clone()];
    expected.sort();
    expected.dedup();
    Ok(RoundTrip {
        qq_vanishes,
        dd_vanishes,
        matches: got == expected,
        distinct: p1 == p2 || (sol.points.len() == 2 && sol.points[0].coords != sol.points[1].coords),
        relations_hold: sol.points.iter().all(|p| p.relations_hold),
    })
}

/// Outcome of the divisibility check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityVerdict {
    pub bases_checked: usize,
    pub symbolic: bool,
}

/// Checks that `dd` divides `qq(s, −b11/a11)·a11²`, at `samples` random
/// numeric bases or once over the symbolic base.
pub fn divisibility_check(symbolic: bool, samples: usize, rng: &mut impl Rng) -> Result<DivisibilityVerdict> {
    if symbolic {
        let data = build_qq_dd(&BaseField5::Symbolic)?;
        if !data.dd_divides_substitution() {
            return Err(Error::DivisibilityFailure("symbolic base".into()));
        }
        return Ok(DivisibilityVerdict {
            bases_checked: 1,
            symbolic: true,
        });
    }
    let mut checked = 0;
    while checked < samples {
        let Ok(base) = BaseField5::numeric(std::array::from_fn(|_| small_rational(rng))) else {
            continue;
        };
        let data = match build_qq_dd(&base) {
            Ok(d) => d,
            Err(Error::NonGeneric(_)) | Err(Error::DegenerateQuadratic(_)) => continue,
            Err(e) => return Err(e),
        };
        if !data.dd_divides_substitution() {
            return Err(Error::DivisibilityFailure(format!("{base:?}")));
        }
        checked += 1;
    }
    Ok(DivisibilityVerdict {
        bases_checked: checked,
        symbolic: false,
    })
}
