use cubic_moduli::arith::gcd::{gcd, univar_gcd};
use cubic_moduli::arith::{int, rat, x_context, MPoly, QMatrix, RatFunc, Rational, RationalMap};
use cubic_moduli::embedding::{embedding_table, generator_map};
use cubic_moduli::roots::Generator;
use cubic_moduli::Error;
use proptest::prelude::*;

fn x(s: &str) -> MPoly {
    MPoly::parse(&x_context(), s).unwrap()
}

fn pt() -> Vec<Rational> {
    vec![int(2), int(3), int(4), int(5)]
}

/// A random polynomial in x1..x4 of degree at most 3 with small coefficients.
fn arb_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..2, 0u16..2), -5i64..=5), 0..6).prop_map(|terms| {
        let ctx = x_context();
        terms.into_iter().fold(MPoly::zero(&ctx), |acc, ((a, b, c, d), k)| {
            let m = MPoly::product(
                &ctx,
                [
                    MPoly::var(&ctx, 0).pow(a as u32),
                    MPoly::var(&ctx, 1).pow(b as u32),
                    MPoly::var(&ctx, 2).pow(c as u32),
                    MPoly::var(&ctx, 3).pow(d as u32),
                ]
                .iter(),
            );
            &acc + &m.scale(&int(k))
        })
    })
}

fn arb_point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d)), 4)
}

#[test]
fn reference_values_at_a_sample_point() {
    let t = embedding_table();
    assert_eq!(t.q().eval(&pt()).unwrap(), int(-12));
    assert_eq!(t.d2().eval(&pt()).unwrap(), int(-2));
    assert_eq!((t.d1() * t.q()).eval(&pt()).unwrap(), int(24));
    assert_eq!(x("x1*x4 - x2*x3 + 7").eval(&vec![int(0); 4]).unwrap(), int(7));
}

#[test]
fn trivial_ring_identities() {
    assert!((&x("x1") + &x("-x1")).is_zero());
    assert_eq!(&x("x1*x4 - x2*x3") * &MPoly::one(&x_context()), x("x1*x4 - x2*x3"));
}

#[test]
fn contexts_do_not_mix() {
    let z = MPoly::parse(&cubic_moduli::arith::z_context(), "z1").unwrap();
    assert!(matches!(x("x1").checked_add(&z), Err(Error::ContextMismatch(..))));
    assert!(matches!(x("x1").eval(&[int(1)]), Err(Error::ArityMismatch { .. })));
}

#[test]
fn composition_with_the_first_generator() {
    let s1 = generator_map(Generator::S1).map();
    let t = embedding_table();
    let r = s1.compose_poly(t.y(1)).unwrap();
    // y1∘s1 = −(x1 x2)^(−3) y6.
    let expected = RatFunc::new(-t.y(6), x("x1^3*x2^3")).unwrap();
    assert!(r.cross_eq(&expected));
    assert_eq!(r.eval(&pt()).unwrap(), rat(1, 18));
    let r2 = s1.compose_poly(t.y(2)).unwrap();
    let c1y2 = RatFunc::new(t.y(2).clone(), x("x1^3*x2^3")).unwrap();
    assert!((r2.num() * c1y2.den() - c1y2.num() * r2.den()).is_zero());
    let id = RationalMap::identity(&x_context());
    assert!(id
        .compose_poly(t.y(7))
        .unwrap()
        .cross_eq(&RatFunc::from_poly(t.y(7).clone())));
}

#[test]
fn canonical_form_examples() {
    let r = RatFunc::new(x("2*x1"), x("4*x1^2")).unwrap();
    assert_eq!((r.num(), r.den()), (&x("1"), &x("2*x1")));
    let c = r.canonical();
    assert_eq!((c.num(), c.den()), (r.num(), r.den()));
    assert!(matches!(
        RatFunc::new(x("1"), MPoly::zero(&x_context())),
        Err(Error::ZeroDenominator)
    ));
}

#[test]
fn rank_and_nullspace_examples() {
    let id = QMatrix::identity(3);
    assert_eq!(id.rank_nullspace(), (3, vec![]));
    let m = QMatrix::from_i64_rows(&[&[1, -1, 1, -1]]);
    let (rank, null) = m.rank_nullspace();
    assert_eq!((rank, null.len()), (1, 3));
    for v in &null {
        assert!(m.mul_vec(v).iter().all(|c| *c == int(0)));
    }
}

#[test]
fn gcd_examples() {
    let s = cubic_moduli::arith::st_context();
    let p = |t: &str| MPoly::parse(&s, t).unwrap();
    assert_eq!(univar_gcd(&p("s^2 - 1"), &p("s - 1"), 0).unwrap(), p("s - 1"));
    assert_eq!(univar_gcd(&p("2*s + 4"), &MPoly::zero(&s), 0).unwrap(), p("s + 2"));
    let f = x("x1 - x2*x3");
    let g = gcd(&(&f * &x("x4 + 1")), &(&f * &x("x1^2 - 3")));
    assert_eq!(g.integer_primitive().1, f.integer_primitive().1);
}

/// Determinant by cofactor expansion, independent of the elimination code.
fn laplace(m: &[Vec<i64>]) -> i64 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| *v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * laplace(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

fn rank_by_minors(m: &[Vec<i64>]) -> usize {
    let (r, c) = (m.len(), m[0].len());
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            subsets(r, k).iter().any(|rows| {
                subsets(c, k).iter().any(|cols| {
                    let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                    laplace(&sub) != 0
                })
            })
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), v in arb_point()) {
        let (a, b) = (p.eval(&v).unwrap(), q.eval(&v).unwrap());
        prop_assert_eq!((&p * &q).eval(&v).unwrap(), &a * &b);
        prop_assert_eq!((&p + &q).eval(&v).unwrap(), &a + &b);
    }

    #[test]
    fn composition_commutes_with_evaluation(p in arb_poly(), v in arb_point()) {
        let gm = generator_map(Generator::S3);
        let Ok(image) = gm.apply(&v) else { return Ok(()) };
        let composed = gm.map().compose_poly(&p).unwrap();
        if let Ok(value) = composed.eval(&v) {
            prop_assert_eq!(value, p.eval(&image).unwrap());
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_value_preserving(
        p in arb_poly(), q in arb_poly(), f in arb_poly(), v in arb_point()
    ) {
        prop_assume!(!q.is_zero() && !f.is_zero());
        let r = RatFunc::new_raw(&p * &f, &q * &f).unwrap();
        let c = r.canonical();
        let cc = c.canonical();
        prop_assert_eq!((cc.num(), cc.den()), (c.num(), c.den()));
        prop_assert!(c.cross_eq(&r));
        if let (Ok(a), Ok(b)) = (r.eval(&v), c.eval(&v)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn rank_agrees_with_minor_expansion(
        rows in 1usize..=5, cols in 1usize..=5, entries in prop::collection::vec(-2i64..=2, 25)
    ) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * 5..i * 5 + cols].to_vec()).collect();
        let refs: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
        let q = QMatrix::from_i64_rows(&refs);
        let (rank, null) = q.rank_nullspace();
        prop_assert_eq!(rank, rank_by_minors(&m));
        prop_assert_eq!(null.len(), cols - rank);
        for v in &null {
            prop_assert!(q.mul_vec(v).iter().all(|c| *c == int(0)));
        }
        if rows == cols {
            prop_assert_eq!(q.determinant(), int(laplace(&m)));
        }
    }
}
