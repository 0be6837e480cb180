use cubic_moduli::arith::{int, rat, Rational, Scalar};
use cubic_moduli::embedding::{eval_phi, PointM};
use cubic_moduli::fiber::*;
use cubic_moduli::relations::membership;
use cubic_moduli::sample::{random_point, rng};
use cubic_moduli::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn base(v: [i64; 5]) -> BaseField5 {
    BaseField5::numeric(v.map(int)).unwrap()
}

#[test]
fn elimination_over_a_sample_base() {
    let x = PointM::new([int(2), int(3), int(4), int(5)]).unwrap();
    let v = eval_phi(&x).unwrap().to_rationals();
    let (b, _) = BaseField5::from_point(&v).unwrap();
    assert_eq!(b, base([2, -1, -2, -2, -8]));
    let data = build_qq_dd(&b).unwrap();
    assert!(data.consumed_vanish().unwrap());
    assert!(data.cub8_factorization_holds().unwrap());
    assert!(data.pairwise_divisible());
    assert!(data.dd_divides_substitution());
}

#[test]
fn rational_fiber_contains_the_source_point() {
    let sol = reconstruct_fiber(&base([2, -1, -2, -2, -8])).unwrap();
    assert_eq!(sol.discriminant, int(746496));
    assert_eq!(sol.d, BigInt::from(1));
    assert!(!sol.double_root);
    assert_eq!(sol.points.len(), 2);
    let source = eval_phi(&PointM::new([int(2), int(3), int(4), int(5)]).unwrap()).unwrap();
    assert!(sol.points.iter().any(|p| p.rational.as_ref() == Some(&source)));
    for p in &sol.points {
        assert!(p.relations_hold);
        assert!(membership(&p.rational.as_ref().unwrap().to_rationals()).unwrap().member);
    }
}

#[test]
fn irrational_fibers_are_conjugate() {
    let sol = reconstruct_fiber(&base([1, 2, 3, 5, 11])).unwrap();
    assert_eq!(sol.d, BigInt::from(345));
    assert_eq!(sol.points.len(), 2);
    let [p, q] = [&sol.points[0], &sol.points[1]];
    assert!(p.rational.is_none() && q.rational.is_none());
    assert!(p.relations_hold && q.relations_hold);
    let conj: Vec<QuadExt> = p.coords.iter().map(QuadExt::conjugate).collect();
    assert_eq!(conj, q.coords);
    assert!(membership(&p.coords).unwrap().member);
}

#[test]
fn non_generic_bases_are_rejected() {
    assert!(matches!(
        BaseField5::numeric([0, 1, 2, 3, 4].map(int)),
        Err(Error::NonGeneric(_))
    ));
    assert!(matches!(
        BaseField5::numeric([1, 1, 2, 0, 4].map(int)),
        Err(Error::NonGeneric(_))
    ));
    assert!(matches!(
        BaseField5::numeric([3, 1, 2, 5, 3].map(int)),
        Err(Error::NonGeneric(_))
    ));
    assert!(matches!(
        reconstruct_fiber(&base([1, 2, 3, 5, 7])),
        Err(Error::NonGeneric(_))
    ));
    assert!(matches!(
        reconstruct_fiber(&BaseField5::Symbolic),
        Err(Error::NonGeneric(_))
    ));
}

#[test]
fn round_trips_at_seeded_points() {
    let mut r = rng(3);
    let mut passed = 0;
    let mut tried = 0;
    while passed < 50 {
        tried += 1;
        assert!(tried < 500, "too many non-generic samples");
        match fiber_round_trip(&random_point(&mut r)) {
            Ok(rt) => {
                assert!(rt.passed(), "{rt:?}");
                passed += 1;
            }
            Err(Error::NonGeneric(_) | Error::DegenerateQuadratic(_) | Error::Undefined) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn divisibility_at_seeded_bases() {
    let v = divisibility_check(false, 25, &mut rng(5)).unwrap();
    assert_eq!(
        v,
        DivisibilityVerdict {
            bases_checked: 25,
            symbolic: false
        }
    );
}

#[test]
fn divisibility_over_the_symbolic_base() {
    let data = build_qq_dd(&BaseField5::Symbolic).unwrap();
    assert!(data.dd_divides_substitution());
    let shifted = &data.substituted_qq() + &data.a11;
    assert!(!cubic_moduli::arith::gcd::pseudo_rem(&shifted, &data.dd, 5).unwrap().is_zero());
}

#[test]
fn square_split_examples() {
    assert_eq!(square_split(&int(746496)), (int(864), BigInt::from(1)));
    assert_eq!(square_split(&int(-12)), (int(2), BigInt::from(-3)));
    assert_eq!(square_split(&rat(5, 18)), (rat(1, 6), BigInt::from(10)));
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn squarefree(d: i64) -> bool {
    let d = d.abs();
    (2..=d).take_while(|p| p * p <= d).all(|p| d % (p * p) != 0)
}

proptest! {
    #[test]
    fn square_split_reconstructs(r in arb_rational()) {
        prop_assume!(r != int(0));
        let (m, d) = square_split(&r);
        prop_assert_eq!(&m * &m * Rational::from_integer(d.clone()), r);
        let d: i64 = d.try_into().unwrap();
        prop_assert!(squarefree(d));
    }

    #[test]
    fn quadratic_field_arithmetic(a in arb_rational(), b in arb_rational(), c in arb_rational(), e in arb_rational(), k in prop::sample::select(vec![2i64, 3, 5, -1, -7, 10])) {
        let d = BigInt::from(k);
        let (u, v) = (QuadExt::new(a, b, &d), QuadExt::new(c, e, &d));
        prop_assert_eq!(u.times(&v).norm(), u.norm() * v.norm());
        prop_assert_eq!(u.times(&u.conjugate()), QuadExt::rational(u.norm()));
        prop_assert_eq!(u.plus(&v).minus(&v), u.clone());
        if !u.is_null() {
            let one = u.times(&u.inverse().unwrap());
            prop_assert_eq!(one, QuadExt::rational(int(1)));
        }
    }
}
