use cubic_moduli::arith::{int, rat};
use cubic_moduli::degenerate::*;
use cubic_moduli::embedding::{embedding_table, phi_from_matrix_raw, Matrix36, PointM, ProjPoint};
use cubic_moduli::relations::membership;
use cubic_moduli::Error;
use proptest::prelude::*;

fn z(a: i64, b: i64, c: i64) -> PointZ {
    PointZ::new([int(a), int(b), int(c)]).unwrap()
}

#[test]
fn parametrization_lands_on_the_quadric() {
    let x = z_to_x(&z(2, 3, 5)).unwrap();
    assert_eq!(x, [rat(1, 2), rat(1, 4), rat(2, 3), rat(2, 5)]);
    assert_eq!(embedding_table().q().eval(&x).unwrap(), int(0));
    assert!(matches!(PointM::new(x.clone()), Err(Error::DegeneratePoint)));
    let raw = embedding_table().eval_all(&x).unwrap();
    assert!(raw[..10].iter().all(|v| *v == int(0)));
    assert_eq!(ProjPoint::new(&raw).unwrap(), prolonged_phi(&z(2, 3, 5)).unwrap());
}

#[test]
fn degenerate_z_are_rejected() {
    for bad in [[0, 2, 3], [2, 1, 3], [2, 3, 2]] {
        assert!(matches!(PointZ::new(bad.map(int)), Err(Error::DegenerateZ(_))));
    }
    assert!(PointZ::parse("2,3").is_err());
}

#[test]
fn prolongation_table_identities() {
    let r = verify_prolong_table().unwrap();
    assert!(r.quadric_vanishes && r.duplicates_hold);
    assert_eq!((r.zero_rows, r.table_rows), (10, 30));
    assert!(rows_match_minor_products());
    assert_eq!(minor_products().len(), 15);
    assert_eq!(span_check(), 5);
}

#[test]
fn prolonged_point_example() {
    let p = prolonged_phi(&z(2, 3, 5)).unwrap();
    assert!(p.coords()[..10].iter().all(|c| *c == 0.into()));
    assert!(p.coords()[10..].iter().all(|c| *c != 0.into()));
    assert!(membership(&p.to_rationals()).unwrap().member);
}

#[test]
fn limit_is_independent_of_the_direction() {
    let one = LimitDirection([1, 1, 1, 1].map(int));
    let base = limit_point(&one).unwrap();
    assert!(membership(&base.to_rationals()).unwrap().member);
    for xi in [[2, 3, 5, 7], [1, 2, 3, 4], [-1, 5, 2, 7], [3, -2, 1, 0]] {
        assert_eq!(limit_point(&LimitDirection(xi.map(int))).unwrap(), base);
    }
    for xi in [[0, 0, 0, 0], [0, -1, 1, 0]] {
        assert!(
            matches!(
                limit_point(&LimitDirection(xi.map(int))),
                Err(Error::InadmissibleDirection)
            ),
            "{xi:?}"
        );
    }
}

fn arb_z() -> impl Strategy<Value = PointZ> {
    prop::array::uniform3((-20i64..=20, 1i64..=5).prop_map(|(n, d)| rat(n, d)))
        .prop_filter_map("degenerate", |v| PointZ::new(v).ok())
}

fn arb_direction() -> impl Strategy<Value = LimitDirection> {
    prop::array::uniform4((-9i64..=9, 1i64..=3).prop_map(|(n, d)| rat(n, d))).prop_map(LimitDirection)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn prolongation_matches_minor_products_on_the_conic(z in arb_z()) {
        let a = Matrix36::normalized(&z_to_x(&z).unwrap());
        prop_assert_eq!(a.conic_determinant(), int(0));
        let expected = ProjPoint::new(&phi_from_matrix_raw(&a)).unwrap();
        prop_assert_eq!(prolonged_phi(&z).unwrap(), expected);
    }

    #[test]
    fn prolonged_points_agree_with_the_table_on_the_quadric(z in arb_z()) {
        let raw = embedding_table().eval_all(&z_to_x(&z).unwrap()).unwrap();
        prop_assert_eq!(ProjPoint::new(&raw).unwrap(), prolonged_phi(&z).unwrap());
    }

    #[test]
    fn prolonged_points_are_members(z in arb_z()) {
        prop_assert!(membership(&prolonged_phi(&z).unwrap().to_rationals()).unwrap().member);
    }

    #[test]
    fn admissible_limits_agree(xi in arb_direction()) {
        let base = limit_point(&LimitDirection([1, 1, 1, 1].map(int))).unwrap();
        if let Ok(p) = limit_point(&xi) {
            prop_assert_eq!(p, base);
        }
    }
}
