use std::collections::HashSet;

use cubic_moduli::arith::{int, rat, Rational};
use cubic_moduli::embedding::{eval_phi, PointM};
use cubic_moduli::relations::*;
use cubic_moduli::roots::Generator;
use cubic_moduli::sample::{random_point, rng, small_rational};
use cubic_moduli::Error;
use proptest::prelude::*;

fn pt() -> Vec<Rational> {
    eval_phi(&PointM::new([int(2), int(3), int(4), int(5)]).unwrap())
        .unwrap()
        .to_rationals()
}

#[test]
fn linear_orbit_and_rank() {
    let sys = linear_relation_basis().unwrap();
    assert_eq!(sys.forms.len(), 270);
    assert_eq!(sys.rank, LINEAR_RANK);
    assert!(sys.forms.contains(&LinearForm40::seed()));
    assert!(sys.pivots.reference_mismatches().is_empty());
}

#[test]
fn linear_orbit_is_closed() {
    let forms: HashSet<&LinearForm40> = linear_relation_basis().unwrap().forms.iter().collect();
    for g in Generator::ALL {
        let p = g.signed_perm();
        for f in &forms {
            let image = LinearForm40::new(&p.act_vector(&f.to_rationals())).unwrap();
            assert!(forms.contains(&image), "{g}");
        }
    }
}

#[test]
fn linear_forms_vanish_identically() {
    for f in &linear_relation_basis().unwrap().forms {
        assert!(vanishes_on_phi(&f.to_poly()).unwrap(), "{f}");
    }
    assert!(!vanishes_on_phi(
        &LinearForm40::new(&{
            let mut v = vec![int(0); 40];
            v[0] = int(1);
            v
        })
        .unwrap()
        .to_poly()
    )
    .unwrap());
}

#[test]
fn pivot_extension_recovers_the_point() {
    let sys = linear_relation_basis().unwrap();
    let mut r = rng(11);
    for _ in 0..20 {
        let v = eval_phi(&random_point(&mut r)).unwrap().to_rationals();
        let g: [Rational; 10] = std::array::from_fn(|k| v[PIVOTS[k] - 1].clone());
        assert_eq!(sys.pivots.extend(&g), v);
    }
}

#[test]
fn cubic_orbit() {
    let cubics = cubic_relation_set().unwrap();
    assert_eq!(cubics.len(), 240);
    assert!(cubics.contains(&TwoTermCubic::seed()));
    for c in cubics {
        assert_eq!(&TwoTermCubic::from_poly(&c.to_poly()).unwrap(), c);
        assert!(vanishes_on_phi(&c.to_poly()).unwrap(), "{c}");
    }
}

#[test]
fn reduced_cubics_span_thirty_dimensions() {
    assert_eq!(reduced_cubics().unwrap().span.dimension(), CUBIC_COUNT);
    let basis = numbered_cubic_basis().unwrap();
    assert_eq!(
        basis.iter().map(|(j, _)| *j).collect::<Vec<_>>(),
        (1..=30).collect::<Vec<_>>()
    );
    let span = &reduced_cubics().unwrap().span;
    for j in reference_cubic_indices() {
        let c = reference_cubic(j).unwrap();
        assert!(span.contains(&c), "cubic {j}");
        assert!(vanishes_on_phi(&c).unwrap(), "cubic {j}");
    }
    for g in Generator::ALL {
        assert!(span_is_stable_under(g).unwrap(), "{g}");
    }
}

#[test]
fn membership_examples() {
    let v = membership(&pt()).unwrap();
    assert!(v.member);
    assert_eq!((v.linear_checked, v.cubic_checked), (270, 240));
    let mut e1 = vec![int(0); 40];
    e1[0] = int(1);
    assert!(!membership(&e1).unwrap().member);
    assert!(matches!(membership(&vec![int(0); 40]), Err(Error::ZeroVector)));
    assert!(matches!(
        membership(&vec![int(1); 39]),
        Err(Error::ArityMismatch { .. })
    ));
}

#[test]
fn generic_points_of_the_linear_span_fail_a_cubic() {
    let sys = linear_relation_basis().unwrap();
    let g: [Rational; 10] = std::array::from_fn(|k| rat(k as i64 * k as i64 + 1, 3));
    let v = membership(&sys.pivots.extend(&g)).unwrap();
    assert!(!v.member);
    assert!(matches!(v.violated, Some(Violation::Cubic(_))));
    assert_eq!(v.linear_checked, 270);
}

#[test]
fn invalid_cubics_are_rejected() {
    assert!(TwoTermCubic::new([1, 1, 2], [3, 4, 5]).is_err());
    assert!(TwoTermCubic::new([1, 2, 3], [3, 2, 1]).is_err());
    assert!(TwoTermCubic::new([1, 2, 41], [3, 4, 5]).is_err());
    assert_eq!(
        TwoTermCubic::new([20, 14, 4], [21, 13, 3]).unwrap(),
        TwoTermCubic::seed()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn images_are_members(seed in any::<u64>()) {
        let x = random_point(&mut rng(seed));
        prop_assert!(membership(&eval_phi(&x).unwrap().to_rationals()).unwrap().member);
    }

    #[test]
    fn perturbed_images_are_not_members(seed in any::<u64>(), k in 0usize..40) {
        let mut r = rng(seed);
        let mut v = eval_phi(&random_point(&mut r)).unwrap().to_rationals();
        let bump = small_rational(&mut r);
        prop_assume!(bump != int(0));
        v[k] += bump;
        prop_assert!(!membership(&v).unwrap().member);
    }
}
