use std::collections::HashSet;

use cubic_moduli::arith::{int, QMatrix, Rational};
use cubic_moduli::relations::LinearForm40;
use cubic_moduli::roots::*;

fn root(s: &str) -> RootVec {
    RootName::parse(s).unwrap().vector()
}

fn label(s: &str) -> Label {
    s.parse().unwrap()
}

fn generators() -> Vec<SignedPerm40> {
    Generator::COXETER.iter().map(Generator::signed_perm).collect()
}

#[test]
fn catalog_counts_and_norms() {
    assert_eq!(root_catalog().len(), 36);
    assert!(root_catalog().iter().all(|(_, v)| v.norm2() == 2));
    // Doubled coordinates: (5 + 3) / 4 = 2.
    assert_eq!(RootName::R.vector().norm2(), 2);
    for i in 1..=6 {
        for j in i + 1..=6 {
            assert_eq!(RootName::R.vector().dot(&RootName::Pair(i, j).vector()), 0);
        }
    }
}

#[test]
fn simple_roots_are_independent() {
    let rows = simple_roots()
        .iter()
        .map(|n| n.vector().0.iter().map(|&c| int(c as i64)).collect())
        .collect();
    assert_eq!(QMatrix::from_rows(rows).rank(), 6);
}

#[test]
fn orthogonality_pattern() {
    let (checked, failures) = orthogonality_failures();
    assert_eq!(checked, 270);
    assert!(failures.is_empty());
}

#[test]
fn reflections_permute_indices() {
    assert_eq!(
        find_root(&reflect(&root("r12"), &root("r13")).unwrap()).unwrap().0,
        RootName::Pair(2, 3)
    );
    assert_eq!(
        find_root(&reflect(&root("r123"), &root("r")).unwrap()).unwrap().0,
        RootName::Triple(4, 5, 6)
    );
    for (_, v) in root_catalog() {
        for (_, u) in root_catalog() {
            let w = reflect(v, u).unwrap();
            assert_eq!(w.norm2(), 2);
            assert!(find_root(&w).is_some());
        }
    }
}

#[test]
fn triples_of_the_two_label_kinds() {
    let key = |names: [&str; 3]| {
        let mut k = names.map(|n| root(n).sign_normalized());
        k.sort_unstable();
        k
    };
    let split = label("(123,456)").triple().key();
    assert!(split.contains(&key(["r", "r123", "r456"])));
    let cycle = label("(12,34,56)").triple().key();
    assert!(cycle.contains(&key(["r12", "r234", "r134"])));
    for t in label_catalog().triples() {
        assert_eq!(t.verify(), Ok(()));
    }
}

#[test]
fn every_root_lies_in_ten_triples() {
    let mut counts = vec![0; 36];
    for t in label_catalog().triples() {
        for v in t.systems.iter().flatten() {
            let (name, _) = find_root(v).unwrap();
            counts[root_catalog().iter().position(|(n, _)| *n == name).unwrap()] += 1;
        }
    }
    assert!(counts.iter().all(|&c| c == 10), "{counts:?}");
}

#[test]
fn label_action_examples() {
    let act = |g: &str, l: &str| label_action(&root(g), &label(l)).unwrap();
    assert_eq!(act("r12", "(12,34,56)"), label("(12,34,56)"));
    assert_eq!(act("r12", "(156,234)"), label("(134,256)"));
    assert_eq!(act("r123", "(156,234)"), label("(14,56,23)"));
}

#[test]
fn label_action_matches_reflected_triples() {
    for (_, g) in root_catalog() {
        for l in label_catalog().labels() {
            let image = label_action(g, l).unwrap();
            assert_eq!(image.triple().key(), l.triple().reflect(g).unwrap().key());
        }
    }
}

#[test]
fn signed_permutation_examples() {
    let s2 = Generator::S2.signed_perm();
    assert_eq!(s2.apply(2), (5, -1));
    assert_eq!(s2.apply(3), (3, 1));
    assert!(Generator::S4.signed_perm().pow(2).is_identity());
    assert_eq!(Generator::S6.signed_perm().apply(1), (1, 1));
    for g in Generator::ALL {
        let p = g.signed_perm();
        for a in 0..40 {
            let (b, e) = p.apply(a);
            assert_eq!(e == 1, a == b, "{g} y{}", a + 1);
        }
    }
}

#[test]
fn coxeter_relations_of_signed_permutations() {
    for a in Generator::COXETER {
        for b in Generator::COXETER {
            let m = a.coxeter_exponent(&b);
            let p = a.signed_perm().compose(&b.signed_perm());
            assert!(p.pow(m).is_identity(), "{a}{b}");
            assert!((1..m).all(|k| !p.pow(k).is_identity()), "{a}{b}");
        }
    }
}

#[test]
fn group_order_and_symmetric_subgroup() {
    let group = enumerate_group(&generators(), DEFAULT_BUDGET).unwrap();
    assert_eq!(group.len(), 51840);
    assert!(matches!(
        enumerate_group(&generators(), 1000),
        Err(cubic_moduli::Error::BudgetExceeded(1000))
    ));
    let split: Vec<usize> = (0..40).filter(|&i| label_catalog().label(i).is_split()).collect();
    let images: HashSet<Vec<u8>> = enumerate_group(&generators()[..5], DEFAULT_BUDGET)
        .unwrap()
        .iter()
        .map(|g| split.iter().map(|&i| g.unsigned()[i]).collect())
        .collect();
    assert_eq!(images.len(), 720);
}

#[test]
fn orbits() {
    let mut e1: Vec<Rational> = vec![int(0); 40];
    e1[0] = int(1);
    let orbit1 = orbit(&e1, &generators());
    assert_eq!(orbit1.len(), 40);
    let zero = vec![int(0); 40];
    assert_eq!(orbit(&zero, &generators()), vec![zero]);
    let seed = LinearForm40::seed().to_rationals();
    let forms = orbit(&seed, &generators());
    assert_eq!(QMatrix::from_rows(forms).rank(), 30);
    assert_eq!(label_orbit(&label("(123,456)")).unwrap().len(), 40);
}
