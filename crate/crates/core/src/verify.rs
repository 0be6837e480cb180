//! The verification suite: named checks grouped in sections and a report
//! with the derived constants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::arith::{QMatrix, Rational};
use crate::degenerate::{
    limit_point, prolonged_phi, rows_match_minor_products, span_check, verify_prolong_table, LimitDirection, PointZ,
};
use crate::embedding::{
    braid_relation_holds, embedding_table, eval_phi, generator_map, phi_from_matrix, phi_from_matrix_raw,
    projection_p4, verify_equivariance, Matrix36, PointM, ProjPoint,
};
use crate::error::{Error, Result};
use crate::fiber::{build_qq_dd, divisibility_check, fiber_round_trip, BaseField5};
use crate::relations::{
    cubic_relation_set, linear_relation_basis, membership, reduced_cubics, reference_cubic, reference_cubic_indices,
    span_is_stable_under, vanishes_on_phi, LINEAR_RANK,
};
use crate::roots::{
    closure, enumerate_group, label_catalog, orbit, orthogonality_failures, root_catalog, simple_roots, Generator,
    DEFAULT_BUDGET,
};
use crate::sample::{random_point, rng, small_rational};

/// Report format version.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

/// Checks sorted by name, with the constants computed along the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub checks: Vec<Check>,
    pub derived: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            checks: Vec::new(),
            derived: BTreeMap::new(),
        }
    }

    /// True iff every check that ran passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, outcome: Result<(bool, String)>) {
        let (status, details) = match outcome {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            details,
        });
    }

    fn skip(&mut self, name: &str, details: &str) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skipped,
            details: details.into(),
        });
    }

    fn derive(&mut self, name: &str, value: usize) {
        self.derived.insert(name.into(), value as u64);
    }

    fn finish(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }
}

/// Groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Section {
    Roots,
    Group,
    Coxeter,
    Equivariance,
    Linear,
    Cubic,
    Fiber,
    Prolong,
    Limit,
    Consistency,
    Injectivity,
}

impl Section {
    pub const ALL: [Section; 11] = [
        Section::Roots,
        Section::Group,
        Section::Coxeter,
        Section::Equivariance,
        Section::Linear,
        Section::Cubic,
        Section::Fiber,
        Section::Prolong,
        Section::Limit,
        Section::Consistency,
        Section::Injectivity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Section::Roots => "roots",
            Section::Group => "group",
            Section::Coxeter => "coxeter",
            Section::Equivariance => "equivariance",
            Section::Linear => "linear",
            Section::Cubic => "cubic",
            Section::Fiber => "fiber",
            Section::Prolong => "prolong",
            Section::Limit => "limit",
            Section::Consistency => "consistency",
            Section::Injectivity => "injectivity",
        }
    }

    fn seed_offset(&self) -> u64 {
        Section::ALL.iter().position(|s| s == self).expect("listed") as u64
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = Error;

    fn from_str(s: &str) -> Result<Section> {
        Section::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown section `{s}`")))
    }
}

/// Options shared by all sections.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Overrides every per-check sample count.
    pub samples: Option<usize>,
    /// Runs the exhaustive and symbolic variants.
    pub long: bool,
}

impl VerifyOptions {
    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

/// Runs the given sections and returns the sorted report.
pub fn run(command: &str, sections: &[Section], opts: &VerifyOptions) -> Report {
    let mut report = Report::new(command);
    for s in sections {
        let mut r = rng(opts.seed.wrapping_mul(1_000_003).wrapping_add(s.seed_offset()));
        match s {
            Section::Roots => roots(&mut report),
            Section::Group => group(&mut report),
            Section::Coxeter => coxeter(&mut report),
            Section::Equivariance => equivariance(&mut report),
            Section::Linear => linear(&mut report),
            Section::Cubic => cubic(&mut report, opts, &mut r),
            Section::Fiber => fiber(&mut report, opts, &mut r),
            Section::Prolong => prolong(&mut report, opts, &mut r),
            Section::Limit => limit(&mut report, opts, &mut r),
            Section::Consistency => consistency(&mut report, opts, &mut r),
            Section::Injectivity => injectivity(&mut report, opts, &mut r),
        }
    }
    report.finish();
    report
}

fn roots(report: &mut Report) {
    let cat = root_catalog();
    let norms = cat.iter().all(|(_, v)| v.norm2() == 2 && v.in_e6_space());
    report.push(
        "roots.count",
        Ok((
            cat.len() == 36 && norms,
            format!("{} positive roots of squared norm 2", cat.len()),
        )),
    );
    let (checked, failures) = orthogonality_failures();
    report.push(
        "roots.orthogonality",
        Ok((
            failures.is_empty(),
            format!("{checked} pairs, {} failures", failures.len()),
        )),
    );
    let simple = QMatrix::from_rows(
        simple_roots()
            .iter()
            .map(|n| n.vector().0.iter().map(|&c| Rational::from_integer(c.into())).collect())
            .collect(),
    );
    let rank = simple.rank();
    report.push("roots.simple_independent", Ok((rank == 6, format!("rank {rank}"))));

    let labels = label_catalog();
    let split = labels.labels().iter().filter(|l| l.is_split()).count();
    report.push(
        "labels.count",
        Ok((
            labels.labels().len() == 40 && split == 10,
            format!("{} labels, {split} split", labels.labels().len()),
        )),
    );
    let mut counts = vec![0usize; cat.len()];
    for t in labels.triples() {
        for s in &t.systems {
            for v in s {
                let i = cat
                    .iter()
                    .position(|(_, r)| *r == *v || r.neg() == *v)
                    .expect("catalog root");
                counts[i] += 1;
            }
        }
    }
    report.push(
        "labels.root_multiplicity",
        Ok((counts.iter().all(|&c| c == 10), "every root lies in 10 triples".into())),
    );
    let mut e1 = vec![Rational::zero(); 40];
    e1[0] = Rational::one();
    let orbit_size = orbit(&e1, &group_generators()).len();
    report.push(
        "labels.transitive",
        Ok((orbit_size == 40, format!("orbit of y1 has {orbit_size} coordinates"))),
    );
}

fn group_generators() -> Vec<crate::roots::SignedPerm40> {
    Generator::COXETER.iter().map(Generator::signed_perm).collect()
}

fn group(report: &mut Report) {
    match enumerate_group(&group_generators(), DEFAULT_BUDGET) {
        Ok(g) => {
            report.derive("group_order", g.len());
            report.push("group.order", Ok((g.len() == 51840, format!("order {}", g.len()))));
        }
        Err(e) => report.push("group.order", Err(e)),
    }
    let split: Vec<usize> = (0..40).filter(|&i| label_catalog().label(i).is_split()).collect();
    let restrict = |g: &Generator| -> Vec<u8> {
        let u = g.signed_perm().unsigned();
        split
            .iter()
            .map(|&i| {
                split
                    .iter()
                    .position(|&j| j == u[i] as usize)
                    .expect("splits are preserved") as u8
            })
            .collect()
    };
    let gens: Vec<Vec<u8>> = Generator::COXETER[..5].iter().map(restrict).collect();
    let identity: Vec<u8> = (0..split.len() as u8).collect();
    let sub = closure(
        identity,
        &gens,
        |a, b| b.iter().map(|&i| a[i as usize]).collect(),
        DEFAULT_BUDGET,
    );
    report.push(
        "group.symmetric_subgroup",
        sub.map(|s| {
            (
                s.len() == 720,
                format!("s1..s5 act on the split labels as a group of order {}", s.len()),
            )
        }),
    );
}

fn coxeter(report: &mut Report) {
    let mut signed_ok = true;
    let mut birational = Ok(true);
    let mut pairs = 0;
    for (i, a) in Generator::COXETER.iter().enumerate() {
        for b in &Generator::COXETER[i..] {
            pairs += 1;
            let m = a.coxeter_exponent(b);
            signed_ok &= a.signed_perm().compose(&b.signed_perm()).pow(m).is_identity();
            birational = birational.and_then(|ok| Ok(ok && braid_relation_holds(*a, *b)?));
        }
    }
    report.push("coxeter.signed", Ok((signed_ok, format!("{pairs} generator pairs"))));
    report.push(
        "coxeter.birational",
        birational.map(|ok| (ok, format!("{pairs} generator pairs, exact rational maps"))),
    );
    report.push(
        "coxeter.sr_involution",
        generator_map(Generator::Sr)
            .is_involution()
            .map(|ok| (ok, "sr composed with itself is the identity".into())),
    );
}

fn equivariance(report: &mut Report) {
    let mut rows = 0;
    for g in Generator::ALL {
        let outcome = verify_equivariance(g).map(|r| {
            rows += r.rows.len();
            (
                r.all_match() && r.rows.len() == 40,
                format!(
                    "{} identities, {} reference and {} combinatorial mismatches",
                    r.rows.len(),
                    r.reference_mismatches.len(),
                    r.combinatorial_mismatches.len()
                ),
            )
        });
        report.push(&format!("equivariance.{g}"), outcome);
    }
    report.derive("equivariance_identities", rows);
}

fn linear(report: &mut Report) {
    match linear_relation_basis() {
        Ok(sys) => {
            report.derive("linear_orbit", sys.forms.len());
            report.derive("linear_rank", sys.rank);
            report.push(
                "linear.rank",
                Ok((
                    sys.rank == LINEAR_RANK,
                    format!("rank {} from {} orbit forms", sys.rank, sys.forms.len()),
                )),
            );
            let bad = sys.pivots.reference_mismatches();
            report.push(
                "linear.pivot_expressions",
                Ok((bad.is_empty(), format!("30 expressions, mismatches at {bad:?}"))),
            );
        }
        Err(e) => {
            report.push("linear.rank", Err(e.clone()));
            report.push("linear.pivot_expressions", Err(e));
        }
    }
}

fn cubic(report: &mut Report, opts: &VerifyOptions, rng: &mut impl Rng) {
    let orbit = match cubic_relation_set() {
        Ok(o) => o,
        Err(e) => return report.push("cubic.count", Err(e)),
    };
    report.derive("cubic_orbit", orbit.len());
    let red = match reduced_cubics() {
        Ok(r) => r,
        Err(e) => return report.push("cubic.count", Err(e)),
    };
    report.derive("cubic_count", red.selected.len());
    report.push(
        "cubic.count",
        Ok((
            red.selected.len() == 30,
            format!("{} independent reduced cubics", red.selected.len()),
        )),
    );
    let refs: Vec<usize> = reference_cubic_indices().collect();
    let outside: Vec<usize> = refs
        .iter()
        .copied()
        .filter(|&j| !red.span.contains(&reference_cubic(j).expect("listed")))
        .collect();
    report.push(
        "cubic.reference_span",
        Ok((
            outside.is_empty(),
            format!("{} reference cubics, outside the span: {outside:?}", refs.len()),
        )),
    );
    let vanish = refs.iter().try_fold(Vec::new(), |mut bad, &j| {
        if !vanishes_on_phi(&reference_cubic(j).expect("listed"))? {
            bad.push(j);
        }
        Ok::<_, Error>(bad)
    });
    report.push(
        "cubic.reference_vanish",
        vanish.map(|bad| {
            (
                bad.is_empty(),
                format!("{} reference cubics, nonvanishing: {bad:?}", refs.len()),
            )
        }),
    );
    let chosen: Vec<usize> = if opts.long {
        (0..orbit.len()).collect()
    } else {
        let n = opts.count(24).min(orbit.len());
        rand::seq::index::sample(rng, orbit.len(), n).into_vec()
    };
    let vanish = chosen.iter().try_fold(0, |bad, &i| {
        Ok::<_, Error>(bad + usize::from(!vanishes_on_phi(&orbit[i].to_poly())?))
    });
    report.push(
        "cubic.orbit_vanish",
        vanish.map(|bad| {
            (
                bad == 0,
                format!("{} orbit cubics composed with phi, {bad} nonzero", chosen.len()),
            )
        }),
    );
    let stable = Generator::ALL
        .iter()
        .try_fold(true, |ok, g| Ok::<_, Error>(ok && span_is_stable_under(*g)?));
    report.push(
        "cubic.span_stable",
        stable.map(|ok| (ok, "span mapped into itself by all seven generators".into())),
    );
}

fn fiber(report: &mut Report, opts: &VerifyOptions, rng: &mut impl Rng) {
    let example = PointM::parse("2,3,4,5").and_then(|x| {
        let v = embedding_table().eval_all(x.coords())?;
        let (base, _) = BaseField5::from_point(&v)?;
        let data = build_qq_dd(&base)?;
        let ok = data.consumed_vanish()?
            && data.cub8_factorization_holds()?
            && data.pairwise_divisible()
            && data.dd_divides_substitution();
        Ok((
            ok,
            format!(
                "{} linear equations in t over the base of x = (2,3,4,5)",
                data.cube_list.len()
            ),
        ))
    });
    report.push("fiber.elimination", example);

    let wanted = opts.count(50);
    let (mut passed, mut skipped, mut failure) = (0, 0, None);
    while passed < wanted && failure.is_none() {
        let x = random_point(rng);
        match fiber_round_trip(&x) {
            Ok(rt) if rt.passed() => passed += 1,
            Ok(rt) => {
                failure = Some(format!(
                    "{:?}: {rt:?}",
                    x.coords().iter().map(ToString::to_string).collect::<Vec<_>>()
                ))
            }
            Err(Error::NonGeneric(_)) | Err(Error::DegenerateQuadratic(_)) | Err(Error::Undefined) => {
                skipped += 1;
                if skipped > 10 * wanted.max(1) {
                    failure = Some("too many non-generic samples".into());
                }
            }
            Err(e) => failure = Some(e.to_string()),
        }
    }
    report.push(
        "fiber.round_trip",
        Ok(match failure {
            None => (true, format!("{passed} points, {skipped} non-generic samples skipped")),
            Some(f) => (false, f),
        }),
    );
    let n = opts.count(25);
    report.push(
        "fiber.divisibility",
        divisibility_check(false, n, rng).map(|v| (true, format!("{} random bases", v.bases_checked))),
    );
    if opts.long {
        report.push(
            "fiber.divisibility_symbolic",
            divisibility_check(true, 0, rng).map(|_| (true, "over the function field in g1..g5".into())),
        );
    } else {
        report.skip("fiber.divisibility_symbolic", "runs with --long");
    }
}

fn random_z(rng: &mut impl Rng) -> PointZ {
    loop {
        if let Ok(z) = PointZ::new(std::array::from_fn(|_| small_rational(rng))) {
            return z;
        }
    }
}

fn prolong(report: &mut Report, opts: &VerifyOptions, rng: &mut impl Rng) {
    report.push(
        "prolong.table",
        verify_prolong_table().map(|r| {
            (
                r.quadric_vanishes && r.duplicates_hold,
                format!(
                    "{} zero rows and {} rows with the common factor",
                    r.zero_rows, r.table_rows
                ),
            )
        }),
    );
    report.push(
        "prolong.minor_products",
        Ok((
            rows_match_minor_products(),
            "each of the 15 minor products occurs twice".into(),
        )),
    );
    let dim = span_check();
    report.derive("prolong_span_dimension", dim);
    let n = opts.count(25);
    let members = (0..n).try_fold(0, |bad, _| {
        let p = prolonged_phi(&random_z(rng))?;
        Ok::<_, Error>(bad + usize::from(!membership(&p.to_rationals())?.member))
    });
    report.push(
        "prolong.membership",
        members.map(|bad| (bad == 0, format!("{n} random z, {bad} outside the variety"))),
    );
}

fn random_direction(rng: &mut impl Rng) -> (LimitDirection, ProjPoint) {
    loop {
        let xi = LimitDirection(std::array::from_fn(|_| small_rational(rng)));
        if let Ok(p) = limit_point(&xi) {
            return (xi, p);
        }
    }
}

fn limit(report: &mut Report, opts: &VerifyOptions, rng: &mut impl Rng) {
    let base = match limit_point(&LimitDirection([1, 1, 1, 1].map(|c| Rational::from_integer(c.into())))) {
        Ok(p) => p,
        Err(e) => return report.push("limit.constancy", Err(e)),
    };
    let n = opts.count(10);
    let differing = (0..n).filter(|_| random_direction(rng).1 != base).count();
    report.push(
        "limit.constancy",
        Ok((
            differing == 0,
            format!("{n} random directions, {differing} different limits"),
        )),
    );
    report.push(
        "limit.membership",
        membership(&base.to_rationals()).map(|v| (v.member, format!("limit point {base}"))),
    );
}

fn random_invertible(rng: &mut impl Rng) -> [[Rational; 3]; 3] {
    loop {
        let g: [[Rational; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| small_rational(rng)));
        if !det3(&g).is_zero() {
            return g;
        }
    }
}

fn det3(g: &[[Rational; 3]; 3]) -> Rational {
    QMatrix::from_rows(g.iter().map(|r| r.to_vec()).collect()).determinant()
}

fn consistency(report: &mut Report, opts: &VerifyOptions, rng: &mut impl Rng) {
    let n = opts.count(100);
    let mut ratio: Option<Rational> = None;
    let outcome = (0..n).try_fold((0, true), |(bad, q_ok), _| {
        let x = random_point(rng);
        let a = Matrix36::normalized(x.coords());
        let same = phi_from_matrix(&a)? == eval_phi(&x)?;
        let r = a.conic_determinant() / embedding_table().q().eval(x.coords())?;
        let q_ok = q_ok && ratio.get_or_insert_with(|| r.clone()) == &r;
        Ok::<_, Error>((bad + usize::from(!same), q_ok))
    });
    match outcome {
        Ok((bad, q_ok)) => {
            report.push(
                "consistency.matrix_form",
                Ok((bad == 0, format!("{n} random points, {bad} disagreements"))),
            );
            report.push(
                "consistency.quadric",
                Ok((q_ok, format!("conic determinant / Q = {}", ratio.unwrap_or_default()))),
            );
        }
        Err(e) => report.push("consistency.matrix_form", Err(e)),
    }
    let m = opts.count(20);
    let scaling = (0..m).try_fold(0, |bad, _| {
        let a = Matrix36::normalized(random_point(rng).coords());
        let g = random_invertible(rng);
        let h: [Rational; 6] = std::array::from_fn(|_| loop {
            let c = small_rational(rng);
            if !c.is_zero() {
                break c;
            }
        });
        let factor = pow(&det3(&g), 6) * pow(&h.iter().product(), 3);
        let lhs = phi_from_matrix_raw(&a.transform(&g, &h));
        let rhs: Vec<Rational> = phi_from_matrix_raw(&a).iter().map(|c| c * &factor).collect();
        Ok::<_, Error>(bad + usize::from(lhs != rhs))
    });
    report.push(
        "consistency.scaling",
        scaling.map(|bad| {
            (
                bad == 0,
                format!("{m} random (g, h), {bad} violations of det(g)^6 det(h)^3"),
            )
        }),
    );
}

fn pow(r: &Rational, n: i32) -> Rational {
    num_traits::Pow::pow(r, n)
}

fn injectivity(report: &mut Report, opts: &VerifyOptions, rng: &mut impl Rng) {
    let n = opts.count(100);
    let sr = generator_map(Generator::Sr);
    let outcome = (0..n).try_fold((0, 0), |(collisions, unpaired), _| {
        let x = random_point(rng);
        let x2 = random_point(rng);
        let (p, p2) = (eval_phi(&x)?, eval_phi(&x2)?);
        let collide = x != x2 && p == p2 && sr.apply(x.coords())? != x2.coords().to_vec();
        // The s_r partner shares the image under the projection but not the point.
        let sx = sr.apply(x.coords())?;
        let q = ProjPoint::new(&embedding_table().eval_all(&sx)?)?;
        let paired = projection_p4(&p.to_rationals())? == projection_p4(&q.to_rationals())?
            && (p != q || sx == x.coords().to_vec());
        Ok::<_, Error>((collisions + usize::from(collide), unpaired + usize::from(!paired)))
    });
    report.push(
        "injectivity.pairs",
        outcome.map(|(c, u)| {
            (
                c == 0 && u == 0,
                format!("{n} random pairs, {c} collisions, {u} points not separated from their sr partner"),
            )
        }),
    );
}
