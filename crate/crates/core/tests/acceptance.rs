//! One pass/fail line per acceptance criterion, each with its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cubic_moduli::verify::{run, Report, Section, Status, VerifyOptions};

struct Criterion {
    number: u8,
    title: &'static str,
    sections: &'static [Section],
    /// Check-name prefixes that must all pass.
    checks: &'static [&'static str],
    budget: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        title: "root system",
        sections: &[Section::Roots],
        checks: &["roots."],
        budget: secs(1),
    },
    Criterion {
        number: 2,
        title: "group order and Coxeter relations",
        sections: &[Section::Group, Section::Coxeter],
        checks: &["group.order", "coxeter.signed", "coxeter.birational"],
        budget: secs(30),
    },
    Criterion {
        number: 3,
        title: "labels",
        sections: &[Section::Roots],
        checks: &["labels."],
        budget: secs(1),
    },
    Criterion {
        number: 4,
        title: "equivariance tables",
        sections: &[Section::Equivariance],
        checks: &["equivariance."],
        budget: secs(300),
    },
    Criterion {
        number: 5,
        title: "linear system",
        sections: &[Section::Linear],
        checks: &["linear."],
        budget: secs(10),
    },
    Criterion {
        number: 6,
        title: "cubic system",
        sections: &[Section::Cubic],
        checks: &["cubic.count", "cubic.reference_span", "cubic.reference_vanish"],
        budget: secs(300),
    },
    Criterion {
        number: 7,
        title: "fiber round trips and divisibility",
        sections: &[Section::Fiber],
        checks: &["fiber.round_trip", "fiber.divisibility"],
        budget: secs(120),
    },
    Criterion {
        number: 8,
        title: "degeneration and limit point",
        sections: &[Section::Prolong, Section::Limit],
        checks: &["prolong.", "limit."],
        budget: secs(60),
    },
    Criterion {
        number: 9,
        title: "matrix form and scaling law",
        sections: &[Section::Consistency],
        checks: &["consistency.matrix_form", "consistency.scaling"],
        budget: secs(60),
    },
    Criterion {
        number: 10,
        title: "injectivity on random pairs",
        sections: &[Section::Injectivity],
        checks: &["injectivity."],
        budget: secs(60),
    },
];

/// Failures among the checks matching the prefixes, or a note if none ran.
fn failures(report: &Report, prefixes: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for p in prefixes {
        let matching: Vec<_> = report.checks.iter().filter(|c| c.name.starts_with(p)).collect();
        if matching.is_empty() {
            out.push(format!("{p}: no such check"));
        }
        for c in matching {
            if c.status != Status::Pass && !(c.status == Status::Skipped && c.name.ends_with("_symbolic")) {
                out.push(format!("{}: {:?}: {}", c.name, c.status, c.details));
            }
        }
    }
    out
}

fn main() -> ExitCode {
    let opts = VerifyOptions {
        seed: 0,
        samples: None,
        long: false,
    };
    let mut all = true;
    for c in &CRITERIA {
        let start = Instant::now();
        let report = run("acceptance", c.sections, &opts);
        let elapsed = start.elapsed();
        let mut bad = failures(&report, c.checks);
        if elapsed > c.budget {
            bad.push(format!(
                "took {:.1}s, budget {}s",
                elapsed.as_secs_f64(),
                c.budget.as_secs()
            ));
        }
        let verdict = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict} {} ({:.2}s)",
            c.number,
            c.title,
            elapsed.as_secs_f64()
        );
        for b in &bad {
            println!("    {b}");
        }
        all &= bad.is_empty();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
