//! `cubic-moduli`: evaluation, orbits, fibers, degenerations, relation
//! export and the verification suite, with JSON output.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use cubic_moduli::arith::rational::parse_rational_list;
use cubic_moduli::arith::Rational;
use cubic_moduli::degenerate::{limit_point, prolonged_phi, LimitDirection, PointZ};
use cubic_moduli::embedding::{embedding_table, eval_phi, phi_from_matrix, Matrix36, PointM};
use cubic_moduli::fiber::{reconstruct_fiber, BaseField5};
use cubic_moduli::relations::{cubic_relation_set, linear_relation_basis, membership, PIVOTS};
use cubic_moduli::roots::{label_catalog, label_orbit, Label};
use cubic_moduli::verify::{self, Section, VerifyOptions};
use cubic_moduli::Error;

#[derive(Parser, Debug)]
#[command(
    name = "cubic-moduli",
    version,
    about = "Exact computations on the 40-coordinate embedding"
)]
struct Cli {
    /// Write the JSON document to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The point φ(x) for x = (x1, x2, x3, x4).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// The forty minor products of a 3×6 matrix given row by row.
    EvalMatrix {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// The orbit of a label such as "(123,456)" or "(12,34,56)".
    Orbit {
        #[arg(long)]
        label: String,
    },
    /// Whether a point of P^39 satisfies every orbit relation.
    Membership {
        /// Forty comma-separated coordinates.
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "x",
            required_unless_present = "x"
        )]
        point: Option<String>,
        /// Tests φ(x) instead.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// The two points over a base (g1, ..., g5) of the projection.
    Fiber {
        #[arg(long, allow_hyphen_values = true)]
        base: String,
    },
    /// φ on the conic locus, z = (z1, z2, z3).
    Prolong {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// The limit of φ along x = (tξ1, tξ2, tξ3, 1 + tξ4) as t → 0.
    Limit {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// The orbit relations and the pivot expressions.
    ExportRelations,
    /// Runs verification checks; `all` or one section.
    Verify {
        #[arg(default_value = "all")]
        section: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count used by every randomized check.
        #[arg(long)]
        samples: Option<usize>,
        /// Exhaustive and symbolic variants.
        #[arg(long)]
        long: bool,
    },
}

/// Exit status for bad input.
const BAD_INPUT: u8 = 2;
/// Exit status for a failed verification or a library failure.
const FAILURE: u8 = 1;

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_)
            | Error::ArityMismatch { .. }
            | Error::ZeroVector
            | Error::ZeroDenominator
            | Error::DegeneratePoint
            | Error::DegenerateMatrix(_)
            | Error::DegenerateZ(_)
            | Error::NonGeneric(_)
            | Error::DegenerateQuadratic(_)
            | Error::InadmissibleDirection
            | Error::Undefined
    )
}

fn doc(command: &str, body: impl Serialize) -> Value {
    let mut v = json!({ "schema": verify::SCHEMA, "command": command });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, serde_json::to_value(body).expect("serializable")) {
        m.extend(b);
    }
    v
}

fn parse4(s: &str) -> cubic_moduli::Result<[Rational; 4]> {
    let v = parse_rational_list(s, 4)?;
    Ok(std::array::from_fn(|i| v[i].clone()))
}

fn parse5(s: &str) -> cubic_moduli::Result<[Rational; 5]> {
    let v = parse_rational_list(s, 5)?;
    Ok(std::array::from_fn(|i| v[i].clone()))
}

fn texts(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// The JSON document and whether the command succeeded.
fn execute(command: &Command, echo: &str) -> cubic_moduli::Result<(Value, bool)> {
    let out = match command {
        Command::Eval { x } => {
            let p = PointM::new(parse4(x)?)?;
            let raw = embedding_table().eval_all(p.coords())?;
            doc(
                echo,
                json!({ "x": texts(p.coords()), "values": texts(&raw), "point": eval_phi(&p)? }),
            )
        }
        Command::EvalMatrix { matrix } => {
            let a = Matrix36::parse(matrix)?;
            doc(echo, json!({ "point": phi_from_matrix(&a)? }))
        }
        Command::Orbit { label } => {
            let l: Label = label.parse()?;
            let orbit = label_orbit(&l)?;
            let coords: Vec<usize> = orbit
                .iter()
                .map(|m| label_catalog().index_of(m).expect("catalog label") + 1)
                .collect();
            doc(
                echo,
                json!({ "label": l, "size": orbit.len(), "orbit": orbit, "coordinates": coords }),
            )
        }
        Command::Membership { point, x } => {
            let coords = match (point, x) {
                (Some(p), _) => parse_rational_list(p, 40)?,
                (None, Some(x)) => eval_phi(&PointM::new(parse4(x)?)?)?.to_rationals(),
                (None, None) => return Err(Error::Parse("expected --point or --x".into())),
            };
            doc(echo, json!({ "verdict": membership(&coords)? }))
        }
        Command::Fiber { base } => {
            let b = BaseField5::numeric(parse5(base)?)?;
            doc(
                echo,
                json!({ "base": texts(&parse5(base)?), "fiber": reconstruct_fiber(&b)? }),
            )
        }
        Command::Prolong { z } => {
            let z = PointZ::parse(z)?;
            doc(echo, json!({ "z": texts(z.coords()), "point": prolonged_phi(&z)? }))
        }
        Command::Limit { xi } => {
            let xi = LimitDirection::parse(xi)?;
            doc(echo, json!({ "xi": texts(&xi.0), "point": limit_point(&xi)? }))
        }
        Command::ExportRelations => {
            let sys = linear_relation_basis()?;
            let expressions: serde_json::Map<String, Value> = (1..=40)
                .filter(|j| !PIVOTS.contains(j))
                .map(|j| (format!("y{j}"), Value::String(sys.pivots.expression(j).to_string())))
                .collect();
            doc(
                echo,
                json!({
                    "linear": sys.forms,
                    "cubic": cubic_relation_set()?,
                    "pivots": PIVOTS,
                    "pivot_expressions": expressions,
                }),
            )
        }
        Command::Verify {
            section,
            seed,
            samples,
            long,
        } => {
            let sections = if section == "all" {
                Section::ALL.to_vec()
            } else {
                vec![section.parse()?]
            };
            let opts = VerifyOptions {
                seed: *seed,
                samples: *samples,
                long: *long,
            };
            let report = verify::run(echo, &sections, &opts);
            let ok = report.passed();
            return Ok((serde_json::to_value(&report).expect("serializable"), ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args()
        .skip(1)
        .scan(false, |skip, a| {
            // The output path does not belong in the report.
            let keep = !*skip && !a.starts_with("--out");
            *skip = a == "--out";
            Some(keep.then_some(a))
        })
        .flatten()
        .collect();
    let echo = echo.join(" ");
    let (value, code) = match execute(&cli.command, &echo) {
        Ok((v, ok)) => (v, if ok { 0 } else { FAILURE }),
        Err(e) => {
            let code = if is_input_error(&e) { BAD_INPUT } else { FAILURE };
            (
                json!({ "schema": verify::SCHEMA, "command": echo, "error": e.to_string() }),
                code,
            )
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(BAD_INPUT);
            }
        }
        None => {
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    if let Some(err) = value.get("error") {
        eprintln!("error: {}", err.as_str().unwrap_or_default());
    }
    ExitCode::from(code)
}
