//! Exact membership in the zero locus of all orbit relations.

use std::fmt;

use serde::Serialize;

use super::cubic::{cubic_relation_set, TwoTermCubic};
use super::linear::{linear_relation_basis, LinearForm40};
use crate::arith::Scalar;
use crate::error::{Error, Result};

/// A relation that fails at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Linear(LinearForm40),
    Cubic(TwoTermCubic),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Linear(l) => write!(f, "{l}"),
            Violation::Cubic(c) => write!(f, "{c}"),
        }
    }
}

/// Outcome of a membership test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub member: bool,
    pub linear_checked: usize,
    pub cubic_checked: usize,
    #[serde(serialize_with = "violation_text")]
    pub violated: Option<Violation>,
}

fn violation_text<S: serde::Serializer>(v: &Option<Violation>, s: S) -> std::result::Result<S::Ok, S::Error> {
    v.as_ref().map(ToString::to_string).serialize(s)
}

/// Tests every orbit linear form and orbit cubic at a nonzero point of
/// `P^39`, stopping at the first violated relation.
pub fn membership<S: Scalar>(point: &[S]) -> Result<Verdict> {
    if point.len() != 40 {
        return Err(Error::ArityMismatch {
            expected: 40,
            got: point.len(),
        });
    }
    if point.iter().all(Scalar::is_null) {
        return Err(Error::ZeroVector);
    }
    let linear = &linear_relation_basis()?.forms;
    let cubics = cubic_relation_set()?;
    let mut verdict = Verdict {
        member: true,
        linear_checked: 0,
        cubic_checked: 0,
        violated: None,
    };
    for l in linear {
        verdict.linear_checked += 1;
        if !l.eval(point).is_null() {
            verdict.member = false;
            verdict.violated = Some(Violation::Linear(l.clone()));
            return Ok(verdict);
        }
    }
    for c in cubics {
        verdict.cubic_checked += 1;
        if !c.eval(point).is_null() {
            verdict.member = false;
            verdict.violated = Some(Violation::Cubic(c.clone()));
            return Ok(verdict);
        }
    }
    Ok(verdict)
}
