//! Exact arithmetic: rationals, polynomials, rational functions and maps,
//! and linear algebra over the rationals.

pub mod context;
pub mod det;
pub mod field;
pub mod gcd;
pub mod linalg;
pub mod map;
mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub(crate) use parse::poly;

pub use context::{g_context, k_context, st_context, t_context, x_context, y_context, z_context, Ctx, VarContext};
pub use field::{eval_poly, Scalar};
pub use linalg::{EchelonBasis, QMatrix, SparseVec};
pub use map::RationalMap;
pub use poly::{MPoly, Monomial};
pub use ratfunc::RatFunc;
pub use rational::{int, rat, Rational};
