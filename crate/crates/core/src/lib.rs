//! Exact computations with a W(E6)-equivariant embedding of the moduli of
//! six points in the plane into `P^39`: roots and labels, the coordinate
//! table, its defining relations, fiber reconstruction and degenerations.

pub mod arith;
pub mod degenerate;
pub mod embedding;
pub mod error;
pub mod fiber;
pub mod relations;
pub mod roots;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/intro.md")]
mod book_intro {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/arithmetic.md")]
mod book_arithmetic {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/roots.md")]
mod book_roots {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/embedding.md")]
mod book_embedding {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/relations.md")]
mod book_relations {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/fiber.md")]
mod book_fiber {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/degenerate.md")]
mod book_degenerate {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
mod book_verification {}
