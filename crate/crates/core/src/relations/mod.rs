//! Defining equations of the image: the linear orbit, the two-term cubic
//! orbit, their reductions to the pivot coordinates and membership tests.

mod compose;
mod cubic;
mod linear;
mod membership;
mod reference;

pub use compose::{pullback_to_x, vanishes_on_phi};
pub use cubic::{
    cubic_relation_set, lift_to_y, numbered_cubic_basis, reduce_to_g, reduced_cubics, reference_cubic,
    reference_cubic_indices, span_is_stable_under, CubicSpan, ReducedCubics, TwoTermCubic, CUBIC_COUNT,
};
pub use linear::{
    group_generators, linear_relation_basis, LinearForm40, LinearSystem, PivotBasis, LINEAR_RANK, PIVOTS,
};
pub use membership::{membership, Verdict, Violation};
