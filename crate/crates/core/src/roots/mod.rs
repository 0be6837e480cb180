//! The E6 root system, the 40 labels and the signed action of the Weyl group
//! on the coordinates `y1..y40`.

pub mod group;
pub mod label;
pub mod vector;

pub use group::{
    closure, enumerate_group, orbit, signed_perm_for_root, Generator, Orbitable, SignedPerm40, DEFAULT_BUDGET,
};
pub use label::{label_action, label_catalog, label_orbit, A2Triple, Label, LabelCatalog, COORDINATE_LABELS};
pub use vector::{
    aux_r0, aux_r_tilde, find_root, orthogonality_failures, predicted_orthogonal, reflect, root_catalog, simple_roots,
    RootName, RootVec,
};
