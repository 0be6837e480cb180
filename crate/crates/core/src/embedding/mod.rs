//! The forty coordinate polynomials, the birational involutions of the
//! moduli space and the equivariance of the embedding.

pub mod equivariance;
pub mod generators;
pub mod matrix;
pub mod reference;
pub mod table;

pub use equivariance::{verify_equivariance, EquivarianceReport, RowCheck};
pub use generators::{braid_relation_holds, generator_map, GeneratorMap};
pub use matrix::{phi_from_matrix, phi_from_matrix_raw, Matrix36};
pub use table::{
    discriminant, discriminant_factors, embedding_table, eval_phi, projection_p4, EmbeddingTable, PointM, ProjPoint,
};
