//! Prime-field arithmetic and exact subspace linear algebra. Every length
//! computed by the crate is a difference of dimensions of these subspaces.

mod field;
mod subspace;

pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use subspace::{echelonize, kernel, map_preimage, subspace_combine, Combine, Matrix, Subspace};
pub(crate) use subspace::Echelon;
