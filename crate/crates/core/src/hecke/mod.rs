//! The Hecke algebra of type `A_{n-1}` and its standard modules.

mod algebra;
mod modules;
mod perm;
mod seminormal;
mod specht;

pub use algebra::{HeckeAlgebra, HeckeElement, PoleWitness};
pub use modules::{tensor_matrix, tensor_index, PermutationModule, SparseVector};
pub use perm::{SymmetricGroup, MAX_N};
pub use seminormal::{
    central_scalar, murphy_eigenvalue, murphy_exponent, relations_hold, verify_presentation, MatrixRep,
    SeminormalBlock,
};
pub use specht::{calibrate_labeling, specht_basis, specht_gram_rank, GramForm, Labeling, SpechtModule};
