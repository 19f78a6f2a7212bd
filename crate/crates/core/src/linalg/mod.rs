//! Exact scalar arithmetic and the sparse matrix kernel.

pub mod elim;
pub mod field;
pub mod sparse;
pub mod subspace;

pub use elim::{inverse, rank, rref, solve, Rref};
pub use field::{FieldSpec, Scalar};
pub use sparse::{axpy, normalize_terms, Budget, SparseMatrix, SparseVec};
pub use subspace::{quotient_dim, Subspace};

pub fn kernel_basis(m: &SparseMatrix) -> crate::error::Result<Subspace> {
    Subspace::kernel_of(m)
}

pub fn image_basis(m: &SparseMatrix) -> crate::error::Result<Subspace> {
    Subspace::image_of(m)
}

pub fn intersect(a: &Subspace, b: &Subspace) -> crate::error::Result<Subspace> {
    a.intersect(b)
}
