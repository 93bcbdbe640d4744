pub mod abelian;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod extension;
pub mod fingroup;
pub mod gmodule;
pub mod guard;
pub mod homogeneous;
pub mod linalg;
pub mod symop;

pub use abelian::{element_order, hom_kernel, homology_at, smith_normal_form, AbElement, AbGroup, AbHom};
pub use error::{Error, Result};

/// Arbitrary precision integers used throughout the algebraic layers.
pub type Int = num_bigint::BigInt;
pub type IntMatrix = linalg::Matrix<Int>;
pub type IntSparseMatrix = linalg::SparseMatrix<Int>;
pub type IntVec = linalg::SparseVec<Int>;
