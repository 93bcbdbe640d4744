//! Integer linear algebra, generic over the scalar ring.

mod lattice;
mod matrix;
mod scalar;
mod smith;
mod sparse;

pub use lattice::{Echelon, Pivot, Reduction, Subquotient};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use smith::{smith_normal_form, Smith};
pub use sparse::{SparseMatrix, SparseVec};
