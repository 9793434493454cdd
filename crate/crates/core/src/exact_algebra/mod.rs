//! Exact integer and Laurent-polynomial linear algebra.
//!
//! Everything here is exact: arbitrary-precision integers, unimodular
//! transformations, canonical polynomial residues. No floating point.

mod lattice;
mod laurent;
mod matrix;
mod snf;

pub use lattice::{quotient_data, quotient_projection, saturation, Lattice, LatticeError, QuotientData};
pub use laurent::{laurent_specialize, BadQuotientSpec, LaurentMatrix, LaurentPoly, QuotientSpec};
pub use matrix::IntegerMatrix;
pub use snf::{kernel_basis, rank, smith_decompose, smith_normal_form, SmithDecomposition};
