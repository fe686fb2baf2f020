//! Symbolic construction of trace polynomials from Farey words.

pub mod deformation;
pub mod matrix;
pub mod poly;

pub use deformation::{deformation_expansion, DeformationPoly};
pub use matrix::{parabolic_integer_polynomial, trace_polynomial, word_matrix};
pub use poly::UniPoly;
