//! Rigorous upper bounds for the continuous part of the axial distance
//! spectrum of two-generator discrete groups.
//!
//! The pipeline walks Farey fractions, builds the associated trace
//! polynomials symbolically, extracts their roots, scores each root with
//! the ellipse functional, and converts the smallest score into a bound
//! on the axial distance between generator axes. Companion modules
//! supply the closed-form geometry, the spectral-gap constants, and a
//! Rouché certification of root stability under small deformations of
//! the generator orders.

pub mod error;
pub mod farey;
pub mod geometry;
pub mod order;
pub mod roots;
pub mod symalg;

pub use error::{Error, Result};
pub use farey::{FareyFraction, FareyWord, Generator};
pub use geometry::{
    beta_of_order, complex_distance, cosh_two_delta, delta_one, fuchsian_deltas, gamma_from_mu,
    triangle_axis_distance, AxialGeometry, ComplexDistance, FuchsianDeltas,
};
pub use order::Order;
pub use roots::{find_roots, residual_certify, scaled_residual, RootSet};
pub use symalg::{
    deformation_expansion, parabolic_integer_polynomial, trace_polynomial, word_matrix,
    DeformationPoly, UniPoly,
};
