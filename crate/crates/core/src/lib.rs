//! Exact expansion of multivariate rational functions at Newton polytope
//! vertices and verification of Gauss congruences on their coefficients.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod gauss;
pub mod polytope;
pub mod series;
pub mod theory;
pub mod report;

pub use error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 8;
