//! Constructions of rational functions with the Gauss property and decision
//! procedures for several families.

mod classify;
mod degree2;
mod face;
mod logdet;
mod minton;
mod qdet;
mod substitution;
mod toroidal;

pub use classify::{classify_linear, classify_mostly_linear, MostlyLinearEntry, MostlyLinearVerdict};
pub use degree2::{classify_degree2, Degree2Classification, Reduction};
pub use face::restrict_face;
pub use logdet::log_det_construct;
pub use minton::{minton_decide, MintonDecomposition, MintonReason, MintonTerm, MintonVerdict};
pub use qdet::qdet_construct;
pub use substitution::{compose, substitute_multivariate, substitute_univariate};
pub use toroidal::ToroidalMap;
