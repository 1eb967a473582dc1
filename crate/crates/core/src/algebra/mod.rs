//! Exact arithmetic: rationals, Laurent polynomials, rational functions and
//! the univariate toolkit.

mod exponent;
pub mod factor;
pub mod integers;
mod laurent;
pub mod linalg;
pub(crate) mod modp;
pub mod partial_fractions;
mod ratfunc;
mod univariate;

pub use exponent::ExponentVector;
pub use factor::{factor_univariate, UnivariateFactorization};
pub use laurent::{check_nvars, LaurentPolynomial};
pub use partial_fractions::{partial_fractions, PartialFractionTerm, PartialFractions};
pub use ratfunc::{int_const, RationalFunction};
pub use univariate::UniPoly;

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
