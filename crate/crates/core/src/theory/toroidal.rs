use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::integers::format_rational;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{check_nvars, ExponentVector, LaurentPolynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

/// Monomial substitution `x_j = Π_i y_i^{A_ij}` given by an `m×n` rational
/// matrix of rank `n`. The exponent vector `k` in `x` becomes `A·k` in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToroidalMap {
    matrix: Matrix,
    cols: usize,
}

impl ToroidalMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::RankDeficient);
        }
        if let Some(r) = matrix.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { left: r.len(), right: cols });
        }
        check_nvars(rows)?;
        check_nvars(cols)?;
        if linalg::rank(&matrix) != cols {
            return Err(Error::RankDeficient);
        }
        Ok(ToroidalMap { matrix, cols })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(linalg::from_ints(rows))
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_ints(&(0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect::<Vec<_>>())
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Number of new variables.
    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    /// Number of original variables.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `det(A)` for square maps.
    pub fn determinant(&self) -> Option<Rational> {
        (self.rows() == self.cols).then(|| linalg::determinant(&self.matrix))
    }

    pub fn map_exponent(&self, k: &ExponentVector) -> Result<ExponentVector> {
        if k.len() != self.cols {
            return Err(Error::ExponentLength { expected: self.cols, got: k.to_vec() });
        }
        let mut out = Vec::with_capacity(self.rows());
        for row in &self.matrix {
            let v: Rational = row
                .iter()
                .zip(k.iter())
                .filter(|(_, x)| *x != 0)
                .fold(Rational::zero(), |acc, (a, x)| acc + a * Rational::from_integer(x.into()));
            let int = if v.is_integer() { i64::try_from(v.to_integer()).ok() } else { None };
            match int {
                Some(i) => out.push(i),
                None => return Err(Error::NonIntegralExponent(k.to_vec())),
            }
        }
        Ok(ExponentVector::new(out))
    }

    pub fn apply_polynomial(&self, p: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        if p.nvars() != self.cols {
            return Err(Error::VariableMismatch { left: p.nvars(), right: self.cols });
        }
        p.map_exponents(self.rows(), |k| self.map_exponent(k))
    }

    /// Applies the substitution to numerator and denominator separately.
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction> {
        RationalFunction::new(self.apply_polynomial(f.numerator())?, self.apply_polynomial(f.denominator())?)
    }
}

impl Serialize for ToroidalMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.matrix.iter().map(|r| r.iter().map(format_rational).collect()).collect();
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for r in &rows {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}
