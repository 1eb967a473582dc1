use num_traits::{Signed, Zero};
use serde::Serialize;

use super::classify::{classify_mostly_linear, MostlyLinearVerdict};
use super::toroidal::ToroidalMap;
use crate::algebra::integers::exact_sqrt;
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{ExponentVector, LaurentPolynomial, Rational};
use crate::error::{Error, Result};

/// A denominator that is linear in one variable, possibly after the
/// substitution `x = 1/u`, `y = v/u` (which turns `Q/x²` into a polynomial
/// linear in `u`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub map: Option<ToroidalMap>,
    #[serde(serialize_with = "crate::report::ser_laurent")]
    pub numerator: LaurentPolynomial,
    #[serde(serialize_with = "crate::report::ser_laurent")]
    pub denominator: LaurentPolynomial,
    pub mostly_linear: MostlyLinearVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Degree2Classification {
    /// `N(Q)` is the triangle `(0,0), (2,0), (0,2)`.
    Triangle {
        dim: usize,
        #[serde(serialize_with = "ser_poly_list")]
        basis: Vec<LaurentPolynomial>,
        /// Midpoints of the edges whose quadratic has two distinct rational roots.
        edge_monomials: Vec<ExponentVector>,
        verdict: bool,
    },
    Reduced(Reduction),
}

impl Degree2Classification {
    pub fn verdict(&self) -> bool {
        match self {
            Degree2Classification::Triangle { verdict, .. } => *verdict,
            Degree2Classification::Reduced(r) => r.mostly_linear.overall,
        }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            Degree2Classification::Triangle { dim, .. } => Some(*dim),
            Degree2Classification::Reduced(_) => None,
        }
    }
}

fn ser_poly_list<S: serde::Serializer>(v: &[LaurentPolynomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

const MONOMIALS: [[i64; 2]; 6] = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]];

fn is_nonzero_square(r: &Rational) -> bool {
    r.is_positive() && exact_sqrt(r.numer()).is_some() && exact_sqrt(r.denom()).is_some()
}

/// Coordinates in the monomials of degree at most 2, or `None` if `p` has
/// any other monomial.
fn coordinates(p: &LaurentPolynomial) -> Option<Vec<Rational>> {
    let mut v = vec![Rational::zero(); MONOMIALS.len()];
    for (e, c) in p.terms() {
        let i = MONOMIALS.iter().position(|m| m == e.as_slice())?;
        v[i] = c.clone();
    }
    Some(v)
}

/// Classifies `P/Q` for `Q` of total degree 2 in two variables. Triangle
/// shaped `Q` gets the space of admissible numerators; other shapes are
/// reduced to a denominator linear in one variable.
pub fn classify_degree2(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<Degree2Classification> {
    if q.nvars() != 2 || !q.is_polynomial() || q.total_degree() != Some(2) || q.terms().any(|(e, _)| e.total_degree() > 2) {
        return Err(Error::NotDegreeTwo);
    }
    if p.nvars() != 2 {
        return Err(Error::VariableMismatch { left: p.nvars(), right: 2 });
    }
    let c = |i: i64, j: i64| q.coeff(&ExponentVector::new(vec![i, j]));
    let (a, b, cy, d, e, f) = (c(0, 0), c(1, 0), c(0, 1), c(2, 0), c(1, 1), c(0, 2));
    if d.is_zero() || f.is_zero() {
        let z_var = if d.is_zero() { 1 } else { 0 };
        let mostly_linear = classify_mostly_linear(p, q, z_var)?;
        return Ok(Degree2Classification::Reduced(Reduction {
            map: None,
            numerator: p.clone(),
            denominator: q.clone(),
            mostly_linear,
        }));
    }
    if a.is_zero() {
        let map = ToroidalMap::from_ints(&[vec![-1, -1], vec![0, 1]])?;
        let shift = ExponentVector::new(vec![2, 0]);
        let numerator = map.apply_polynomial(p)?.shift(&shift);
        let denominator = map.apply_polynomial(q)?.shift(&shift);
        let mostly_linear = classify_mostly_linear(&numerator, &denominator, 1)?;
        return Ok(Degree2Classification::Reduced(Reduction {
            map: Some(map),
            numerator,
            denominator,
            mostly_linear,
        }));
    }
    let four = Rational::from_integer(4.into());
    let mut edge_monomials = Vec::new();
    for (disc, m) in [
        (&b * &b - &four * &a * &d, [1, 0]),
        (&cy * &cy - &four * &a * &f, [0, 1]),
        (&e * &e - &four * &d * &f, [1, 1]),
    ] {
        if is_nonzero_square(&disc) {
            edge_monomials.push(ExponentVector::new(m.to_vec()));
        }
    }
    let mut basis = vec![q.clone(), q.euler(0), q.euler(1)];
    basis.extend(edge_monomials.iter().map(|m| LaurentPolynomial::monomial(2, m.clone(), Rational::from_integer(1.into()))));
    let rows: Matrix = basis.iter().map(|b| coordinates(b).expect("degree at most 2")).collect();
    let dim = linalg::rank(&rows);
    let verdict = p.is_zero()
        || coordinates(p).is_some_and(|v| {
            let mut ext = rows.clone();
            ext.push(v);
            linalg::rank(&ext) == dim
        });
    Ok(Degree2Classification::Triangle { dim, basis, edge_monomials, verdict })
}
