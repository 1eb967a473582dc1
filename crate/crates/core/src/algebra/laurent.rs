use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExponentVector, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::MAX_VARS;

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Terms are kept in graded-lexicographic order and never store a zero
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

pub fn check_nvars(nvars: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&nvars) {
        Ok(())
    } else {
        Err(Error::VariableCount { got: nvars })
    }
}

impl LaurentPolynomial {
    /// The zero polynomial in `nvars` variables.
    ///
    /// # Panics
    /// If `nvars` is outside `1..=MAX_VARS`; use [`LaurentPolynomial::new`]
    /// for a checked constructor.
    pub fn zero(nvars: usize) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&nvars),
            "variable count {nvars} outside 1..={MAX_VARS}"
        );
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn new(nvars: usize) -> Result<Self> {
        check_nvars(nvars)?;
        Ok(Self::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, ExponentVector::zeros(nvars), c)
    }

    pub fn monomial(nvars: usize, e: ExponentVector, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        assert_eq!(e.len(), nvars);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, ExponentVector::unit(nvars, i), Rational::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::new(nvars)?;
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ExponentLength { expected: nvars, got: e.to_vec() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Result<Self> {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::from(*e), Rational::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_ref(&self, e: &ExponentVector) -> Option<&Rational> {
        self.terms.get(e)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExponentVector::zeros(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest term in the graded order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Smallest term in the graded order; its exponent is a vertex of the Newton polytope.
    pub fn trailing_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next()
    }

    /// Componentwise minimum exponent over the support.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        self.terms.keys().cloned().reduce(|a, b| a.componentwise_min(&b))
    }

    /// Componentwise maximum exponent over the support.
    pub fn max_exponents(&self) -> Option<ExponentVector> {
        self.terms.keys().cloned().reduce(|a, b| a.componentwise_max(&b))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| x >= 0))
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.total_degree()).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &ExponentVector) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.add(e), a.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative in variable `i` (0-based).
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] != 0 {
                let mut k = e.to_vec();
                k[i] -= 1;
                out.add_term(ExponentVector::new(k), c * Rational::from_integer(BigInt::from(e[i])));
            }
        }
        out
    }

    /// Euler operator `x_i ∂/∂x_i` (0-based `i`).
    pub fn euler(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] != 0 {
                out.terms
                    .insert(e.clone(), c * Rational::from_integer(BigInt::from(e[i])));
            }
        }
        out
    }

    /// Remaps every exponent; terms landing on the same exponent are summed.
    pub fn map_exponents(
        &self,
        nvars: usize,
        mut f: impl FnMut(&ExponentVector) -> Result<ExponentVector>,
    ) -> Result<Self> {
        let mut out = Self::new(nvars)?;
        for (e, c) in &self.terms {
            out.add_term(f(e)?, c.clone());
        }
        Ok(out)
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&ExponentVector) -> bool) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d` in the Laurent polynomial ring, if it exists.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || self.nvars != d.nvars {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let ms = self.min_exponents()?;
        let md = d.min_exponents()?;
        let mut r = self.shift(&ms.neg());
        let d = d.shift(&md.neg());
        let (ld, lc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut q = Self::zero(self.nvars);
        while let Some((lr, cr)) = r.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let e = lr.sub(&ld);
            if e.iter().any(|x| x < 0) {
                return None;
            }
            let c = cr / &lc;
            r = &r - &d.shift(&e).scale(&c);
            q.add_term(e, c);
        }
        Some(q.shift(&ms.sub(&md)))
    }

    /// Evaluates with every variable replaced by a rational value; all exponents must be nonnegative
    /// or the values nonzero.
    pub fn evaluate(&self, point: &[Rational]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e.iter()) {
                if k < 0 && x.is_zero() {
                    return None;
                }
                t *= num_traits::pow::Pow::pow(x, k as i32);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Converts a univariate polynomial (nonnegative exponents) to dense form.
    pub fn to_univariate(&self) -> Option<UniPoly> {
        if self.nvars != 1 {
            return None;
        }
        let mut coeffs = Vec::new();
        for (e, c) in &self.terms {
            let k = usize::try_from(e[0]).ok()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var` of `nvars`.
    pub fn from_univariate(u: &UniPoly, nvars: usize, var: usize) -> Self {
        let mut p = Self::zero(nvars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[var] = k as i64;
            p.add_term(ExponentVector::new(e), c.clone());
        }
        p
    }

    /// Renders with explicit variable names.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            return "0".into();
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| *k != 0)
                .map(|(i, k)| {
                    if k == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            let coef = if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            };
            if mono.is_empty() {
                s.push_str(&coef);
            } else {
                if !a.is_one() {
                    s.push_str(&coef);
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.to_string_with(&refs))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = LaurentPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integers::rat;

    fn p(nvars: usize, terms: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(nvars, terms).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p(1, &[(&[0], 1), (&[1], -1)]);
        let b = p(1, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(&a * &b, p(1, &[(&[0], 1), (&[2], -1)]));
    }

    #[test]
    fn two_variable_product() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]);
        let b = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]);
        let want = p(2, &[(&[0, 0], 1), (&[2, 0], -1), (&[1, 1], -2), (&[0, 2], -1)]);
        assert_eq!(&a * &b, want);
        assert_eq!(&LaurentPolynomial::one(2) * &a, a);
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = LaurentPolynomial::one(1);
        let b = LaurentPolynomial::one(2);
        assert_eq!(a.try_mul(&b), Err(Error::VariableMismatch { left: 1, right: 2 }));
        assert!(LaurentPolynomial::new(9).is_err());
        assert!(LaurentPolynomial::new(0).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]);
        let b = p(2, &[(&[-1, 0], 3), (&[1, 2], 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn rendering() {
        let q = p(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -1)]);
        assert_eq!(q.to_string(), "1 - x1 - x2 - x1*x2");
        let r = LaurentPolynomial::monomial(1, ExponentVector::new(vec![-2]), crate::algebra::integers::rat_frac(-3, 2));
        assert_eq!(r.to_string(), "-3/2*x1^-2");
    }

    #[test]
    fn derivatives() {
        let q = p(2, &[(&[2, 1], 3), (&[0, 1], 1), (&[-1, 0], 2)]);
        assert_eq!(q.derivative(0), p(2, &[(&[1, 1], 6), (&[-2, 0], -2)]));
        assert_eq!(q.euler(0), p(2, &[(&[2, 1], 6), (&[-1, 0], -2)]));
        assert_eq!(q.evaluate(&[rat(1), rat(2)]).unwrap(), rat(10));
    }
}
