use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::integers::{denominator_lcm, numerator_gcd};
use super::{ExponentVector, LaurentPolynomial, Rational, UniPoly};
use crate::error::{Error, Result};

/// Quotient of Laurent polynomials in normal form.
///
/// Both sides carry integer coefficients with joint content 1, the monomial
/// common to both supports is cancelled, and the denominator's smallest term
/// (in graded order) is positive. In one variable the two sides are coprime.
/// In several variables only exact divisibility of one side by the other is
/// cancelled.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::VariableMismatch { left: num.nvars(), right: den.nvars() });
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(normalize(num, den))
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        let n = p.nvars();
        normalize(p, LaurentPolynomial::one(n))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_polynomial(LaurentPolynomial::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_polynomial(LaurentPolynomial::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_polynomial(LaurentPolynomial::constant(nvars, c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_polynomial(LaurentPolynomial::var(nvars, i))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn into_parts(self) -> (LaurentPolynomial, LaurentPolynomial) {
        (self.num, self.den)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality as functions, by cross-multiplication.
    pub fn is_equivalent(&self, other: &Self) -> bool {
        self.nvars() == other.nvars() && &self.num * &other.den == &other.num * &self.den
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

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let e = u32::try_from(n.unsigned_abs())
            .map_err(|_| Error::InvalidArgument(format!("exponent {n} too large")))?;
        Ok(normalize(base.num.pow(e), base.den.pow(e)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        normalize(self.num.scale(c), self.den.clone())
    }

    /// Partial derivative in variable `i` (0-based).
    pub fn derivative(&self, i: usize) -> Self {
        let n = &(&self.num.derivative(i) * &self.den) - &(&self.num * &self.den.derivative(i));
        normalize(n, &self.den * &self.den)
    }

    /// Euler operator `x_i ∂/∂x_i` (0-based `i`).
    pub fn euler(&self, i: usize) -> Self {
        let n = &(&self.num.euler(i) * &self.den) - &(&self.num * &self.den.euler(i));
        normalize(n, &self.den * &self.den)
    }

    /// `θ_i f / f`, computed without squaring the denominator.
    pub fn log_derivative(&self, i: usize) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let n = &(&self.num.euler(i) * &self.den) - &(&self.num * &self.den.euler(i));
        Ok(normalize(n, &self.num * &self.den))
    }

    /// Smallest exponent of the denominator in graded order, a vertex of its Newton polytope.
    pub fn canonical_vertex(&self) -> ExponentVector {
        self.den.trailing_term().expect("nonzero denominator").0.clone()
    }

    /// Numerator and denominator as dense polynomials, for one variable with
    /// both sides shifted by the smallest exponent of the denominator.
    pub fn univariate_parts(&self) -> Option<(UniPoly, UniPoly, i64)> {
        if self.nvars() != 1 {
            return None;
        }
        let shift = self.den.min_exponents()?[0].min(self.num.min_exponents().map_or(0, |e| e[0]));
        let s = ExponentVector::new(vec![-shift]);
        Some((self.num.shift(&s).to_univariate()?, self.den.shift(&s).to_univariate()?, shift))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.nvars(), right: other.nvars() })
        }
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.den.is_one() {
            self.num.to_string_with(names)
        } else {
            format!("({})/({})", self.num.to_string_with(names), self.den.to_string_with(names))
        }
    }
}

fn normalize(num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction {
    let n = num.nvars();
    if num.is_zero() {
        return RationalFunction { num, den: LaurentPolynomial::one(n) };
    }
    let (mut p, mut q) = (num, den);
    if n == 1 {
        let m = p.min_exponents().unwrap().componentwise_min(&q.min_exponents().unwrap());
        let up = p.shift(&m.neg()).to_univariate().expect("shifted to a polynomial");
        let uq = q.shift(&m.neg()).to_univariate().expect("shifted to a polynomial");
        let g = up.gcd(&uq);
        p = up.div_exact(&g).unwrap().to_laurent();
        q = uq.div_exact(&g).unwrap().to_laurent();
    } else if let Some(d) = p.div_exact(&q) {
        p = d;
        q = LaurentPolynomial::one(n);
    } else if let Some(d) = q.div_exact(&p) {
        q = d;
        p = LaurentPolynomial::one(n);
    }
    let m = p.min_exponents().unwrap().componentwise_min(&q.min_exponents().unwrap());
    if !m.is_zero() {
        p = p.shift(&m.neg());
        q = q.shift(&m.neg());
    }
    let all: Vec<&Rational> = p.terms().chain(q.terms()).map(|(_, c)| c).collect();
    let l = denominator_lcm(all.iter().copied());
    let scaled: Vec<Rational> = all.iter().map(|c| *c * Rational::from_integer(l.clone())).collect();
    let g = numerator_gcd(&scaled);
    let mut factor = Rational::new(l, g);
    if q.trailing_term().unwrap().1.is_negative() {
        factor = -factor;
    }
    if !factor.is_one() {
        p = p.scale(&factor);
        q = q.scale(&factor);
    }
    RationalFunction { num: p, den: q }
}

/// Cancels `a/b` when one side divides the other exactly.
fn cancel_exact(a: &LaurentPolynomial, b: &LaurentPolynomial) -> (LaurentPolynomial, LaurentPolynomial) {
    let n = a.nvars();
    if a.is_zero() || b.is_monomial() || a.is_monomial() {
        return (a.clone(), b.clone());
    }
    if let Some(q) = a.div_exact(b) {
        (q, LaurentPolynomial::one(n))
    } else if let Some(q) = b.div_exact(a) {
        (LaurentPolynomial::one(n), q)
    } else {
        (a.clone(), b.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        let (n1, d2) = cancel_exact(&self.num, &rhs.den);
        let (n2, d1) = cancel_exact(&rhs.num, &self.den);
        normalize(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

/// Integer-coefficient constant used when building small examples.
pub fn int_const(nvars: usize, c: i64) -> RationalFunction {
    RationalFunction::constant(nvars, Rational::from_integer(BigInt::from(c)))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(nvars, terms).unwrap()
    }

    #[test]
    fn content_cancellation() {
        let f = RationalFunction::new(p(1, &[(&[1], 2)]), p(1, &[(&[0], 2), (&[1], -2)])).unwrap();
        assert_eq!(f.numerator(), &p(1, &[(&[1], 1)]));
        assert_eq!(f.denominator(), &p(1, &[(&[0], 1), (&[1], -1)]));
    }

    #[test]
    fn univariate_gcd_and_monomial() {
        let f = RationalFunction::new(p(1, &[(&[1], 1)]), p(1, &[(&[1], 1), (&[2], -1)])).unwrap();
        assert_eq!(f.numerator(), &p(1, &[(&[0], 1)]));
        assert_eq!(f.denominator(), &p(1, &[(&[0], 1), (&[1], -1)]));
    }

    #[test]
    fn fixpoint_and_sign() {
        let q = p(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]);
        let f = RationalFunction::new(p(2, &[(&[1, 1], 1)]), q.clone()).unwrap();
        assert_eq!(f.denominator(), &q);
        let g = RationalFunction::new(p(2, &[(&[1, 1], -1)]), -&q).unwrap();
        assert_eq!(f, g);
        let again = RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(
            RationalFunction::new(LaurentPolynomial::one(1), LaurentPolynomial::zero(1)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn field_operations() {
        let a = RationalFunction::new(p(1, &[(&[0], 1)]), p(1, &[(&[0], 1), (&[1], -1)])).unwrap();
        let b = RationalFunction::new(p(1, &[(&[1], 1)]), p(1, &[(&[0], 1), (&[1], 1)])).unwrap();
        let s = &a + &b;
        assert!((&s - &b).is_equivalent(&a));
        assert!((&(&a * &b).try_div(&b).unwrap()).is_equivalent(&a));
        assert_eq!(a.pow(-2).unwrap().numerator(), &p(1, &[(&[0], 1), (&[1], -2), (&[2], 1)]));
        let d = a.derivative(0);
        assert!(d.is_equivalent(&a.pow(2).unwrap()));
    }
}
