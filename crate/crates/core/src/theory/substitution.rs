use std::collections::HashMap;

use super::log_det_construct;
use crate::algebra::{ExponentVector, LaurentPolynomial, RationalFunction};
use crate::error::{Error, Result};

fn check_args(f: &RationalFunction, gs: &[RationalFunction]) -> Result<usize> {
    if gs.len() != f.nvars() {
        return Err(Error::VariableMismatch { left: f.nvars(), right: gs.len() });
    }
    let m = gs[0].nvars();
    if let Some(g) = gs.iter().find(|g| g.nvars() != m) {
        return Err(Error::VariableMismatch { left: m, right: g.nvars() });
    }
    if gs.iter().any(RationalFunction::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    Ok(m)
}

/// `f(g_1, …, g_n)`. Writing `g_j = a_j/b_j`, both sides of `f` are
/// multiplied by `Π a_j^{-lo_j} b_j^{hi_j}` where `[lo_j, hi_j]` is the range
/// of exponents of `x_j` in `f`, so that only nonnegative powers occur.
pub fn compose(f: &RationalFunction, gs: &[RationalFunction]) -> Result<RationalFunction> {
    let m = check_args(f, gs)?;
    let (p, q) = (f.numerator(), f.denominator());
    let n = f.nvars();
    let lo = p.min_exponents().map_or(q.min_exponents().unwrap(), |a| a.componentwise_min(&q.min_exponents().unwrap()));
    let hi = p.max_exponents().map_or(q.max_exponents().unwrap(), |a| a.componentwise_max(&q.max_exponents().unwrap()));
    let mut cache: HashMap<(usize, bool, i64), LaurentPolynomial> = HashMap::new();
    let mut power = |j: usize, top: bool, e: i64| -> LaurentPolynomial {
        cache
            .entry((j, top, e))
            .or_insert_with(|| {
                let base = if top { gs[j].numerator() } else { gs[j].denominator() };
                base.pow(u32::try_from(e).expect("exponent range fits"))
            })
            .clone()
    };
    let mut eval = |poly: &LaurentPolynomial| -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::zero(m);
        for (k, c) in poly.terms() {
            let mut t = LaurentPolynomial::constant(m, c.clone());
            for j in 0..n {
                t = &t * &power(j, true, k[j] - lo[j]);
                t = &t * &power(j, false, hi[j] - k[j]);
            }
            acc = &acc + &t;
        }
        acc
    };
    let num = eval(p);
    let den = eval(q);
    if den.is_zero() {
        return Err(Error::UndefinedSubstitution);
    }
    RationalFunction::new(num, den)
}

fn embed(g: &RationalFunction, n: usize, j: usize) -> Result<RationalFunction> {
    if g.nvars() != 1 {
        return Err(Error::NotUnivariate(g.nvars()));
    }
    let lift = |p: &LaurentPolynomial| {
        p.map_exponents(n, |k| {
            let mut e = vec![0; n];
            e[j] = k[0];
            Ok(ExponentVector::new(e))
        })
    };
    RationalFunction::new(lift(g.numerator())?, lift(g.denominator())?)
}

/// `(Π_j x_j g_j'(x_j) / g_j(x_j))·f(g_1(x_1), …, g_n(x_n))` for univariate `g_j`.
pub fn substitute_univariate(f: &RationalFunction, gs: &[RationalFunction]) -> Result<RationalFunction> {
    check_args(f, gs)?;
    let n = f.nvars();
    let embedded = gs.iter().enumerate().map(|(j, g)| embed(g, n, j)).collect::<Result<Vec<_>>>()?;
    let mut acc = compose(f, &embedded)?;
    for (j, g) in embedded.iter().enumerate() {
        acc = &acc * &g.log_derivative(j)?;
    }
    Ok(acc)
}

/// `(x_1⋯x_n / g_1⋯g_n)·det(∂g_j/∂x_i)·f(g_1, …, g_n)`.
pub fn substitute_multivariate(f: &RationalFunction, gs: &[RationalFunction]) -> Result<RationalFunction> {
    let m = check_args(f, gs)?;
    let jac = log_det_construct(gs, m)?;
    if jac.is_zero() {
        return Ok(RationalFunction::zero(m));
    }
    Ok(&jac * &compose(f, gs)?)
}
