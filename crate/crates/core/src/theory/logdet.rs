use std::collections::HashMap;

use crate::algebra::{LaurentPolynomial, RationalFunction};
use crate::error::{Error, Result};

/// `det(θ_i f_j / f_j)` over the variables `vars[i]`, as a polynomial
/// determinant divided by `Π N_j·D_j`.
pub(crate) fn log_derivative_det(fs: &[RationalFunction], vars: &[usize]) -> Result<RationalFunction> {
    debug_assert_eq!(fs.len(), vars.len());
    let Some(first) = fs.first() else {
        return Err(Error::InvalidArgument("no functions given".into()));
    };
    let n = first.nvars();
    if let Some(f) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::VariableMismatch { left: n, right: f.nvars() });
    }
    if fs.iter().any(RationalFunction::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let entries: Vec<Vec<LaurentPolynomial>> = vars
        .iter()
        .map(|&i| {
            fs.iter()
                .map(|f| {
                    let (p, q) = (f.numerator(), f.denominator());
                    &(&p.euler(i) * q) - &(p * &q.euler(i))
                })
                .collect()
        })
        .collect();
    let mut det = laplace(&entries, 0, (1u32 << fs.len()) - 1, &mut HashMap::new());
    let mut den = LaurentPolynomial::one(n);
    for f in fs {
        for part in [f.numerator(), f.denominator()] {
            if part.is_monomial() {
                den = &den * part;
            } else if let Some(d) = det.div_exact(part) {
                det = d;
            } else {
                den = &den * part;
            }
        }
    }
    RationalFunction::new(det, den)
}

/// Cofactor expansion along rows, memoized on the set of unused columns.
fn laplace(
    m: &[Vec<LaurentPolynomial>],
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, LaurentPolynomial>,
) -> LaurentPolynomial {
    let nvars = m[0][0].nvars();
    if row == m.len() {
        return LaurentPolynomial::one(nvars);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = LaurentPolynomial::zero(nvars);
    let mut sign_negative = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !m[row][c].is_zero() {
            let minor = laplace(m, row + 1, cols & !(1 << c), memo);
            let t = &m[row][c] * &minor;
            acc = if sign_negative { &acc - &t } else { &acc + &t };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// `(x_1⋯x_m / f_1⋯f_m)·det(∂f_j/∂x_i)`, equivalently `det(θ_i f_j / f_j)`,
/// for `m` functions in `n` variables.
pub fn log_det_construct(fs: &[RationalFunction], n: usize) -> Result<RationalFunction> {
    crate::algebra::check_nvars(n)?;
    if fs.len() > n {
        return Err(Error::TooManyFunctions { functions: fs.len(), variables: n });
    }
    if let Some(f) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::VariableMismatch { left: n, right: f.nvars() });
    }
    if fs.is_empty() {
        return Ok(RationalFunction::one(n));
    }
    let vars: Vec<usize> = (0..fs.len()).collect();
    log_derivative_det(fs, &vars)
}
