use super::logdet::log_derivative_det;
use crate::algebra::{LaurentPolynomial, RationalFunction};
use crate::error::{Error, Result};

/// Fails with `NotLinear(i)` unless every exponent of `q` in each of `vars` is 0 or 1.
pub(crate) fn check_linear_in(q: &LaurentPolynomial, vars: &[usize]) -> Result<()> {
    for (e, _) in q.terms() {
        if let Some(&i) = vars.iter().find(|&&i| !(0..=1).contains(&e[i])) {
            return Err(Error::NotLinear(i));
        }
    }
    Ok(())
}

/// `(q_k x^k / Q)·det(θ_i f_j / f_j)`, where `q_k x^k` collects the terms of
/// `Q` whose exponents in `linear_vars` equal `k`, and the determinant runs
/// over `det_vars`.
pub fn qdet_construct(
    q: &LaurentPolynomial,
    linear_vars: &[usize],
    k: &[i64],
    fs: &[RationalFunction],
    det_vars: &[usize],
) -> Result<RationalFunction> {
    let n = q.nvars();
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if k.len() != linear_vars.len() {
        return Err(Error::ExponentLength { expected: linear_vars.len(), got: k.to_vec() });
    }
    if fs.len() != det_vars.len() {
        return Err(Error::InvalidArgument(format!(
            "{} functions for {} determinant variables",
            fs.len(),
            det_vars.len()
        )));
    }
    if let Some(&i) = linear_vars.iter().chain(det_vars).find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("variable index {i} out of range")));
    }
    check_linear_in(q, linear_vars)?;
    let qk = q.filter_terms(|e| linear_vars.iter().zip(k).all(|(&i, &ki)| e[i] == ki));
    let head = RationalFunction::new(qk, q.clone())?;
    if fs.is_empty() {
        return Ok(head);
    }
    if let Some(f) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::VariableMismatch { left: n, right: f.nvars() });
    }
    Ok(&head * &log_derivative_det(fs, det_vars)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPolynomial as L;

    #[test]
    fn lucas_in_two_variables() {
        let q = L::from_int_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[2, 0], -1), (&[0, 1], -1)]).unwrap();
        let base = L::from_int_terms(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[2, 0], -1)]).unwrap();
        let f = RationalFunction::new(L::from_int_terms(2, &[(&[2, 0], 1)]).unwrap(), base).unwrap();
        let got = qdet_construct(&q, &[1], &[0], &[f], &[0]).unwrap();
        let want = RationalFunction::new(L::from_int_terms(2, &[(&[0, 0], 2), (&[1, 0], -1)]).unwrap(), q).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn empty_determinant() {
        let q = L::from_int_terms(2, &[(&[0, 0], 1), (&[1, 1], -3)]).unwrap();
        let got = qdet_construct(&q, &[0], &[1], &[], &[]).unwrap();
        let want = RationalFunction::new(L::from_int_terms(2, &[(&[1, 1], -3)]).unwrap(), q).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn rejects_nonlinear() {
        let q = L::from_int_terms(2, &[(&[0, 0], 1), (&[0, 2], -1)]).unwrap();
        assert!(matches!(qdet_construct(&q, &[1], &[0], &[], &[]), Err(Error::NotLinear(1))));
    }
}
