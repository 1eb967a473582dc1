use std::collections::BTreeMap;

use super::TruncatedLaurentSeries;
use crate::algebra::integers::is_prime;
use crate::error::{Error, Result};

/// `U_p`: the coefficient at `k` of the result is the coefficient at `p·k`.
pub fn apply_up(s: &TruncatedLaurentSeries, p: u64) -> Result<TruncatedLaurentSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    apply_u(s, p)
}

/// Coefficient extraction along multiples of any positive integer `m`; for
/// composite `m` this is the composition of the prime extractions.
pub fn apply_u(s: &TruncatedLaurentSeries, m: u64) -> Result<TruncatedLaurentSeries> {
    let mi = i64::try_from(m)
        .ok()
        .filter(|&x| x > 0)
        .ok_or_else(|| Error::InvalidArgument(format!("extraction step {m}")))?;
    let coeffs: BTreeMap<_, _> = s
        .coefficients()
        .filter_map(|(k, c)| k.div_exact(mi).map(|q| (q, c.clone())))
        .collect();
    let scale = mi
        .checked_pow(s.nvars() as u32 - 1)
        .ok_or_else(|| Error::InvalidArgument("vertex scaling overflow".into()))?;
    Ok(s.with_parts(s.vertex().scale(scale), s.bound().div_euclid(mi), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integers::rat;
    use crate::algebra::{ExponentVector, LaurentPolynomial, RationalFunction};
    use crate::series::expand;

    fn uni(p: &[(&[i64], i64)], q: &[(&[i64], i64)]) -> RationalFunction {
        RationalFunction::new(
            LaurentPolynomial::from_int_terms(1, p).unwrap(),
            LaurentPolynomial::from_int_terms(1, q).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn geometric_series_fixed() {
        let s = expand(&uni(&[(&[0], 1)], &[(&[0], 1), (&[1], -1)]), 20).unwrap();
        let u = apply_up(&s, 3).unwrap();
        assert_eq!(u.bound(), 6);
        for k in 0..=6 {
            assert_eq!(u.coeff(&ExponentVector::new(vec![k])).unwrap(), rat(1));
        }
    }

    #[test]
    fn even_extraction() {
        let s = expand(&uni(&[(&[0], 1)], &[(&[0], 1), (&[2], -1)]), 20).unwrap();
        let u = apply_up(&s, 2).unwrap();
        let t = expand(&uni(&[(&[0], 1)], &[(&[0], 1), (&[1], -1)]), 10).unwrap();
        for k in 0..=10 {
            let e = ExponentVector::new(vec![k]);
            assert_eq!(u.coeff(&e).unwrap(), t.coeff(&e).unwrap());
        }
        assert!(matches!(apply_up(&s, 4), Err(Error::NotPrime(4))));
    }
}
