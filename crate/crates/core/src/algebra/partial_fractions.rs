use serde::Serialize;

use super::factor::factor_univariate;
use super::{RationalFunction, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialFractionTerm {
    #[serde(serialize_with = "crate::report::ser_unipoly")]
    pub factor: UniPoly,
    pub power: u32,
    #[serde(serialize_with = "crate::report::ser_unipoly")]
    pub numerator: UniPoly,
}

/// `polynomial_part + Σ numerator / factor^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialFractions {
    #[serde(serialize_with = "crate::report::ser_unipoly")]
    pub polynomial_part: UniPoly,
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFractions {
    /// Sums all parts back into a single univariate rational function.
    pub fn recombine(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_polynomial(self.polynomial_part.to_laurent());
        for t in &self.terms {
            let term = RationalFunction::new(t.numerator.to_laurent(), t.factor.pow(t.power).to_laurent())
                .expect("factor powers are nonzero");
            acc = &acc + &term;
        }
        acc
    }
}

/// Decomposes `p/q` over the irreducible factorization of `q`. Within one
/// factor, terms run from the highest power down.
pub fn partial_fractions(p: &UniPoly, q: &UniPoly) -> Result<PartialFractions> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let fac = factor_univariate(q)?;
    let (polynomial_part, r) = p.divrem(q);
    let r = r.scale(&fac.unit.recip());
    let monic_q = q.scale(&fac.unit.recip());
    let mut terms = Vec::new();
    for (f, m) in &fac.factors {
        let block = f.pow(*m);
        let cofactor = monic_q.div_exact(&block).expect("factor divides");
        let (_, a, _) = cofactor.ext_gcd(&block);
        let mut num = (&r * &a).rem(&block);
        let mut digits = Vec::with_capacity(*m as usize);
        for _ in 0..*m {
            let (qq, rr) = num.divrem(f);
            digits.push(rr);
            num = qq;
        }
        for (j, c) in digits.into_iter().enumerate().rev() {
            if !c.is_zero() {
                terms.push(PartialFractionTerm { factor: f.clone(), power: m - j as u32, numerator: c });
            }
        }
    }
    terms.sort_by(|a, b| {
        let ia = fac.factors.iter().position(|(f, _)| *f == a.factor);
        let ib = fac.factors.iter().position(|(f, _)| *f == b.factor);
        ia.cmp(&ib).then(b.power.cmp(&a.power))
    });
    Ok(PartialFractions { polynomial_part, terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(p: &[i64], q: &[i64]) -> RationalFunction {
        RationalFunction::new(UniPoly::from_ints(p).to_laurent(), UniPoly::from_ints(q).to_laurent()).unwrap()
    }

    #[test]
    fn example_with_polynomial_part() {
        let p = UniPoly::from_ints(&[1, 2, -1]);
        let q = UniPoly::from_ints(&[1, 0, -1]);
        let d = partial_fractions(&p, &q).unwrap();
        assert_eq!(d.polynomial_part, UniPoly::from_ints(&[1]));
        assert_eq!(d.terms.len(), 2);
        assert!(d.recombine().is_equivalent(&rf(&[1, 2, -1], &[1, 0, -1])));
        // 1/(1 − x) + x/(1 + x) is the same function.
        let other = &rf(&[1], &[1, -1]) + &rf(&[0, 1], &[1, 1]);
        assert!(d.recombine().is_equivalent(&other));
    }

    #[test]
    fn irreducible_denominator_single_term() {
        let d = partial_fractions(&UniPoly::from_ints(&[3, 1]), &UniPoly::from_ints(&[1, -1, -1])).unwrap();
        assert!(d.polynomial_part.is_zero());
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].power, 1);
    }

    #[test]
    fn repeated_factor() {
        let q = &UniPoly::from_ints(&[1, -1]).pow(2) * &UniPoly::from_ints(&[1, 1]);
        let d = partial_fractions(&UniPoly::one(), &q).unwrap();
        let powers: Vec<_> = d.terms.iter().map(|t| (t.factor.clone(), t.power)).collect();
        assert_eq!(
            powers,
            vec![
                (UniPoly::from_ints(&[-1, 1]), 2),
                (UniPoly::from_ints(&[-1, 1]), 1),
                (UniPoly::from_ints(&[1, 1]), 1)
            ]
        );
        assert!(d.recombine().is_equivalent(&rf(&[1], &[1, -1, -1, 1])));
        assert!(partial_fractions(&UniPoly::one(), &UniPoly::zero()).is_err());
    }
}
