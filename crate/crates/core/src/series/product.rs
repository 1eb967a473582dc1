use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use super::{enumerate_region, TruncatedLaurentSeries};
use crate::algebra::integers::format_rational;
use crate::algebra::{ExponentVector, Rational};
use crate::error::{Error, Result};
use crate::polytope::GradingForm;

/// `Π (1 − a_k x^k)` over the stored entries, exact up to α-degree `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFactorization {
    pub grading: GradingForm,
    pub bound: i64,
    /// Nonzero exponents `a_k`, in order of α-degree.
    pub entries: Vec<(ExponentVector, Rational)>,
}

#[derive(Serialize)]
struct EntryJson {
    k: ExponentVector,
    a: String,
}

impl ProductFactorization {
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<EntryJson> = self
            .entries
            .iter()
            .map(|(k, a)| EntryJson { k: k.clone(), a: format_rational(a) })
            .collect();
        serde_json::json!({ "grading": self.grading.weights, "bound": self.bound, "entries": entries })
    }

    /// Coefficients of the truncated product on every point it reaches.
    pub fn expand(&self) -> BTreeMap<ExponentVector, Rational> {
        let n = self.grading.weights.len();
        let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        acc.insert(ExponentVector::zeros(n), Rational::one());
        for (k, a) in &self.entries {
            let mut next = acc.clone();
            for (e, c) in &acc {
                let t = e.add(k);
                if self.grading.eval(&t) <= self.bound {
                    let v = next.entry(t).or_insert_with(Rational::zero);
                    *v -= a * c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
        acc
    }

    /// Whether the product agrees with `s` on every coefficient up to the bound.
    pub fn reproduces(&self, s: &TruncatedLaurentSeries) -> bool {
        let prod = self.expand();
        let stored_ok = s
            .coefficients()
            .all(|(k, c)| prod.get(k).map_or(c.is_zero(), |x| x == c));
        stored_ok && prod.keys().all(|k| s.coeff(k).is_ok_and(|c| Some(&c) == prod.get(k)))
    }
}

/// Writes a series with constant term 1 as `Π (1 − a_k x^k)`, determining the
/// `a_k` degree by degree.
pub fn product_factorization(s: &TruncatedLaurentSeries) -> Result<ProductFactorization> {
    let n = s.nvars();
    let zero = ExponentVector::zeros(n);
    let c0 = s.coeff(&zero)?;
    if !c0.is_one() {
        return Err(Error::ConstantTermNotOne(format_rational(&c0)));
    }
    let grading = s.grading().clone();
    let gens: Vec<ExponentVector> = s
        .coefficients()
        .filter(|(k, c)| !k.is_zero() && !c.is_zero())
        .map(|(k, _)| k.clone())
        .collect();
    if gens.iter().any(|k| grading.eval(k) <= 0) {
        return Err(Error::NotProperCone);
    }
    let bound = s.bound();
    let points = enumerate_region([zero.clone()], &gens, &grading, bound);
    let index: HashMap<&ExponentVector, usize> = points.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut h: Vec<Rational> = points.iter().map(|k| s.coeff(k).unwrap_or_default()).collect();
    let mut entries = Vec::new();
    for (pos, k) in points.iter().enumerate().skip(1) {
        if h[pos].is_zero() {
            continue;
        }
        let a = -h[pos].clone();
        // Divide the running quotient by (1 − a x^k), in α order.
        for j in 0..points.len() {
            if let Some(&i) = index.get(&points[j].sub(k)) {
                let t = &a * &h[i];
                h[j] += t;
            }
        }
        entries.push((k.clone(), a));
    }
    Ok(ProductFactorization { grading, bound, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integers::rat;
    use crate::algebra::{LaurentPolynomial, RationalFunction};
    use crate::series::expand;

    #[test]
    fn already_a_product() {
        let s = TruncatedLaurentSeries::from_coefficients(
            1,
            GradingForm::new(vec![1]),
            8,
            [(ExponentVector::new(vec![0]), rat(1)), (ExponentVector::new(vec![1]), rat(-1))],
        )
        .unwrap();
        let f = product_factorization(&s).unwrap();
        assert_eq!(f.entries, vec![(ExponentVector::new(vec![1]), rat(1))]);
        assert!(f.reproduces(&s));
    }

    #[test]
    fn geometric_series_binary_pattern() {
        let g = RationalFunction::new(
            LaurentPolynomial::one(1),
            LaurentPolynomial::from_int_terms(1, &[(&[0], 1), (&[1], -1)]).unwrap(),
        )
        .unwrap();
        let s = expand(&g, 20).unwrap();
        let f = product_factorization(&s).unwrap();
        let ks: Vec<i64> = f.entries.iter().map(|(k, _)| k[0]).collect();
        assert_eq!(ks, vec![1, 2, 4, 8, 16]);
        assert!(f.entries.iter().all(|(_, a)| *a == rat(-1)));
        assert!(f.reproduces(&s));
    }

    #[test]
    fn constant_series_and_bad_constant() {
        let one = TruncatedLaurentSeries::from_coefficients(
            2,
            GradingForm::new(vec![1, 1]),
            5,
            [(ExponentVector::zeros(2), rat(1))],
        )
        .unwrap();
        assert!(product_factorization(&one).unwrap().entries.is_empty());
        let two = TruncatedLaurentSeries::from_coefficients(
            1,
            GradingForm::new(vec![1]),
            5,
            [(ExponentVector::zeros(1), rat(2))],
        )
        .unwrap();
        assert!(matches!(product_factorization(&two), Err(Error::ConstantTermNotOne(_))));
    }
}
