//! Irreducible factorization over ℚ: square-free split, Berlekamp modulo a
//! small prime, Hensel lifting, and recombination of lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::integers::is_prime;
use super::modp::{self, PolyP};
use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// `unit · Π factor^multiplicity`, factors primitive over ℤ with positive
/// leading coefficient, sorted by degree and then by coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnivariateFactorization {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub unit: Rational,
    #[serde(serialize_with = "crate::report::ser_factor_list")]
    pub factors: Vec<(UniPoly, u32)>,
}

impl UnivariateFactorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }
}

pub fn factor_univariate(u: &UniPoly) -> Result<UnivariateFactorization> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (unit, prim) = u.primitive_part();
    let mut factors = Vec::new();
    for (g, m) in prim.squarefree_decomposition() {
        let (_, g) = g.primitive_part();
        for h in factor_squarefree(&g) {
            factors.push((h, m));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.int_coeffs().cmp(&b.int_coeffs()))
            .then(ma.cmp(mb))
    });
    Ok(UnivariateFactorization { unit, factors })
}

/// Factors a primitive square-free integer polynomial with positive leading coefficient.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    match f.deg() {
        0 => return Vec::new(),
        1 => return vec![f.clone()],
        _ => {}
    }
    if f.coeff(0).is_zero() {
        let rest = f.div_exact(&UniPoly::x()).expect("x divides");
        let mut out = vec![UniPoly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let coeffs = f.int_coeffs().expect("primitive integer polynomial");
    let lc = coeffs.last().unwrap().clone();

    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 5 && p < 10_000 {
        p += 1;
        if !is_prime(p) || lc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let fp = reduce(&coeffs, p);
        let dfp = modp::derivative(&fp, p);
        if modp::deg(&modp::gcd(&fp, &dfp, p)) > 0 {
            continue;
        }
        tried += 1;
        let fs = modp::berlekamp(&modp::monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, modular) = best.expect("a lucky prime exists below 10000");
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Coefficients of any factor of lc·f are bounded by 2^deg·|lc|·‖f‖₁.
    let norm1: BigInt = coeffs.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * (BigInt::one() << f.deg()) * lc.abs() * norm1;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = bp.clone();
    while modulus <= bound {
        modulus *= &bp;
        k += 1;
    }
    let lifted = hensel_lift(&coeffs, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn reduce(c: &[BigInt], p: u64) -> PolyP {
    let bp = BigInt::from(p);
    modp::trim(c.iter().map(|x| x.mod_floor(&bp).to_u64().unwrap()).collect())
}

fn lift_to_int(a: &PolyP) -> Vec<BigInt> {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

fn int_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    int_trim(a.iter().map(|x| x.mod_floor(m)).collect())
}

fn int_add_scaled(a: &[BigInt], b: &PolyP, s: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or(0);
            x + s * BigInt::from(y)
        })
        .collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let g = a.extended_gcd(m);
    assert!(g.gcd.is_one(), "not invertible");
    g.x.mod_floor(m)
}

/// Lifts `f ≡ lc·Π g_i (mod p)` with monic `g_i` to the same shape modulo `p^k`.
fn hensel_lift(f: &[BigInt], modular: &[PolyP], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let bp = BigInt::from(p);
    let pk = bp.pow(k);
    let lc = f.last().unwrap().clone();
    let lcp = lc.mod_floor(&bp).to_u64().unwrap();
    let mut target: Vec<BigInt> = f.to_vec();
    let mut out = Vec::new();
    for i in 0..modular.len() - 1 {
        let a = modular[i].clone();
        let b = modular[i + 1..]
            .iter()
            .fold(vec![lcp], |acc, g| modp::mul(&acc, g, p));
        let (_, t) = modp::bezout(&a, &b, p);
        let mut big_a = lift_to_int(&a);
        let mut big_b = lift_to_int(&b);
        let mut pj = bp.clone();
        for _ in 1..k {
            let prod = int_mul(&big_a, &big_b);
            let n = target.len().max(prod.len());
            let diff: Vec<BigInt> = (0..n)
                .map(|idx| {
                    target.get(idx).cloned().unwrap_or_default()
                        - prod.get(idx).cloned().unwrap_or_default()
                })
                .collect();
            let e: Vec<BigInt> = diff.iter().map(|c| c / &pj).collect();
            let ep = reduce(&e, p);
            let da = modp::rem(&modp::mul(&t, &ep, p), &a, p);
            let num = modp::sub(&ep, &modp::mul(&b, &da, p), p);
            let (db, r) = modp::divrem(&num, &a, p);
            debug_assert!(r.is_empty());
            big_a = int_add_scaled(&big_a, &da, &pj);
            big_b = int_add_scaled(&big_b, &db, &pj);
            pj *= &bp;
            big_a = int_mod(&big_a, &pk);
            big_b = int_mod(&big_b, &pk);
        }
        out.push(big_a);
        target = big_b;
    }
    let l = target.last().unwrap().clone();
    let li = mod_inverse(&l, &pk);
    out.push(int_mod(&target.iter().map(|c| c * &li).collect::<Vec<_>>(), &pk));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m / 2;
    a.iter()
        .map(|x| {
            let r = x.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn recombine(f: &UniPoly, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = rest.lc().to_integer();
        let mut found = None;
        for subset in combinations(lifted.len(), size) {
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| int_mod(&int_mul(&acc, &lifted[i]), modulus));
            let cand = UniPoly::from_bigints(&symmetric(&prod, modulus)).primitive_part().1;
            let c0 = cand.coeff(0).to_integer();
            if c0.is_zero() || !rest.coeff(0).to_integer().is_multiple_of(&c0) {
                continue;
            }
            if let Some(q) = rest.div_exact(&cand) {
                if q.int_coeffs().is_some() {
                    found = Some((subset, cand, q));
                    break;
                }
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.deg() > 0 {
        out.push(rest.primitive_part().1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::integers::rat;

    fn ints(f: &UniPoly) -> Vec<i64> {
        f.int_coeffs().unwrap().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn difference_of_squares() {
        let f = factor_univariate(&UniPoly::from_ints(&[1, 0, -1])).unwrap();
        assert_eq!(f.unit, rat(-1));
        let fs: Vec<_> = f.factors.iter().map(|(g, m)| (ints(g), *m)).collect();
        assert_eq!(fs, vec![(vec![-1, 1], 1), (vec![1, 1], 1)]);
        assert_eq!(f.expand(), UniPoly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn irreducible_quadratic() {
        let f = factor_univariate(&UniPoly::from_ints(&[1, -1, -1])).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);
    }

    #[test]
    fn cubic_with_irreducible_quadratic() {
        let a = UniPoly::from_ints(&[1, -3]);
        let b = UniPoly::from_ints(&[1, -3, 3]);
        let f = factor_univariate(&(&a * &b)).unwrap();
        let fs: Vec<_> = f.factors.iter().map(|(g, _)| ints(g)).collect();
        assert_eq!(fs, vec![vec![-1, 3], vec![1, -3, 3]]);
    }

    #[test]
    fn swinnerton_dyer_like_needs_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over ℚ but splits modulo every prime.
        let f = UniPoly::from_ints(&[1, 0, -10, 0, 1]);
        let fac = factor_univariate(&f).unwrap();
        assert_eq!(fac.factors.len(), 1);
        // (x^2 - 2)(x^2 - 3)
        let g = &UniPoly::from_ints(&[-2, 0, 1]) * &UniPoly::from_ints(&[-3, 0, 1]);
        assert_eq!(factor_univariate(&g).unwrap().factors.len(), 2);
    }

    #[test]
    fn multiplicities_and_x_factor() {
        let f = &(&UniPoly::from_ints(&[0, 2]).pow(2) * &UniPoly::from_ints(&[3, 1]).pow(3))
            * &UniPoly::from_ints(&[1, 1, 1]);
        let fac = factor_univariate(&f).unwrap();
        let fs: Vec<_> = fac.factors.iter().map(|(g, m)| (ints(g), *m)).collect();
        assert_eq!(fs, vec![(vec![0, 1], 2), (vec![3, 1], 3), (vec![1, 1, 1], 1)]);
        assert_eq!(fac.unit, rat(4));
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(factor_univariate(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }
}
