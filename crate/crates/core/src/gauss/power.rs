use num_bigint::BigInt;
use num_integer::Integer;

use crate::algebra::integers::is_prime;

/// Whether `a^{m·p^r} ≡ a^{m·p^{r−1}} (mod p^r)` for all `0 ≤ m ≤ m_max` and
/// `1 ≤ r ≤ r_max`, by direct modular powering.
pub fn check_integer_power_congruence(a: &BigInt, p: u64, r_max: u32, m_max: u64) -> bool {
    debug_assert!(is_prime(p));
    let bp = BigInt::from(p);
    (1..=r_max).all(|r| {
        let modulus = bp.pow(r);
        let base = a.mod_floor(&modulus);
        let hi = bp.pow(r);
        let lo = bp.pow(r - 1);
        (0..=m_max).all(|m| {
            let m = BigInt::from(m);
            base.modpow(&(&m * &hi), &modulus) == base.modpow(&(&m * &lo), &modulus)
        })
    })
}
