//! Dense polynomials over a small prime field, low degree first.

pub(crate) type PolyP = Vec<u64>;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn deg(a: &PolyP) -> usize {
    a.len().saturating_sub(1)
}

pub(crate) fn sub(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub(crate) fn mul(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &PolyP, c: u64, p: u64) -> PolyP {
    trim(a.iter().map(|&x| mul_mod(x, c, p)).collect())
}

pub(crate) fn monic(a: &PolyP, p: u64) -> PolyP {
    match a.last() {
        Some(&l) => scale(a, inv(l, p), p),
        None => Vec::new(),
    }
}

pub(crate) fn divrem(a: &PolyP, d: &PolyP, p: u64) -> (PolyP, PolyP) {
    assert!(!d.is_empty(), "division by zero polynomial mod p");
    let dd = d.len() - 1;
    let li = inv(d[dd], p);
    let mut r = a.clone();
    if r.len() <= dd {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = mul_mod(r[i + dd], li, p);
        if c != 0 {
            for (j, &y) in d.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mul_mod(c, y, p)) % p;
            }
        }
        q[i] = c;
    }
    r.truncate(dd);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &PolyP, d: &PolyP, p: u64) -> PolyP {
    divrem(a, d, p).1
}

pub(crate) fn gcd(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Returns `(s, t)` with `s·a + t·b = 1` for coprime `a`, `b`.
pub(crate) fn bezout(a: &PolyP, b: &PolyP, p: u64) -> (PolyP, PolyP) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(r0.len(), 1, "inputs are not coprime");
    let c = inv(r0[0], p);
    (scale(&s0, c, p), scale(&t0, c, p))
}

pub(crate) fn derivative(a: &PolyP, p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
            .collect(),
    )
}

fn pow_mod_poly(base: &PolyP, mut e: u64, m: &PolyP, p: u64) -> PolyP {
    let mut r = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = rem(&mul(&r, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let li = inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mul_mod(*x, li, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p - mul_mod(f, m[r][j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[i][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp factorization of a monic square-free polynomial; factors are monic and sorted.
pub(crate) fn berlekamp(f: &PolyP, p: u64) -> Vec<PolyP> {
    let n = deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let xp = pow_mod_poly(&vec![0, 1], p, f, p);
    let mut rows = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = rem(&mul(&cur, &xp, p), f, p);
    }
    // v is fixed by Frobenius iff v·(Q − I) = 0; solve on the transpose.
    let mut mt = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let q = rows[i][j];
            mt[j][i] = if i == j { (q + p - 1) % p } else { q };
        }
    }
    let basis = nullspace(mt, p);
    let target = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis.iter().map(|v| trim(v.clone())) {
        if factors.len() == target {
            break;
        }
        if deg(&v) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for g in factors {
            if deg(&g) <= 1 {
                next.push(g);
                continue;
            }
            let mut rest = g;
            for s in 0..p {
                let shifted = sub(&v, &vec![s], p);
                let h = gcd(&rest, &shifted, p);
                if deg(&h) > 0 && deg(&h) < deg(&rest) {
                    rest = divrem(&rest, &h, p).0;
                    next.push(h);
                }
                if deg(&rest) <= 1 {
                    break;
                }
            }
            next.push(monic(&rest, p));
        }
        factors = next;
    }
    factors.sort();
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_product() {
        let p = 7;
        // (x+1)(x+2)(x^2+1) over F_7; x^2+1 is irreducible because 7 ≡ 3 mod 4.
        let f = mul(&mul(&vec![1, 1], &vec![2, 1], p), &vec![1, 0, 1], p);
        let fs = berlekamp(&f, p);
        assert_eq!(fs, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn bezout_identity() {
        let p = 11;
        let a = vec![3, 0, 1];
        let b = vec![5, 1];
        let (s, t) = bezout(&a, &b, p);
        let one = trim(
            mul(&s, &a, p)
                .iter()
                .zip(mul(&t, &b, p).iter().chain(std::iter::repeat(&0)))
                .map(|(x, y)| (x + y) % p)
                .collect(),
        );
        assert_eq!(one, vec![1]);
    }
}
