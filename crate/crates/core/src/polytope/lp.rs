//! Exact feasibility of `A·x = b, x ≥ 0` by phase-one simplex with Bland's rule.

use num_traits::{Signed, Zero};

use crate::algebra::Rational;

/// A nonnegative solution of `a·x = b`, if one exists.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }
    let width = n + m;
    // Row layout: [x (n) | artificials (m) | rhs].
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r: Vec<Rational> = row.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        r.extend((0..m).map(|j| if j == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
        r.push(if flip { -bi } else { bi.clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..width).collect();
    let mut cost = vec![Rational::zero(); width + 1];
    for r in &t {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width] -= &r[width];
    }
    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, r) in t.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (pr, _) = leave.expect("phase one objective is bounded");
        let inv = t[pr][enter].recip();
        for x in t[pr].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = t[pr].clone();
        for (i, r) in t.iter_mut().enumerate() {
            if i != pr && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    if !cost[width].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width].clone();
        }
    }
    Some(x)
}
