use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer exponent vector of fixed length.
///
/// Ordered graded-lexicographically: first by total degree, then so that
/// larger leading exponents come first within a degree. With this order the
/// smallest element of a finite support is always an extreme point of its
/// convex hull.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Box<[i64]>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries.into_boxed_slice())
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n].into_boxed_slice())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector::new(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.0.to_vec()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> Self {
        ExponentVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Value of the integer linear form `w` at this vector.
    pub fn dot(&self, w: &[i64]) -> i64 {
        debug_assert_eq!(self.len(), w.len());
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    pub fn is_divisible_by(&self, d: i64) -> bool {
        self.0.iter().all(|a| a % d == 0)
    }

    /// Componentwise exact quotient; `None` if some entry is not divisible.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        self.is_divisible_by(d)
            .then(|| ExponentVector(self.0.iter().map(|a| a / d).collect()))
    }

    pub fn componentwise_min(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn componentwise_max(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// True when every entry is at least the corresponding entry of `other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector::new(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        ExponentVector::new(v.to_vec())
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
