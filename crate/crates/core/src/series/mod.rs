//! Truncated Laurent expansions at Newton polytope vertices.

mod product;
mod up;

pub use product::{product_factorization, ProductFactorization};
pub use up::{apply_u, apply_up};

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::ops::{Mul, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::integers::format_rational;
use crate::algebra::{ExponentVector, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::polytope::{newton_polytope, GradingForm};
use crate::report::SCHEMA_VERSION;

/// Coefficients of a Laurent expansion on the region `α(k) ≤ bound`.
///
/// Only the points reachable from the numerator support by adding cone
/// generators are stored; every other point with `α(k) ≤ bound` has
/// coefficient zero. Queries above the bound fail instead of returning zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLaurentSeries {
    nvars: usize,
    vertex: ExponentVector,
    grading: GradingForm,
    bound: i64,
    cone_generators: Vec<ExponentVector>,
    coeffs: BTreeMap<ExponentVector, Rational>,
}

impl TruncatedLaurentSeries {
    /// Wraps explicitly given coefficients. Zero entries are kept, points above
    /// the bound are rejected.
    pub fn from_coefficients(
        nvars: usize,
        grading: GradingForm,
        bound: i64,
        coeffs: impl IntoIterator<Item = (ExponentVector, Rational)>,
    ) -> Result<Self> {
        crate::algebra::check_nvars(nvars)?;
        if grading.weights.len() != nvars {
            return Err(Error::DimensionMismatch { left: grading.weights.len(), right: nvars });
        }
        let mut map = BTreeMap::new();
        for (k, c) in coeffs {
            if k.len() != nvars {
                return Err(Error::ExponentLength { expected: nvars, got: k.to_vec() });
            }
            if grading.eval(&k) > bound {
                return Err(Error::OutOfTruncation(k.to_vec()));
            }
            map.insert(k, c);
        }
        let cone_generators = map.keys().filter(|k| !k.is_zero()).cloned().collect();
        Ok(TruncatedLaurentSeries {
            nvars,
            vertex: ExponentVector::zeros(nvars),
            grading,
            bound,
            cone_generators,
            coeffs: map,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn vertex(&self) -> &ExponentVector {
        &self.vertex
    }

    pub fn grading(&self) -> &GradingForm {
        &self.grading
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Largest α-degree up to which every coefficient is exact. All stored
    /// coefficients are exact, so this equals the bound.
    pub fn safe_bound(&self) -> i64 {
        self.bound
    }

    pub fn cone_generators(&self) -> &[ExponentVector] {
        &self.cone_generators
    }

    /// Stored points and their coefficients in graded order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> + '_ {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Whether the coefficient at `k` is known.
    pub fn knows(&self, k: &ExponentVector) -> bool {
        k.len() == self.nvars && self.grading.eval(k) <= self.bound
    }

    pub fn coeff(&self, k: &ExponentVector) -> Result<Rational> {
        if k.len() != self.nvars {
            return Err(Error::ExponentLength { expected: self.nvars, got: k.to_vec() });
        }
        if self.grading.eval(k) > self.bound {
            return Err(Error::OutOfTruncation(k.to_vec()));
        }
        Ok(self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero))
    }

    /// One line `k1 … kn : num/den` per stored coefficient.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (k, c) in &self.coeffs {
            let _ = writeln!(s, "{k} : {}", format_rational(c));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry<'a> {
            k: &'a ExponentVector,
            c: String,
        }
        serde_json::json!({
            "schema": SCHEMA_VERSION,
            "vertex": self.vertex,
            "grading": self.grading.weights,
            "bound": self.bound,
            "coefficients": self
                .coeffs
                .iter()
                .map(|(k, c)| Entry { k, c: format_rational(c) })
                .collect::<Vec<_>>(),
        })
    }

    /// Checks `series · Q = P` on every monomial of α-degree at most the safe bound.
    pub fn satisfies_identity(&self, f: &RationalFunction) -> bool {
        let (p, q) = (f.numerator(), f.denominator());
        let v = &self.vertex;
        let mut keys: Vec<ExponentVector> = self.coeffs.keys().cloned().collect();
        keys.extend(p.support().map(|e| e.sub(v)).filter(|k| self.knows(k)));
        keys.into_iter().all(|k| {
            let kv = k.add(v);
            let mut acc = Rational::zero();
            for (e, c) in q.terms() {
                let idx = kv.sub(e);
                match self.coeff(&idx) {
                    Ok(x) => acc += c * x,
                    Err(_) => return false,
                }
            }
            acc == p.coeff(&kv)
        })
    }
}

/// Points `s + Σ n_j·w_j` with `s` in `starts`, `n_j ≥ 0` and `α ≤ bound`,
/// sorted by α-degree and then in graded order.
pub(crate) fn enumerate_region(
    starts: impl IntoIterator<Item = ExponentVector>,
    gens: &[ExponentVector],
    grading: &GradingForm,
    bound: i64,
) -> Vec<ExponentVector> {
    let mut seen: HashMap<ExponentVector, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    for s in starts {
        if grading.eval(&s) <= bound && seen.insert(s.clone(), ()).is_none() {
            queue.push_back(s);
        }
    }
    while let Some(k) = queue.pop_front() {
        for w in gens {
            let next = k.add(w);
            if grading.eval(&next) <= bound && !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                queue.push_back(next);
            }
        }
    }
    let mut pts: Vec<ExponentVector> = seen.into_keys().collect();
    pts.sort_by(|a, b| grading.eval(a).cmp(&grading.eval(b)).then_with(|| a.cmp(b)));
    pts
}

fn run_recursion<T>(
    points: &[ExponentVector],
    start: impl Fn(&ExponentVector) -> T,
    steps: &[(ExponentVector, T)],
    finish: impl Fn(T) -> T,
) -> Vec<T>
where
    T: Clone + Zero + SubAssign,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let index: HashMap<&ExponentVector, usize> = points.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut vals: Vec<T> = Vec::with_capacity(points.len());
    for k in points {
        let mut acc = start(k);
        for (w, c) in steps {
            if let Some(&j) = index.get(&k.sub(w)) {
                let t = c * &vals[j];
                acc -= t;
            }
        }
        vals.push(finish(acc));
    }
    vals
}

/// Expands `F` at the vertex `v` of its denominator's Newton polytope, with
/// the default grading form of that vertex.
pub fn expand_at_vertex(f: &RationalFunction, v: &ExponentVector, bound: i64) -> Result<TruncatedLaurentSeries> {
    expand_with_grading(f, v, None, bound)
}

/// As [`expand_at_vertex`], optionally with an explicit grading form, which
/// must be positive on every other support point of the denominator shifted by `v`.
pub fn expand_with_grading(
    f: &RationalFunction,
    v: &ExponentVector,
    grading: Option<GradingForm>,
    bound: i64,
) -> Result<TruncatedLaurentSeries> {
    if bound < 0 {
        return Err(Error::InvalidArgument(format!("negative bound {bound}")));
    }
    let n = f.nvars();
    if v.len() != n {
        return Err(Error::ExponentLength { expected: n, got: v.to_vec() });
    }
    let (p, q) = (f.numerator(), f.denominator());
    let np = newton_polytope(q)?;
    let grading = match grading {
        Some(g) => {
            np.validate_grading(v, &g)?;
            g
        }
        None => np.grading_form(v)?,
    };
    let qv = q.coeff(v);
    debug_assert!(!qv.is_zero());
    let gens: Vec<ExponentVector> = q.support().filter(|e| *e != v).map(|e| e.sub(v)).collect();
    let points = enumerate_region(p.support().map(|e| e.sub(v)), &gens, &grading, bound);

    let integral = p.is_integral() && q.is_integral() && qv.abs().is_one();
    let values: Vec<Rational> = if integral {
        let steps: Vec<(ExponentVector, BigInt)> =
            q.terms().filter(|(e, _)| *e != v).map(|(e, c)| (e.sub(v), c.to_integer())).collect();
        let negate = qv.is_negative();
        run_recursion(
            &points,
            |k| p.coeff_ref(&k.add(v)).map_or_else(BigInt::zero, |c| c.to_integer()),
            &steps,
            |x| if negate { -x } else { x },
        )
        .into_iter()
        .map(Rational::from_integer)
        .collect()
    } else {
        let inv = qv.recip();
        let steps: Vec<(ExponentVector, Rational)> =
            q.terms().filter(|(e, _)| *e != v).map(|(e, c)| (e.sub(v), c.clone())).collect();
        run_recursion(&points, |k| p.coeff(&k.add(v)), &steps, |x| x * &inv)
    };

    Ok(TruncatedLaurentSeries {
        nvars: n,
        vertex: v.clone(),
        grading,
        bound,
        cone_generators: gens,
        coeffs: points.into_iter().zip(values).collect(),
    })
}

/// Convenience: expansion at the canonical vertex of the denominator.
pub fn expand(f: &RationalFunction, bound: i64) -> Result<TruncatedLaurentSeries> {
    expand_at_vertex(f, &f.canonical_vertex(), bound)
}

impl TruncatedLaurentSeries {
    pub(crate) fn with_parts(
        &self,
        vertex: ExponentVector,
        bound: i64,
        coeffs: BTreeMap<ExponentVector, Rational>,
    ) -> Self {
        TruncatedLaurentSeries {
            nvars: self.nvars,
            vertex,
            grading: self.grading.clone(),
            bound,
            cone_generators: self.cone_generators.clone(),
            coeffs,
        }
    }
}
