//! Newton polytopes: vertices, facets, the face lattice, containment and
//! grading forms.

pub mod lp;

use std::collections::{BTreeSet, VecDeque};

use num_traits::One;
use serde::Serialize;

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{ExponentVector, LaurentPolynomial, Rational};
use crate::error::{Error, Result};

/// Integer linear form `w ↦ Σ weights_i·w_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GradingForm {
    pub weights: Vec<i64>,
}

impl GradingForm {
    pub fn new(weights: Vec<i64>) -> Self {
        GradingForm { weights }
    }

    pub fn eval(&self, k: &ExponentVector) -> i64 {
        k.dot(&self.weights)
    }
}

/// A face `{w ∈ N : h(w) = d}` where `h ≥ d` holds on all of `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub supporting_form: Vec<i64>,
    pub offset: i64,
    pub dim: usize,
    pub vertices: Vec<ExponentVector>,
    pub members: Vec<ExponentVector>,
}

impl Face {
    pub fn contains(&self, w: &ExponentVector) -> bool {
        w.dot(&self.supporting_form) == self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolytope {
    ambient_dim: usize,
    points: Vec<ExponentVector>,
    vertices: Vec<ExponentVector>,
    dim: usize,
    /// `h·w = d` cutting out the affine hull.
    equations: Vec<(Vec<i64>, i64)>,
    /// `h·w ≥ d`, one per facet, normals lying in the direction space.
    facets: Vec<(Vec<i64>, i64)>,
}

fn to_rat(k: &ExponentVector) -> Vec<Rational> {
    k.iter().map(|x| Rational::from_integer(x.into())).collect()
}

/// Whether `p` is a convex combination of `pts`.
pub fn in_convex_hull(pts: &[ExponentVector], p: &ExponentVector) -> bool {
    if pts.is_empty() {
        return false;
    }
    let n = p.len();
    let mut a: Matrix = (0..n)
        .map(|i| pts.iter().map(|q| Rational::from_integer(q[i].into())).collect())
        .collect();
    a.push(vec![Rational::one(); pts.len()]);
    let mut b = to_rat(p);
    b.push(Rational::one());
    lp::feasible_point(&a, &b).is_some()
}

/// Whether `k` is a nonnegative rational combination of `gens`.
pub fn in_cone(gens: &[ExponentVector], k: &ExponentVector) -> bool {
    if k.is_zero() {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let a: Matrix = (0..k.len())
        .map(|i| gens.iter().map(|g| Rational::from_integer(g[i].into())).collect())
        .collect();
    lp::feasible_point(&a, &to_rat(k)).is_some()
}

fn affine_rank(pts: &[ExponentVector]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let dirs: Matrix = pts[1..].iter().map(|p| to_rat(&p.sub(&pts[0]))).collect();
    linalg::rank(&dirs)
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl NewtonPolytope {
    pub fn from_points(points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let set: BTreeSet<ExponentVector> = points.into_iter().collect();
        let points: Vec<ExponentVector> = set.into_iter().collect();
        let Some(first) = points.first() else {
            return Err(Error::ZeroPolynomial);
        };
        let n = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(Error::ExponentLength { expected: n, got: bad.to_vec() });
        }
        let vertices: Vec<ExponentVector> = if points.len() == 1 {
            points.clone()
        } else {
            points
                .iter()
                .enumerate()
                .filter(|(i, p)| {
                    let others: Vec<ExponentVector> = points
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| j != i)
                        .map(|(_, q)| q.clone())
                        .collect();
                    !in_convex_hull(&others, p)
                })
                .map(|(_, p)| p.clone())
                .collect()
        };
        let dim = affine_rank(&vertices);
        let dirs: Matrix = vertices[1..].iter().map(|p| to_rat(&p.sub(&vertices[0]))).collect();
        let equations: Vec<(Vec<i64>, i64)> = linalg::nullspace(&dirs, n)
            .iter()
            .map(|h| {
                let h = linalg::primitive_i64_vector(h).expect("small normal");
                let d = vertices[0].dot(&h);
                (h, d)
            })
            .collect();
        let mut np = NewtonPolytope { ambient_dim: n, points, vertices, dim, equations, facets: Vec::new() };
        np.facets = np.compute_facets();
        Ok(np)
    }

    fn compute_facets(&self) -> Vec<(Vec<i64>, i64)> {
        let mut facets = BTreeSet::new();
        if self.dim == 0 {
            return Vec::new();
        }
        let n = self.ambient_dim;
        let eq_rows: Matrix = self
            .equations
            .iter()
            .map(|(h, _)| h.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        combinations(self.vertices.len(), self.dim, |idx| {
            let base = &self.vertices[idx[0]];
            let mut rows: Matrix = idx[1..].iter().map(|&i| to_rat(&self.vertices[i].sub(base))).collect();
            rows.extend(eq_rows.iter().cloned());
            let ns = linalg::nullspace(&rows, n);
            if ns.len() != 1 {
                return;
            }
            let mut h = linalg::primitive_i64_vector(&ns[0]).expect("small normal");
            let mut d = base.dot(&h);
            let vals: Vec<i64> = self.vertices.iter().map(|v| v.dot(&h)).collect();
            if vals.iter().all(|&x| x >= d) {
            } else if vals.iter().all(|&x| x <= d) {
                h.iter_mut().for_each(|x| *x = -*x);
                d = -d;
            } else {
                return;
            }
            facets.insert((h, d));
        });
        facets.into_iter().collect()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[(Vec<i64>, i64)] {
        &self.facets
    }

    pub fn equations(&self) -> &[(Vec<i64>, i64)] {
        &self.equations
    }

    pub fn is_vertex(&self, v: &ExponentVector) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// Exact membership of a lattice point via the facet description.
    pub fn contains_point(&self, w: &ExponentVector) -> bool {
        w.len() == self.ambient_dim
            && self.equations.iter().all(|(h, d)| w.dot(h) == *d)
            && self.facets.iter().all(|(h, d)| w.dot(h) >= *d)
    }

    /// Whether `self ⊆ outer`.
    pub fn is_contained_in(&self, outer: &NewtonPolytope) -> Result<bool> {
        if self.ambient_dim != outer.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: outer.ambient_dim });
        }
        Ok(self.vertices.iter().all(|v| outer.contains_point(v)))
    }

    fn face_from_form(&self, h: Vec<i64>, d: i64) -> Face {
        let vertices: Vec<ExponentVector> =
            self.vertices.iter().filter(|v| v.dot(&h) == d).cloned().collect();
        let members = self.points.iter().filter(|v| v.dot(&h) == d).cloned().collect();
        Face { dim: affine_rank(&vertices), supporting_form: h, offset: d, vertices, members }
    }

    /// All faces, including the vertices and the polytope itself, sorted by
    /// dimension and then by member list.
    pub fn faces(&self) -> Vec<Face> {
        let nv = self.vertices.len();
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|(h, d)| (0..nv).filter(|&i| self.vertices[i].dot(h) == *d).collect())
            .collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut queue: VecDeque<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
        while let Some(s) = queue.pop_front() {
            if s.is_empty() || !seen.insert(s.clone()) {
                continue;
            }
            for f in &facet_sets {
                let t: BTreeSet<usize> = s.intersection(f).copied().collect();
                if !t.is_empty() && !seen.contains(&t) {
                    queue.push_back(t);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .iter()
            .map(|s| {
                let mut h = vec![0i64; self.ambient_dim];
                let mut d = 0i64;
                for ((fh, fd), fs) in self.facets.iter().zip(&facet_sets) {
                    if s.is_subset(fs) {
                        h.iter_mut().zip(fh).for_each(|(a, b)| *a += b);
                        d += fd;
                    }
                }
                self.face_from_form(h, d)
            })
            .collect();
        faces.push(self.face_from_form(vec![0; self.ambient_dim], 0));
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.members.cmp(&b.members)));
        faces
    }

    /// The face cut out by `h ≥ d`, if `h ≥ d` holds everywhere with equality somewhere.
    pub fn face_for_form(&self, h: &[i64], d: i64) -> Result<Face> {
        if h.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { left: h.len(), right: self.ambient_dim });
        }
        let vals: Vec<i64> = self.points.iter().map(|p| p.dot(h)).collect();
        if vals.iter().any(|&x| x < d) || !vals.contains(&d) {
            return Err(Error::NotAFace);
        }
        Ok(self.face_from_form(h.to_vec(), d))
    }

    /// Sum of the primitive inner normals of the facets through `v`.
    pub fn grading_form(&self, v: &ExponentVector) -> Result<GradingForm> {
        if !self.is_vertex(v) {
            return Err(Error::NotAVertex(v.to_vec()));
        }
        let mut w = vec![0i64; self.ambient_dim];
        for (h, d) in &self.facets {
            if v.dot(h) == *d {
                w.iter_mut().zip(h).for_each(|(a, b)| *a += b);
            }
        }
        let g = GradingForm::new(w);
        debug_assert!(self.points.iter().all(|k| k == v || g.eval(&k.sub(v)) > 0));
        Ok(g)
    }

    /// Checks that `alpha(k − v) > 0` for every other point `k`.
    pub fn validate_grading(&self, v: &ExponentVector, alpha: &GradingForm) -> Result<()> {
        if !self.is_vertex(v) {
            return Err(Error::NotAVertex(v.to_vec()));
        }
        if alpha.weights.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { left: alpha.weights.len(), right: self.ambient_dim });
        }
        if let Some(k) = self.points.iter().find(|k| *k != v && alpha.eval(&k.sub(v)) <= 0) {
            return Err(Error::InvalidArgument(format!(
                "grading {:?} is not positive on {:?}",
                alpha.weights,
                k.sub(v).to_vec()
            )));
        }
        Ok(())
    }
}

pub fn newton_polytope(p: &LaurentPolynomial) -> Result<NewtonPolytope> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    NewtonPolytope::from_points(p.support().cloned())
}

pub fn polytope_contains(inner: &NewtonPolytope, outer: &NewtonPolytope) -> Result<bool> {
    inner.is_contained_in(outer)
}

pub fn grading_form(q: &LaurentPolynomial, v: &ExponentVector) -> Result<GradingForm> {
    newton_polytope(q)?.grading_form(v)
}

/// Weights `(1, B, B², …)` with `B = 1 + 2·max |coordinate|`, so that distinct
/// points of the given supports never share a value.
pub fn generic_form<'a>(supports: impl IntoIterator<Item = &'a ExponentVector>) -> Result<GradingForm> {
    let pts: Vec<&ExponentVector> = supports.into_iter().collect();
    let n = pts.first().map_or(1, |p| p.len());
    let m = pts.iter().flat_map(|p| p.iter()).map(i64::abs).max().unwrap_or(0);
    let base = 1 + 2 * m;
    let mut w = Vec::with_capacity(n);
    let mut cur: i64 = 1;
    for i in 0..n {
        w.push(cur);
        if i + 1 < n {
            cur = cur
                .checked_mul(base)
                .ok_or_else(|| Error::InvalidArgument("generic weights overflow".into()))?;
        }
    }
    // The largest value B^{n-1}·m·n must also fit.
    cur.checked_mul(m.max(1))
        .and_then(|x| x.checked_mul(n as i64))
        .ok_or_else(|| Error::InvalidArgument("generic weights overflow".into()))?;
    Ok(GradingForm::new(w))
}

/// The point of `pts` minimizing `form`, with a flag telling whether it is unique.
pub fn argmin<'a>(form: &GradingForm, pts: impl IntoIterator<Item = &'a ExponentVector>) -> Option<(ExponentVector, bool)> {
    let mut best: Option<(i64, ExponentVector, bool)> = None;
    for p in pts {
        let v = form.eval(p);
        best = match best {
            None => Some((v, p.clone(), true)),
            Some((bv, bp, u)) => {
                if v < bv {
                    Some((v, p.clone(), true))
                } else if v == bv && *p != bp {
                    Some((bv, bp, false))
                } else {
                    Some((bv, bp, u))
                }
            }
        };
    }
    best.map(|(_, p, u)| (p, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nvars: usize, terms: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_int_terms(nvars, terms).unwrap()
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::from(v)
    }

    fn delannoy_den() -> LaurentPolynomial {
        poly(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], -1)])
    }

    #[test]
    fn square_vertices_and_faces() {
        let np = newton_polytope(&delannoy_den()).unwrap();
        assert_eq!(np.vertices().len(), 4);
        assert_eq!(np.dim(), 2);
        let faces = np.faces();
        let dims: Vec<usize> = faces.iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![0, 0, 0, 0, 1, 1, 1, 1, 2]);
        for f in &faces {
            for p in np.points() {
                let v = p.dot(&f.supporting_form);
                assert!(v >= f.offset);
                assert_eq!(v == f.offset, f.members.contains(p));
            }
        }
    }

    #[test]
    fn segment_with_interior_point() {
        let np = newton_polytope(&poly(1, &[(&[0], 1), (&[1], -1), (&[2], -1)])).unwrap();
        assert_eq!(np.vertices(), &[ev(&[0]), ev(&[2])]);
        assert_eq!(np.faces().len(), 3);
    }

    #[test]
    fn triangle_faces() {
        let np = newton_polytope(&poly(2, &[(&[0, 0], 1), (&[2, 0], 1), (&[0, 2], 1), (&[1, 1], 3)])).unwrap();
        let dims: Vec<usize> = np.faces().iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![0, 0, 0, 1, 1, 1, 2]);
    }

    #[test]
    fn containment_examples() {
        let q = newton_polytope(&poly(1, &[(&[0], 1), (&[2], -1)])).unwrap();
        let p = newton_polytope(&poly(1, &[(&[0], 1), (&[1], 2), (&[2], -1)])).unwrap();
        assert!(p.is_contained_in(&q).unwrap());
        let q2 = newton_polytope(&poly(1, &[(&[1], 1), (&[2], 1)])).unwrap();
        let p2 = newton_polytope(&poly(1, &[(&[1], 1), (&[0], -2)])).unwrap();
        assert!(!p2.is_contained_in(&q2).unwrap());
        assert!(q.is_contained_in(&q).unwrap());
        assert!(q.is_contained_in(&newton_polytope(&delannoy_den()).unwrap()).is_err());
    }

    #[test]
    fn grading_forms() {
        let q = poly(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1)]);
        assert_eq!(grading_form(&q, &ev(&[0, 0])).unwrap().weights, vec![1, 1]);
        let q = poly(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[-1, 1], -1)]);
        assert_eq!(grading_form(&q, &ev(&[0, 0])).unwrap().weights, vec![1, 2]);
        assert!(matches!(
            grading_form(&poly(1, &[(&[0], 1), (&[1], -1), (&[2], -1)]), &ev(&[1])),
            Err(Error::NotAVertex(_))
        ));
    }

    #[test]
    fn lower_dimensional_support() {
        // 1 + x1^2 + x2^2 + 3 x1 x2 embedded via x3 = x1 x2 lies in a plane of ℝ³.
        let p = poly(3, &[(&[0, 0, 0], 1), (&[2, 0, 1], 1), (&[0, 2, 1], 1), (&[1, 1, 1], 3)]);
        let np = newton_polytope(&p).unwrap();
        assert_eq!(np.dim(), 2);
        assert_eq!(np.vertices().len(), 3);
        assert_eq!(np.faces().len(), 7);
        let g = np.grading_form(&ev(&[0, 0, 0])).unwrap();
        for k in np.points().iter().filter(|k| !k.is_zero()) {
            assert!(g.eval(k) > 0);
        }
    }

    #[test]
    fn generic_form_has_unique_minimum() {
        let pts = [ev(&[1, -1]), ev(&[-1, 1]), ev(&[0, 0])];
        let g = generic_form(pts.iter()).unwrap();
        assert_eq!(g.weights, vec![1, 3]);
        let (m, unique) = argmin(&g, pts.iter()).unwrap();
        assert_eq!(m, ev(&[1, -1]));
        assert!(unique);
    }
}
