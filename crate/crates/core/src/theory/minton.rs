use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{factor_univariate, partial_fractions, Rational, RationalFunction, UniPoly};
use crate::error::{Error, Result};

/// One summand `c·x·u'/u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MintonTerm {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub c: Rational,
    #[serde(serialize_with = "crate::report::ser_unipoly")]
    pub u: UniPoly,
}

/// `f = constant + Σ c_j·x·u_j'/u_j` with irreducible `u_j`, `u_j(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MintonDecomposition {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub constant: Rational,
    pub terms: Vec<MintonTerm>,
}

impl MintonDecomposition {
    pub fn recombine(&self) -> RationalFunction {
        let mut acc = RationalFunction::constant(1, self.constant.clone());
        for t in &self.terms {
            let num = (&UniPoly::x() * &t.u.derivative()).scale(&t.c);
            let term = RationalFunction::new(num.to_laurent(), t.u.to_laurent()).expect("nonzero factor");
            acc = &acc + &term;
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MintonReason {
    NewtonContainmentFails,
    NonSimplePole,
    ResidueNotLogDerivative,
    IrrationalResidueMismatch,
}

impl MintonReason {
    pub fn as_str(self) -> &'static str {
        match self {
            MintonReason::NewtonContainmentFails => "newton-containment-fails",
            MintonReason::NonSimplePole => "non-simple-pole",
            MintonReason::ResidueNotLogDerivative => "residue-not-log-derivative",
            MintonReason::IrrationalResidueMismatch => "irrational-residue-mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MintonVerdict {
    pub has_gauss: bool,
    pub decomposition: Option<MintonDecomposition>,
    pub reason: Option<MintonReason>,
}

impl MintonVerdict {
    fn no(reason: MintonReason) -> Self {
        MintonVerdict { has_gauss: false, decomposition: None, reason: Some(reason) }
    }
}

/// Decides whether a univariate rational function has the Gauss property by
/// writing it as `f(0) + Σ c_j·x·u_j'/u_j` over the irreducible factors of
/// its denominator.
pub fn minton_decide(f: &RationalFunction) -> Result<MintonVerdict> {
    if f.nvars() != 1 {
        return Err(Error::NotUnivariate(f.nvars()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (p, q) = (f.numerator(), f.denominator());
    let (pmin, pmax) = (p.min_exponents().unwrap()[0], p.max_exponents().unwrap()[0]);
    let (qmin, qmax) = (q.min_exponents().unwrap()[0], q.max_exponents().unwrap()[0]);
    if pmin < qmin || pmax > qmax {
        return Ok(MintonVerdict::no(MintonReason::NewtonContainmentFails));
    }
    // Common monomials are cancelled in normal form, so here qmin = 0.
    let (p, q) = (p.to_univariate().unwrap(), q.to_univariate().unwrap());
    if !q.is_squarefree() {
        return Ok(MintonVerdict::no(MintonReason::NonSimplePole));
    }
    let constant = p.coeff(0) / q.coeff(0);
    let rest = &p - &q.scale(&constant);
    let fac = factor_univariate(&q)?;
    let pf = partial_fractions(&rest, &q)?;
    let mut terms = Vec::with_capacity(fac.factors.len());
    for (factor, _) in &fac.factors {
        let u = factor.scale(&factor.coeff(0).recip());
        let a = pf
            .terms
            .iter()
            .find(|t| &t.factor == factor)
            .map_or_else(UniPoly::zero, |t| t.numerator.scale(&factor.coeff(0).recip()));
        let d = Rational::from_integer(u.deg().into());
        let r = &(&UniPoly::x() * &u.derivative()) - &u.scale(&d);
        let c = -a.coeff(0) / &d;
        if a != r.scale(&c) {
            return Ok(MintonVerdict::no(MintonReason::IrrationalResidueMismatch));
        }
        if !c.is_zero() {
            terms.push(MintonTerm { c, u });
        }
    }
    let decomposition = MintonDecomposition { constant, terms };
    if !decomposition.recombine().is_equivalent(f) {
        return Ok(MintonVerdict::no(MintonReason::ResidueNotLogDerivative));
    }
    debug_assert!(decomposition.terms.iter().all(|t| t.u.coeff(0).is_one()));
    Ok(MintonVerdict { has_gauss: true, decomposition: Some(decomposition), reason: None })
}
