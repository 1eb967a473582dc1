use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::minton::{minton_decide, MintonVerdict};
use super::qdet::check_linear_in;
use crate::algebra::{ExponentVector, LaurentPolynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::polytope::newton_polytope;

fn check_pair(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<()> {
    if p.nvars() != q.nvars() {
        return Err(Error::VariableMismatch { left: p.nvars(), right: q.nvars() });
    }
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(())
}

/// For `Q` linear in every variable, `P/Q` has the Gauss property exactly
/// when `N(P) ⊆ N(Q)`.
pub fn classify_linear(p: &LaurentPolynomial, q: &LaurentPolynomial) -> Result<bool> {
    check_pair(p, q)?;
    let all: Vec<usize> = (0..q.nvars()).collect();
    check_linear_in(q, &all)?;
    if p.is_zero() {
        return Ok(true);
    }
    newton_polytope(p)?.is_contained_in(&newton_polytope(q)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MostlyLinearEntry {
    /// `p_k ≠ 0` while `q_k = 0`.
    QZeroPNonzero,
    /// `p_k = 0`: no condition.
    Vacuous,
    Univariate {
        #[serde(serialize_with = "crate::report::ser_ratfunc")]
        function: RationalFunction,
        verdict: MintonVerdict,
    },
}

impl MostlyLinearEntry {
    pub fn holds(&self) -> bool {
        match self {
            MostlyLinearEntry::QZeroPNonzero => false,
            MostlyLinearEntry::Vacuous => true,
            MostlyLinearEntry::Univariate { verdict, .. } => verdict.has_gauss,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MostlyLinearVerdict {
    /// Index of the variable kept as the univariate coordinate.
    pub z_var: usize,
    /// Keys are exponents in the remaining variables, in increasing index order.
    #[serde(serialize_with = "ser_per_k")]
    pub per_k: BTreeMap<ExponentVector, MostlyLinearEntry>,
    pub overall: bool,
}

fn ser_per_k<S: serde::Serializer>(
    m: &BTreeMap<ExponentVector, MostlyLinearEntry>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row<'a> {
        k: &'a ExponentVector,
        #[serde(flatten)]
        entry: &'a MostlyLinearEntry,
    }
    s.collect_seq(m.iter().map(|(k, entry)| Row { k, entry }))
}

/// Splits `p` into `Σ p_k(z)·x^k` with `x` the variables other than `z`.
fn coefficients_in_block(p: &LaurentPolynomial, z: usize) -> BTreeMap<ExponentVector, LaurentPolynomial> {
    let n = p.nvars();
    let mut out: BTreeMap<ExponentVector, LaurentPolynomial> = BTreeMap::new();
    for (e, c) in p.terms() {
        let k = ExponentVector::new((0..n).filter(|&i| i != z).map(|i| e[i]).collect());
        out.entry(k)
            .or_insert_with(|| LaurentPolynomial::zero(1))
            .add_term(ExponentVector::new(vec![e[z]]), c.clone());
    }
    out
}

/// For `Q` linear in every variable except `z`, `P/Q` has the Gauss property
/// exactly when each `p_k ≠ 0` has `q_k ≠ 0` and `p_k/q_k` has it.
pub fn classify_mostly_linear(p: &LaurentPolynomial, q: &LaurentPolynomial, z_var: usize) -> Result<MostlyLinearVerdict> {
    check_pair(p, q)?;
    let n = q.nvars();
    if z_var >= n {
        return Err(Error::InvalidArgument(format!("variable index {z_var} out of range")));
    }
    let block: Vec<usize> = (0..n).filter(|&i| i != z_var).collect();
    check_linear_in(q, &block)?;
    let pk = coefficients_in_block(p, z_var);
    let qk = coefficients_in_block(q, z_var);
    let mut keys: BTreeSet<ExponentVector> = pk.keys().cloned().collect();
    for bits in 0..(1u32 << block.len()) {
        keys.insert(ExponentVector::new((0..block.len()).map(|i| i64::from((bits >> i) & 1)).collect()));
    }
    let mut per_k = BTreeMap::new();
    for k in keys {
        let entry = match (pk.get(&k), qk.get(&k)) {
            (None, _) => MostlyLinearEntry::Vacuous,
            (Some(_), None) => MostlyLinearEntry::QZeroPNonzero,
            (Some(a), Some(b)) => {
                let function = RationalFunction::new(a.clone(), b.clone())?;
                let verdict = minton_decide(&function)?;
                MostlyLinearEntry::Univariate { function, verdict }
            }
        };
        per_k.insert(k, entry);
    }
    let overall = per_k.values().all(MostlyLinearEntry::holds);
    Ok(MostlyLinearVerdict { z_var, per_k, overall })
}
