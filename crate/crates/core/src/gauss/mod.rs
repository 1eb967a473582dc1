//! p-adic valuations and empirical verification of Gauss congruences on
//! truncated expansions.

mod power;

pub use power::check_integer_power_congruence;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::algebra::integers::{int_valuation, is_prime, prime_divisors};
use crate::algebra::{ExponentVector, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::polytope::newton_polytope;
use crate::report::SCHEMA_VERSION;
use crate::series::{expand_at_vertex, TruncatedLaurentSeries};

/// `ν_p`, with `ν_p(0) = ∞` represented by `Infinite` (which orders last).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, r: i64) -> bool {
        match self {
            Valuation::Finite(v) => v >= r,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

pub fn p_adic_valuation(a: &Rational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(valuation(a, p))
}

fn valuation(a: &Rational, p: u64) -> Valuation {
    if a.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(int_valuation(a.numer(), p) - int_valuation(a.denom(), p))
}

/// Primes dividing the vertex coefficient of the denominator or the content
/// of the numerator; away from these, the expansion at `v` is p-integral.
pub fn excluded_primes(f: &RationalFunction, v: &ExponentVector) -> Result<BTreeSet<u64>> {
    let np = newton_polytope(f.denominator())?;
    if !np.is_vertex(v) {
        return Err(Error::NotAVertex(v.to_vec()));
    }
    let mut out: BTreeSet<u64> = prime_divisors(&f.denominator().coeff(v).to_integer())?.into_iter().collect();
    let content = f
        .numerator()
        .terms()
        .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&c.to_integer()));
    if !content.is_zero() {
        out.extend(prime_divisors(&content)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCheckConfig {
    pub primes: Vec<u64>,
    pub r_max: u32,
    /// Required exponent multiplier: congruences are tested modulo `p^{strength·r}`.
    pub strength: u32,
    /// Largest α-degree of a tested base vector `m`; `None` means no cap
    /// beyond what the truncation allows.
    pub m_budget: Option<i64>,
}

impl Default for GaussCheckConfig {
    fn default() -> Self {
        GaussCheckConfig { primes: vec![2, 3, 5, 7, 11, 13], r_max: 2, strength: 1, m_budget: None }
    }
}

impl GaussCheckConfig {
    pub fn new(primes: Vec<u64>, r_max: u32, strength: u32) -> Self {
        GaussCheckConfig { primes, r_max, strength, m_budget: None }
    }

    pub fn with_budget(mut self, m_budget: i64) -> Self {
        self.m_budget = Some(m_budget);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(&p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        let distinct: HashSet<u64> = self.primes.iter().copied().collect();
        if distinct.len() != self.primes.len() {
            return Err(Error::InvalidArgument("primes must be distinct".into()));
        }
        if self.strength == 0 {
            return Err(Error::InvalidArgument("strength must be at least 1".into()));
        }
        if self.r_max == 0 {
            return Err(Error::InvalidArgument("r_max must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    Excluded,
    InsufficientTruncation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Excluded => "excluded",
            Verdict::InsufficientTruncation => "insufficient-truncation",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    /// `ν_p(f_{m p^r} − f_{m p^{r−1}})` below the required bound.
    Congruence,
    /// A coefficient with negative valuation at a prime that is not excluded.
    NonIntegral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m: Vec<i64>,
    pub r: u32,
    pub valuation_found: i64,
    pub valuation_required: i64,
    pub reason: FailureReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeReport {
    pub prime: u64,
    pub strength: u32,
    pub r_max: u32,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub checked_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussReport {
    pub schema: u32,
    /// Always false: these verdicts are per-prime evidence, not proofs.
    pub certified: bool,
    pub vertex: Vec<i64>,
    pub grading: Vec<i64>,
    pub bound: i64,
    pub primes: Vec<PrimeReport>,
}

impl GaussReport {
    pub fn verdict(&self, p: u64) -> Option<Verdict> {
        self.primes.iter().find(|r| r.prime == p).map(|r| r.verdict)
    }

    /// True when no prime fails and at least one holds.
    pub fn all_hold(&self) -> bool {
        self.primes.iter().all(|r| r.verdict != Verdict::Fails)
            && self.primes.iter().any(|r| r.verdict == Verdict::Holds)
    }

    pub fn any_fails(&self) -> bool {
        self.primes.iter().any(|r| r.verdict == Verdict::Fails)
    }

    pub fn any_insufficient(&self) -> bool {
        self.primes.iter().any(|r| r.verdict == Verdict::InsufficientTruncation)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertex {:?} grading {:?} bound {}\n", self.vertex, self.grading, self.bound);
        for r in &self.primes {
            s.push_str(&format!("p={} s={} r_max={}: {} ({} checked)", r.prime, r.strength, r.r_max, r.verdict, r.checked_count));
            if let Some(w) = &r.witness {
                s.push_str(&format!(
                    " witness m={:?} r={} valuation {} < {}",
                    w.m, w.r, w.valuation_found, w.valuation_required
                ));
                if w.reason == FailureReason::NonIntegral {
                    s.push_str(" (non-integral coefficient)");
                }
            }
            s.push('\n');
        }
        s
    }
}

/// One tested congruence: the valuation of `f_{m p^r} − f_{m p^{r−1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub m: ExponentVector,
    pub r: u32,
    pub valuation: Valuation,
}

/// Base vectors `m ≠ 0` for which both `m p^r` and `m p^{r−1}` are known and
/// at least one of them lies in the stored region, in graded order.
fn base_vectors(s: &TruncatedLaurentSeries, p: u64, r: u32, m_budget: Option<i64>) -> Vec<ExponentVector> {
    let hi = (p as i64).pow(r);
    let lo = (p as i64).pow(r - 1);
    let mut out = BTreeSet::new();
    for (k, _) in s.coefficients() {
        for step in [hi, lo] {
            if let Some(m) = k.div_exact(step) {
                if m.is_zero() || m_budget.is_some_and(|b| s.grading().eval(&m) > b) {
                    continue;
                }
                if s.knows(&m.scale(hi)) && s.knows(&m.scale(lo)) {
                    out.insert(m);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Every congruence the engine would test at prime `p`, with its valuation.
pub fn congruence_checks(
    s: &TruncatedLaurentSeries,
    p: u64,
    r_max: u32,
    m_budget: Option<i64>,
) -> Vec<CongruenceCheck> {
    let mut out = Vec::new();
    for r in 1..=r_max {
        let hi = (p as i64).pow(r);
        let lo = (p as i64).pow(r - 1);
        for m in base_vectors(s, p, r, m_budget) {
            let a = s.coeff(&m.scale(hi)).expect("known");
            let b = s.coeff(&m.scale(lo)).expect("known");
            out.push(CongruenceCheck { valuation: valuation(&(a - b), p), m, r });
        }
    }
    out
}

fn check_prime(s: &TruncatedLaurentSeries, p: u64, cfg: &GaussCheckConfig, excluded: &BTreeSet<u64>) -> PrimeReport {
    let mut report = PrimeReport {
        prime: p,
        strength: cfg.strength,
        r_max: cfg.r_max,
        verdict: Verdict::Holds,
        witness: None,
        checked_count: 0,
    };
    if excluded.contains(&p) {
        report.verdict = Verdict::Excluded;
        return report;
    }
    for (k, c) in s.coefficients() {
        if let Valuation::Finite(v) = valuation(c, p) {
            if v < 0 {
                report.verdict = Verdict::Fails;
                report.witness = Some(Witness {
                    m: k.to_vec(),
                    r: 0,
                    valuation_found: v,
                    valuation_required: 0,
                    reason: FailureReason::NonIntegral,
                });
                return report;
            }
        }
    }
    for r in 1..=cfg.r_max {
        let Some(hi) = (p as i64).checked_pow(r) else { break };
        let lo = (p as i64).pow(r - 1);
        let required = i64::from(cfg.strength) * i64::from(r);
        for m in base_vectors(s, p, r, cfg.m_budget) {
            let a = s.coeff(&m.scale(hi)).expect("known");
            let b = s.coeff(&m.scale(lo)).expect("known");
            report.checked_count += 1;
            let v = valuation(&(a - b), p);
            if !v.at_least(required) {
                let Valuation::Finite(found) = v else { unreachable!() };
                report.verdict = Verdict::Fails;
                report.witness = Some(Witness {
                    m: m.to_vec(),
                    r,
                    valuation_found: found,
                    valuation_required: required,
                    reason: FailureReason::Congruence,
                });
                return report;
            }
        }
    }
    if report.checked_count == 0 {
        report.verdict = Verdict::InsufficientTruncation;
    }
    report
}

/// Checks a ready-made series; `jobs > 1` spreads the primes over threads.
pub fn check_gauss_series(
    s: &TruncatedLaurentSeries,
    cfg: &GaussCheckConfig,
    excluded: &BTreeSet<u64>,
    jobs: usize,
) -> Result<GaussReport> {
    cfg.validate()?;
    let primes: Vec<PrimeReport> = if jobs <= 1 || cfg.primes.len() <= 1 {
        cfg.primes.iter().map(|&p| check_prime(s, p, cfg, excluded)).collect()
    } else {
        let chunk = cfg.primes.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = cfg
                .primes
                .chunks(chunk)
                .map(|ps| scope.spawn(move || ps.iter().map(|&p| check_prime(s, p, cfg, excluded)).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    Ok(GaussReport {
        schema: SCHEMA_VERSION,
        certified: false,
        vertex: s.vertex().to_vec(),
        grading: s.grading().weights.clone(),
        bound: s.bound(),
        primes,
    })
}

/// Expands `f` at `v` to α-degree `bound` and checks the configured congruences.
pub fn check_gauss(f: &RationalFunction, v: &ExponentVector, cfg: &GaussCheckConfig, bound: i64) -> Result<GaussReport> {
    check_gauss_jobs(f, v, cfg, bound, 1)
}

pub fn check_gauss_jobs(
    f: &RationalFunction,
    v: &ExponentVector,
    cfg: &GaussCheckConfig,
    bound: i64,
    jobs: usize,
) -> Result<GaussReport> {
    cfg.validate()?;
    let s = expand_at_vertex(f, v, bound)?;
    let excluded = excluded_primes(f, v)?;
    check_gauss_series(&s, cfg, &excluded, jobs)
}
