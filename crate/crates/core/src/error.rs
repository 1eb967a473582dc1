use thiserror::Error;

/// Errors raised by the algebra, expansion and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of variables must be between 1 and {max}, got {got}", max = crate::MAX_VARS)]
    VariableCount { got: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("exponent vector {got:?} does not have length {expected}")]
    ExponentLength { expected: usize, got: Vec<i64> },
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("input is the zero polynomial")]
    ZeroPolynomial,
    #[error("{0:?} is not a vertex of the Newton polytope")]
    NotAVertex(Vec<i64>),
    #[error("ambient dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficient at {0:?} lies outside the truncation")]
    OutOfTruncation(Vec<i64>),
    #[error("series must have constant term 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("series support is not contained in a proper cone of its grading")]
    NotProperCone,
    #[error("{functions} functions given for {variables} variables")]
    TooManyFunctions { functions: usize, variables: usize },
    #[error("polynomial is not linear in x{0}")]
    NotLinear(usize),
    #[error("exponent {0:?} has a non-integral image under the substitution")]
    NonIntegralExponent(Vec<i64>),
    #[error("substitution matrix does not have full column rank")]
    RankDeficient,
    #[error("substituted denominator vanishes identically")]
    UndefinedSubstitution,
    #[error("supporting form does not define a face of the Newton polytope")]
    NotAFace,
    #[error("expected a univariate function, got {0} variables")]
    NotUnivariate(usize),
    #[error("expected a polynomial in two variables of total degree 2")]
    NotDegreeTwo,
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("exponent at byte {offset} is not an integer literal")]
    NonIntegerExponent { offset: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot factor {0}: too large")]
    FactorizationLimit(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
