//! Arithmetic expressions over `x1..x8` (aliases `x, y, z, w`).
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' int)*        exponents bind right to left
//! base   := int | var | '(' expr ')' | '-' factor
//! int    := digits, or '-' digits in an exponent
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*` and `/`.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{ExponentVector, LaurentPolynomial, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::MAX_VARS;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// 0-based variable index.
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    /// Number of variables needed to evaluate, at least 1.
    pub fn nvars(&self) -> usize {
        match self {
            Expr::Int(_) => 1,
            Expr::Var(i) => i + 1,
            Expr::Neg(a) | Expr::Pow(a, _) => a.nvars(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.nvars().max(b.nvars()),
        }
    }

    pub fn evaluate(&self, nvars: usize) -> Result<RationalFunction> {
        if self.nvars() > nvars {
            return Err(Error::VariableCount { got: self.nvars() });
        }
        crate::algebra::check_nvars(nvars)?;
        self.eval(nvars)
    }

    fn eval(&self, n: usize) -> Result<RationalFunction> {
        Ok(match self {
            Expr::Int(v) => RationalFunction::constant(n, Rational::from_integer(v.clone())),
            Expr::Var(i) => RationalFunction::var(n, *i),
            Expr::Neg(a) => -&a.eval(n)?,
            Expr::Add(a, b) => &a.eval(n)? + &b.eval(n)?,
            Expr::Sub(a, b) => &a.eval(n)? - &b.eval(n)?,
            Expr::Mul(a, b) => &a.eval(n)? * &b.eval(n)?,
            Expr::Div(a, b) => a.eval(n)?.try_div(&b.eval(n)?)?,
            Expr::Pow(a, e) => a.eval(n)?.pow(*e)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(i) => write!(f, "x{}", i + 1),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a})*({b})"),
            Expr::Div(a, b) => write!(f, "({a})/({b})"),
            Expr::Pow(a, e) => write!(f, "({a})^({e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Syntax { offset, message: message.into() }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if c == b'+' { Expr::Add(lhs.into(), rhs.into()) } else { Expr::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = if c == b'*' { Expr::Mul(lhs.into(), rhs.into()) } else { Expr::Div(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        let mut exps = Vec::new();
        while self.peek() == Some(b'^') {
            self.pos += 1;
            exps.push(self.exponent()?);
        }
        let mut e = exps.pop().expect("at least one exponent");
        while let Some(b) = exps.pop() {
            e = u32::try_from(e)
                .ok()
                .and_then(|k| b.checked_pow(k))
                .ok_or_else(|| self.syntax(self.pos, "exponent out of range"))?;
        }
        Ok(Expr::Pow(base.into(), e))
    }

    fn exponent(&mut self) -> Result<i64> {
        let start = self.peek().map(|_| self.pos).unwrap_or(self.src.len());
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        self.skip_ws();
        let digits_at = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_at == self.pos {
            return Err(Error::NonIntegerExponent { offset: start });
        }
        let text = std::str::from_utf8(&self.src[digits_at..self.pos]).expect("ascii digits");
        let mut v: i64 = text.parse().map_err(|_| self.syntax(digits_at, "exponent out of range"))?;
        if negative {
            v = -v;
        }
        if paren {
            if self.peek() != Some(b')') {
                return Err(Error::NonIntegerExponent { offset: start });
            }
            self.pos += 1;
        }
        Ok(v)
    }

    fn base(&mut self) -> Result<Expr> {
        let Some(c) = self.peek() else {
            return Err(self.syntax(self.src.len(), "unexpected end of input"));
        };
        let start = self.pos;
        match c {
            b'-' => {
                self.pos += 1;
                Ok(Expr::Neg(self.factor()?.into()))
            }
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax(self.pos.min(self.src.len()), "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            b'0'..=b'9' => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                Ok(Expr::Int(text.parse().expect("digits")))
            }
            c if c.is_ascii_alphabetic() => {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                variable_index(name)
                    .map(Expr::Var)
                    .ok_or_else(|| Error::UnknownVariable { offset: start, name: name.to_string() })
            }
            _ => Err(self.syntax(start, format!("unexpected character '{}'", char::from(c)))),
        }
    }
}

fn variable_index(name: &str) -> Option<usize> {
    match name {
        "x" => Some(0),
        "y" => Some(1),
        "z" => Some(2),
        "w" => Some(3),
        _ => {
            let i: usize = name.strip_prefix('x')?.parse().ok()?;
            (1..=MAX_VARS).contains(&i).then(|| i - 1)
        }
    }
}

pub fn parse_expression(s: &str) -> Result<Expr> {
    if let Some(i) = s.bytes().position(|b| !b.is_ascii()) {
        return Err(Error::Syntax { offset: i, message: "non-ASCII character".into() });
    }
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.syntax(p.pos, format!("unexpected '{}'", char::from(c))));
    }
    Ok(e)
}

/// Parses and evaluates with `nvars` variables, or as many as the expression uses.
pub fn parse_rational_function(s: &str, nvars: Option<usize>) -> Result<RationalFunction> {
    let e = parse_expression(s)?;
    e.evaluate(nvars.unwrap_or_else(|| e.nvars()))
}

/// Parses an expression that must be a Laurent polynomial.
pub fn parse_polynomial(s: &str, nvars: Option<usize>) -> Result<LaurentPolynomial> {
    let f = parse_rational_function(s, nvars)?;
    let (num, den) = f.into_parts();
    if den.is_one() {
        return Ok(num);
    }
    if den.is_monomial() {
        let (e, c) = den.terms().next().expect("monomial");
        let shift: ExponentVector = e.neg();
        return Ok(num.shift(&shift).scale(&c.recip()));
    }
    Err(Error::InvalidArgument(format!("'{s}' is not a Laurent polynomial")))
}
