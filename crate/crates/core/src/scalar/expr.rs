use super::{parse_rational, MPoly, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("division by zero")]
    DivByZero,
    #[error("division by a non-constant expression")]
    NonPolynomial,
}

/// Arithmetic expression over rationals and named variables.
///
/// Grammar: `expr := term (('+'|'-') term)*`, `term := unary (('*'|'/') unary)*`,
/// `unary := '-' unary | atom ('^' uint)?`, `atom := number | ident | '(' expr ')'`.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Q),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { offset: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                b'-' => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                b'/' => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected exponent");
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| ExprError::Syntax { offset: start, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap();
                Ok(Expr::Num(Q::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Expr::Var(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string()))
            }
            Some(c) => self.err(format!("unexpected character `{}`", c as char)),
        }
    }
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr, ExprError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }

    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.vars(out),
        }
    }

    /// Rational value under the variable assignment `env`.
    pub fn eval(&self, env: &dyn Fn(&str) -> Option<Q>) -> Result<Q, ExprError> {
        Ok(match self {
            Expr::Num(q) => q.clone(),
            Expr::Var(v) => env(v).ok_or_else(|| ExprError::UnknownVar(v.clone()))?,
            Expr::Add(a, b) => a.eval(env)? + b.eval(env)?,
            Expr::Sub(a, b) => a.eval(env)? - b.eval(env)?,
            Expr::Mul(a, b) => a.eval(env)? * b.eval(env)?,
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(ExprError::DivByZero);
                }
                a.eval(env)? / d
            }
            Expr::Neg(a) => -a.eval(env)?,
            Expr::Pow(a, e) => super::pow(&a.eval(env)?, *e),
        })
    }

    /// Evaluates with variables looked up positionally in `names`/`point`.
    pub fn eval_at(&self, names: &[String], point: &[Q]) -> Result<Q, ExprError> {
        self.eval(&|v: &str| names.iter().position(|n| n == v).map(|i| point[i].clone()))
    }

    /// Converts to a polynomial; division is allowed only by nonzero constants.
    pub fn to_poly(&self, names: &[String]) -> Result<MPoly, ExprError> {
        Ok(match self {
            Expr::Num(q) => MPoly::constant(q.clone()),
            Expr::Var(v) => {
                let i = names
                    .iter()
                    .position(|n| n == v)
                    .ok_or_else(|| ExprError::UnknownVar(v.clone()))?;
                MPoly::var(i)
            }
            Expr::Add(a, b) => a.to_poly(names)? + b.to_poly(names)?,
            Expr::Sub(a, b) => a.to_poly(names)? - b.to_poly(names)?,
            Expr::Mul(a, b) => a.to_poly(names)? * b.to_poly(names)?,
            Expr::Div(a, b) => {
                let d = b.to_poly(names)?.as_constant().ok_or(ExprError::NonPolynomial)?;
                if d.is_zero() {
                    return Err(ExprError::DivByZero);
                }
                a.to_poly(names)?.scale(&(Q::one() / d))
            }
            Expr::Neg(a) => -a.to_poly(names)?,
            Expr::Pow(a, e) => super::pow(&a.to_poly(names)?, *e),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{}", super::fmt_rational(q)),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Add(a, b) => write!(f, "({a}+{b})"),
            Expr::Sub(a, b) => write!(f, "({a}-{b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Pow(a, e) => write!(f, "{a}^{e}"),
        }
    }
}

/// Parses a scalar literal: a rational (`3`, `-2/5`) or a polynomial string.
pub fn parse_scalar_literal(s: &str, names: &[String]) -> Result<MPoly, ExprError> {
    if let Some(q) = parse_rational(s) {
        return Ok(MPoly::constant(q));
    }
    Expr::parse(s)?.to_poly(names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn names() -> Vec<String> {
        ["a11", "a12", "a21", "a22", "b1", "b2"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn table_style_expression() {
        let e = Expr::parse("b1^2*a11^2*(a11-1)*(a11+1)").unwrap();
        let point = [q(3), q(0), q(0), q(0), q(2), q(0)];
        assert_eq!(e.eval_at(&names(), &point).unwrap(), q(4 * 9 * 2 * 4));
    }

    #[test]
    fn precedence_and_unary_minus() {
        let e = Expr::parse("-2^2 + 3*4 - 6/4").unwrap();
        assert_eq!(e.eval(&|_| None).unwrap(), crate::scalar::q_frac(13, 2));
    }

    #[test]
    fn syntax_errors_have_offsets() {
        assert_eq!(
            Expr::parse("a11*(b1"),
            Err(ExprError::Syntax { offset: 7, msg: "expected `)`".into() })
        );
        assert!(matches!(Expr::parse("a11 $"), Err(ExprError::Syntax { offset: 4, .. })));
    }

    #[test]
    fn to_poly_rejects_symbolic_division() {
        let e = Expr::parse("b1*a12/b2").unwrap();
        assert_eq!(e.to_poly(&names()), Err(ExprError::NonPolynomial));
        let ok = Expr::parse("a12/2").unwrap().to_poly(&names()).unwrap();
        assert_eq!(ok.eval(&[q(0), q(6)]), q(3));
    }
}
