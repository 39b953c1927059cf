//! Reading polynomials from text such as `(a - b)(w + a w^2)` or `3/2*x^2 - 1`.
//!
//! Juxtaposition multiplies; `/` is allowed only by a nonzero constant.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::multipoly::MultiPoly;
use super::poly::{Poly, Symbol};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push(Tok::Num(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            out.push(Tok::Ident(s));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else if c == '−' {
            out.push(Tok::Op('-'));
            chars.next();
        } else {
            return Err(Error::InvalidArgument(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [Symbol],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                if !d.is_constant() || d.constant_term().is_zero() {
                    return Err(Error::InvalidArgument("division by a non-constant or zero".into()));
                }
                acc = acc.scale(&d.constant_term().recip());
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let e = match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => {
                u32::try_from(n.clone()).map_err(|_| Error::InvalidArgument("exponent too large".into()))?
            }
            _ => return Err(Error::InvalidArgument("expected an exponent".into())),
        };
        self.pos += 1;
        if paren && !self.eat(')') {
            return Err(Error::InvalidArgument("unbalanced parenthesis".into()));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(self.vars, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let v = self
                    .vars
                    .iter()
                    .find(|v| v.0 == name)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown variable {name}")))?;
                Ok(MultiPoly::var(self.vars, *v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::InvalidArgument("unbalanced parenthesis".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            other => Err(Error::InvalidArgument(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial in the given variables.
pub fn parse_multipoly(text: &str, vars: &[Symbol]) -> Result<MultiPoly> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::InvalidArgument(format!("variable {v} listed twice")));
        }
    }
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::InvalidArgument("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, vars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::InvalidArgument(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}

/// Parse a univariate polynomial.
pub fn parse_poly(text: &str, var: Symbol) -> Result<Poly> {
    parse_multipoly(text, &[var])?.to_poly(var)
}

/// Parse a rational constant such as `-3/2`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let p = parse_multipoly(text, &[])?;
    if p.is_constant() {
        Ok(p.constant_term())
    } else {
        Err(Error::InvalidArgument(format!("not a constant: {text}")))
    }
}
