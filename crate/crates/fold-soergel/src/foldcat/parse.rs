//! Recursive-descent parser for the diagram-expression grammar.
//!
//! ```text
//! sum    := term (('+' | '-') term)*
//! term   := '-' term | rational '*' comp | comp
//! comp   := tensor ('.' tensor)*          (right operand applied first)
//! tensor := atom ('x' atom)*
//! atom   := GENERATOR | 'poly[' POLY ']' | 'id(' WORD ')' | '(' sum ')'
//! ```
//!
//! `WORD` is `1` or a string over `X`, `Y`, `Z`; rationals are `p` or `p/q`.
//! The tensor operator `x` must be separated from neighbouring identifiers.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;

use super::expr::{Expr, FWord, GenName};
use crate::error::{Error, Result};
use crate::polyring::{Poly, Q};

/// Parses and shape-checks an expression.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.sum()?;
    p.ws();
    if p.pos < text.len() {
        return p.err("unexpected trailing input");
    }
    e.shape()?;
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn bytes(&self) -> &[u8] {
        self.src.as_bytes()
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.bytes().get(self.pos).copied()
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.to_string() })
    }

    fn shape_err<T>(&self, at: usize, e: Error) -> Result<T> {
        match e {
            Error::Shape(m) => Err(Error::Shape(format!("at byte {}: {}", at, m))),
            other => Err(other),
        }
    }

    /// Identifier at the cursor without consuming it.
    fn peek_ident(&mut self) -> Option<String> {
        self.ws();
        let b = self.bytes();
        let start = self.pos;
        let mut end = start;
        while end < b.len() && (b[end].is_ascii_alphanumeric() || b[end] == b'_') {
            end += 1;
        }
        if end == start || !b[start].is_ascii_alphabetic() {
            return None;
        }
        Some(self.src[start..end].to_string())
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            let at = self.pos;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.checked(at, acc.plus(rhs))?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.checked(at, acc.minus(rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn checked(&self, at: usize, e: Expr) -> Result<Expr> {
        match e.shape() {
            Ok(_) => Ok(e),
            Err(err) => self.shape_err(at, err),
        }
    }

    fn term(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.term()?.negated())
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.rational()?;
                if self.peek() != Some(b'*') {
                    return self.err("expected '*' after a rational scalar");
                }
                self.pos += 1;
                let e = self.comp()?;
                Ok(Expr::Scale(q, Box::new(e)))
            }
            _ => self.comp(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Q> {
        let n = self.integer()?;
        if self.bytes().get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let d = self.integer()?;
            if d == BigInt::from(0) {
                return self.err("zero denominator");
            }
            return Ok(Q::new(n, d));
        }
        Ok(Q::from_integer(n))
    }

    fn comp(&mut self) -> Result<Expr> {
        let mut acc = self.tensor()?;
        loop {
            let at = self.pos;
            if self.peek() == Some(b'.') {
                self.pos += 1;
                let rhs = self.tensor()?;
                acc = self.checked(at, acc.after(rhs))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut acc = self.atom()?;
        loop {
            if self.peek_ident().as_deref() == Some("x") {
                self.pos += 1;
                let rhs = self.atom()?;
                acc = acc.beside(rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = {
            self.ws();
            self.pos
        };
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => {
                let Some(ident) = self.peek_ident() else {
                    return self.err("expected a generator, id(...), poly[...] or '('");
                };
                self.pos += ident.len();
                match ident.as_str() {
                    "id" => {
                        if self.peek() != Some(b'(') {
                            return self.err("expected '(' after id");
                        }
                        self.pos += 1;
                        self.ws();
                        let wstart = self.pos;
                        while self.pos < self.src.len() && self.bytes()[self.pos].is_ascii_alphanumeric() {
                            self.pos += 1;
                        }
                        let w = FWord::parse(&self.src[wstart..self.pos]).map_err(|e| match e {
                            Error::Syntax { offset, message } => Error::Syntax { offset: wstart + offset, message },
                            other => other,
                        })?;
                        if self.peek() != Some(b')') {
                            return self.err("expected ')' after object word");
                        }
                        self.pos += 1;
                        Ok(Expr::Id(w))
                    }
                    "poly" => {
                        if self.bytes().get(self.pos) != Some(&b'[') {
                            return self.err("expected '[' after poly");
                        }
                        self.pos += 1;
                        let pstart = self.pos;
                        let Some(len) = self.src[pstart..].find(']') else {
                            return self.err("unterminated poly[...]");
                        };
                        let f = Poly::parse(&self.src[pstart..pstart + len]).map_err(|e| match e {
                            Error::Syntax { offset, message } => Error::Syntax { offset: pstart + offset, message },
                            other => other,
                        })?;
                        self.pos = pstart + len + 1;
                        let e = Expr::poly(f);
                        match e.shape() {
                            Ok(_) => Ok(e),
                            Err(err) => self.shape_err(start, err),
                        }
                    }
                    other => match GenName::from_token(other) {
                        Some(g) => Ok(Expr::Gen(g)),
                        None => Err(Error::Syntax { offset: start, message: format!("unknown generator {:?}", other) }),
                    },
                }
            }
            None => self.err("unexpected end of input"),
        }
    }
}
