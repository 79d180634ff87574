//! Text grammar for polynomials and the canonical printer.
//!
//! Grammar: variables `x[i,j]` with 1-based indices, integer (or `a/b`
//! rational) coefficients, operators `+ - * ^`, parentheses; whitespace is
//! insignificant. Canonical printing sorts terms descending in the active
//! order, so parse -> print -> parse is the identity on canonical text.

use std::sync::Arc;

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::monomial::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn small_integer(&mut self) -> Result<usize> {
        let v = self.integer()?;
        let digits = v.to_u64_digits().1;
        match digits.as_slice() {
            [] => Ok(0),
            [d] if *d <= u16::MAX as u64 => Ok(*d as usize),
            _ => Err(self.err("index or exponent too large")),
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    // factor := primary ('^' uint)?
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.eat(b'^') {
            let e = self.small_integer()?;
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    // primary := integer ['/' integer] | 'x[' i ',' j ']' | '(' expr ')'
    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                self.expect(b'[')?;
                let i = self.small_integer()?;
                self.expect(b',')?;
                let j = self.small_integer()?;
                self.expect(b']')?;
                Polynomial::var(&self.ring, i, j)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let field = self.ring.field();
                let mut coeff = field.from_bigint(&num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    let den = field.from_bigint(&den);
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    coeff = coeff.div(&den);
                }
                Ok(Polynomial::constant(&self.ring, coeff))
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a polynomial in the text grammar over `ring`.
pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring: Arc::clone(ring) };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

/// Canonical text, terms descending under `ord`.
pub fn print_poly(f: &Polynomial, ord: &TermOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let cmp = ord.compile(f.ring().nvars());
    let mut terms: Vec<&crate::poly::Term> = f.terms().iter().collect();
    terms.sort_by(|a, b| cmp.cmp(&b.mon, &a.mon));
    let ring = f.ring();
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let coeff = if t.coeff.is_negative() { t.coeff.neg() } else { t.coeff.clone() };
        if k == 0 {
            if t.coeff.is_negative() {
                out.push('-');
            }
        } else if t.coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if !coeff.is_one() || t.mon.is_one() {
            factors.push(coeff.to_string());
        }
        for idx in t.mon.support() {
            let e = t.mon.exp(idx);
            if e == 1 {
                factors.push(ring.var_name(idx));
            } else {
                factors.push(format!("{}^{}", ring.var_name(idx), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", print_poly(self, &TermOrder::Grevlex))
    }
}
