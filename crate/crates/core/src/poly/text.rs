//! Text form of polynomials: `c_k*x^k + ... + c_1*x + c_0`.
//!
//! Rendering uses canonical element labels. Parsing accepts full
//! expressions: sums, differences, products (explicit or implicit),
//! non-negative integer powers and parentheses, so `(x^3-x)^2` and
//! `3x(x-1)` are both valid. Integer literals map through `Z -> R`; chain
//! rings additionally understand `t` and `a`, table rings `e<index>`, and
//! square brackets group exactly like parentheses.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::ring::{Elem, RingKind};

impl PolyRing<'_> {
    pub fn render(&self, f: &Poly) -> String {
        let ring = self.ring();
        let one = ring.one();
        let mut terms: Vec<String> = Vec::new();
        for (k, &c) in f.coeffs().iter().enumerate().rev() {
            if c == ring.zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => String::from("x"),
                k => format!("x^{k}"),
            };
            terms.push(match (k, c == one) {
                (0, _) => ring.label(c),
                (_, true) => mono,
                _ => format!("{}*{mono}", ring.label(c)),
            });
        }
        if terms.is_empty() {
            String::from("0")
        } else {
            terms.join(" + ")
        }
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, px: *self };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(f)
    }
}

struct Parser<'s, 'r> {
    src: &'s [u8],
    pos: usize,
    px: PolyRing<'r>,
}

impl Parser<'_, '_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: String::from(msg) }
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

    fn expr(&mut self) -> Result<Poly> {
        let px = self.px;
        let mut acc = if self.eat(b'-') {
            px.neg(&self.term()?)?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = px.add(&acc, &self.term()?)?;
            } else if self.eat(b'-') {
                acc = px.sub(&acc, &self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            let implicit = matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'[');
            if !(self.eat(b'*') || implicit) {
                return Ok(acc);
            }
            let f = self.factor()?;
            acc = self.px.mul(&acc, &f)?;
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let k = self.number()?;
            let k = u32::try_from(k).map_err(|_| self.err("exponent too large"))?;
            return self.px.pow(&base, k);
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or_else(|| Error::Parse { pos: start, msg: String::from("expected a number") })
    }

    fn atom(&mut self) -> Result<Poly> {
        let px = self.px;
        let ring = px.ring();
        match self.peek() {
            Some(b'(') | Some(b'[') => {
                let close = if self.src[self.pos] == b'(' { b')' } else { b']' };
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(close) {
                    return Err(self.err("unbalanced bracket"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(px.constant(ring.from_int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                if c == b'e' && matches!(ring.kind(), RingKind::Table) {
                    let idx = self.number()?;
                    if idx < 0 || idx >= ring.order() as i64 {
                        return Err(Error::Parse { pos: start, msg: format!("no element e{idx}") });
                    }
                    return Ok(px.constant(Elem(idx as u32)));
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "x" {
                    return Ok(px.x());
                }
                ring.named_element(name)
                    .map(|a| px.constant(a))
                    .ok_or_else(|| Error::Parse { pos: start, msg: format!("unknown symbol `{name}`") })
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
