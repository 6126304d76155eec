//! Recursive-descent parser for bracket expressions.
//!
//! Grammar:
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := [rational '*'] atom
//! atom     := gen | '[' expr ',' expr ']' | '(' expr ')'
//! gen      := ('e'|'f'|'h'|'d') index
//! rational := digits ['/' digits]
//! ```
//!
//! `h<i>` is the i-th coroot, `d<i>` the i-th derivation. Brackets are
//! evaluated in the algebra as they are parsed, so truncation violations
//! surface as errors with the offending degree.

use super::{Element, EngineError, GradedAlgebra};
use crate::exact::{rat, Rat};
use num::One;

pub fn parse_element(algebra: &GradedAlgebra, text: &str) -> Result<Element, EngineError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        algebra,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    algebra: &'a GradedAlgebra,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> EngineError {
        EngineError::SyntaxError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<(), EngineError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&format!("expected `{}`", c as char))),
        }
    }

    fn expr(&mut self) -> Result<Element, EngineError> {
        let n = self.algebra.rank();
        let mut acc = Element::zero(n);
        let mut sign = rat(1);
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = rat(-1);
        }
        let first = self.term()?;
        acc.add_scaled(&first, &sign);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc.add_scaled(&t, &rat(1));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc.add_scaled(&t, &rat(-1));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, EngineError> {
        let coeff = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let r = self.rational()?;
            self.expect(b'*')?;
            r
        } else {
            Rat::one()
        };
        let atom = self.atom()?;
        Ok(atom.scaled(&coeff))
    }

    fn rational(&mut self) -> Result<Rat, EngineError> {
        let p = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let q = self.digits()?;
            if q == 0 {
                return Err(self.err("zero denominator"));
            }
            Ok(Rat::new(p.into(), q.into()))
        } else {
            Ok(rat(p))
        }
    }

    fn digits(&mut self) -> Result<i64, EngineError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<Element, EngineError> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                self.expect(b']')?;
                self.algebra.bracket(&left, &right)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'e' | b'f' | b'h' | b'd') => self.generator(),
            _ => Err(self.err("expected a generator, `[`, or `(`")),
        }
    }

    fn generator(&mut self) -> Result<Element, EngineError> {
        let kind = self.bump().expect("peeked");
        let start = self.pos;
        let index = self.digits().map_err(|_| EngineError::SyntaxError {
            position: start,
            message: "generator needs a numeric index".into(),
        })?;
        let n = self.algebra.rank();
        if index < 1 || index as usize > n {
            return Err(EngineError::UnknownGenerator(format!(
                "{}{index}",
                kind as char
            )));
        }
        let i = index as usize - 1;
        Ok(match kind {
            b'e' => Element::generator_e(n, i),
            b'f' => Element::generator_f(n, i),
            b'h' => Element::coroot(n, i),
            b'd' => Element::derivation(n, i),
            _ => unreachable!(),
        })
    }
}
