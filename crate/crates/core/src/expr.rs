//! Ring expressions.
//!
//! ```text
//! expr := term ("x" term)*
//! term := "Z(" int ")" | "GF(" int ["," int] ")" | "M(" int "," expr ")"
//!       | "T(" int "," gf ")" | "@" path | "(" expr ")"
//! ```
//!
//! `GF(q)` with `q` a prime power is shorthand for `GF(p,k)`. A chain of
//! `x` yields one flat product; parenthesized products stay nested.

use std::path::Path;

use thiserror::Error;

use crate::ring::{RingError, RingSpec, TableSpec};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {expected}")]
    Syntax { offset: usize, expected: String },
    #[error("cannot load table at offset {offset}: {source}")]
    Table { offset: usize, source: RingError },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Table { offset, .. } => *offset,
        }
    }
}

pub fn parse(text: &str) -> Result<RingSpec, ParseError> {
    let mut p = Parser { src: text.as_bytes(), text, pos: 0 };
    let spec = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.expected("end of input or \"x\""));
    }
    Ok(spec)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn expected(&self, what: &str) -> ParseError {
        ParseError::Syntax { offset: self.pos, expected: what.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.expected(&format!("\"{lit}\"")))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        self.text[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.expected("an integer")
        })
    }

    fn expr(&mut self) -> Result<RingSpec, ParseError> {
        let mut factors = vec![self.term()?];
        while self.peek() == Some(b'x') {
            self.pos += 1;
            factors.push(self.term()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { RingSpec::Prod(factors) })
    }

    fn term(&mut self) -> Result<RingSpec, ParseError> {
        if self.eat("Z(") {
            let n = self.int()?;
            self.expect(")")?;
            Ok(RingSpec::Zn(n))
        } else if self.peek() == Some(b'G') {
            self.gf()
        } else if self.eat("M(") {
            let n = self.int()?;
            self.expect(",")?;
            let base = self.expr()?;
            self.expect(")")?;
            Ok(RingSpec::mat(n, base))
        } else if self.eat("T(") {
            let n = self.int()?;
            self.expect(",")?;
            let base = self.gf()?;
            self.expect(")")?;
            Ok(RingSpec::tri(n, base))
        } else if self.eat("@") {
            self.table()
        } else if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            Ok(inner)
        } else {
            Err(self.expected("Z(, GF(, M(, T(, @ or ("))
        }
    }

    fn gf(&mut self) -> Result<RingSpec, ParseError> {
        if !self.eat("GF(") {
            return Err(self.expected("GF("));
        }
        let q = self.int()?;
        let spec = if self.eat(",") {
            RingSpec::Gf { p: q, k: self.int()? }
        } else {
            // A non-prime-power q is left as GF(q, 1) for make_ring to reject.
            RingSpec::gf(q).unwrap_or(RingSpec::Gf { p: q, k: 1 })
        };
        self.expect(")")?;
        Ok(spec)
    }

    fn table(&mut self) -> Result<RingSpec, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&c| !c.is_ascii_whitespace() && c != b')' && c != b',') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.expected("a file path"));
        }
        let path = &self.text[start..self.pos];
        let table = TableSpec::load(Path::new(path)).map_err(|source| ParseError::Table { offset: start, source })?;
        Ok(RingSpec::table(table))
    }
}
