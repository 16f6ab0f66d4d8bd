//! Polynomial text format: parsing and canonical printing.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! poly   := sign? term ((`+`|`-`) term)*
//! term   := coeff (`*`? factor)* | factor (`*` factor)*
//! factor := var (`^` uint)?
//! coeff  := int (`/` uint)?
//! ```
//!
//! Printing emits the canonical form read back by the parser: terms in the
//! ring's descending monomial order, reduced coefficients, explicit `*`
//! between factors, and `^` only for exponents above one.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, RingCtx};
use crate::error::{Error, Result};
use crate::rational::Rational;

struct Parser<'a> {
    ring: &'a Arc<RingCtx>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Arc<RingCtx>, input: &'a str) -> Self {
        Parser {
            ring,
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn uint(&mut self) -> Result<BigInt> {
        Ok(BigInt::from_str(self.digits()?).unwrap())
    }

    /// `int (`/` uint)?`, sign included.
    fn coeff(&mut self) -> Result<Rational> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        self.skip_ws();
        let mut numer = self.uint()?;
        if negative {
            numer = -numer;
        }
        self.skip_ws();
        if self.eat(b'/') {
            self.skip_ws();
            let pos = self.pos;
            let denom = self.uint()?;
            if denom.is_zero() {
                return Err(Error::Syntax {
                    position: pos,
                    message: "zero denominator".into(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    /// `var (`^` uint)?`; accumulates into the exponent vector.
    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let start = self.pos;
        if !self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
            return Err(self.error("expected a variable"));
        }
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let var = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                position: start,
            })?;
        self.skip_ws();
        let exp: u32 = if self.eat(b'^') {
            self.skip_ws();
            let pos = self.pos;
            let digits = self.digits()?;
            digits.parse().map_err(|_| Error::Syntax {
                position: pos,
                message: "exponent too large".into(),
            })?
        } else {
            1
        };
        exps[var] = exps[var]
            .checked_add(exp)
            .ok_or_else(|| self.error("exponent too large"))?;
        Ok(())
    }

    /// One term: an optional coefficient followed by factors.
    fn term(&mut self) -> Result<(Rational, Monomial)> {
        self.skip_ws();
        let mut exps = vec![0u32; self.ring.arity()];
        let leading_coeff = matches!(self.peek(), Some(b) if b.is_ascii_digit() || b == b'-' || b == b'+');
        let coeff = if leading_coeff {
            let c = self.coeff()?;
            // After a coefficient each factor may omit the `*`.
            loop {
                self.skip_ws();
                let starred = self.eat(b'*');
                self.skip_ws();
                if starred {
                    self.factor(&mut exps)?;
                } else if self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
                    self.factor(&mut exps)?;
                } else {
                    break;
                }
            }
            c
        } else {
            self.factor(&mut exps)?;
            loop {
                self.skip_ws();
                if self.eat(b'*') {
                    self.skip_ws();
                    self.factor(&mut exps)?;
                } else {
                    break;
                }
            }
            Rational::one()
        };
        Ok((coeff, Monomial::from_exps(&exps)))
    }
}

pub(super) fn parse(ring: &Arc<RingCtx>, input: &str) -> Result<Polynomial> {
    let mut parser = Parser::new(ring, input);
    let mut terms: Vec<(Rational, Monomial)> = Vec::new();
    parser.skip_ws();
    if parser.peek().is_none() {
        return Err(parser.error("empty input"));
    }
    let mut negate = if parser.eat(b'-') {
        true
    } else {
        parser.eat(b'+');
        false
    };
    loop {
        let (coeff, mon) = parser.term()?;
        terms.push((if negate { -coeff } else { coeff }, mon));
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some(b'+') => {
                parser.pos += 1;
                negate = false;
            }
            Some(b'-') => {
                parser.pos += 1;
                negate = true;
            }
            Some(_) => return Err(parser.error("expected `+`, `-`, or end of input")),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Read one polynomial per line; `#` starts a comment line and blank lines
/// are skipped. Errors carry the 1-based line number.
pub fn read_polynomials(ring: &Arc<RingCtx>, text: &str) -> Result<Vec<Polynomial>> {
    let mut polys = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let poly = ring.parse(trimmed).map_err(|e| Error::Syntax {
            position: 0,
            message: format!("line {}: {e}", i + 1),
        })?;
        polys.push(poly);
    }
    Ok(polys)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &RingCtx, m: &Monomial) -> fmt::Result {
    let mut first = true;
    // Print factors in priority order so greater variables come first.
    for &v in ring.order().priority() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", ring.var_name(v))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms().iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}
