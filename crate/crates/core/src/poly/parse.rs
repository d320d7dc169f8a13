//! Plain-text polynomial syntax.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | variable ['^' integer]
//! ```
//!
//! Variables are written `e_i_j`, `f_i_j`, `x_i`, `y_i`, `z_i_j`,
//! `xt_p_q_l`, `yt_p_q_l`. Whitespace is ignored between tokens.

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use super::variable::Variable;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.base + self.pos, msg)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.err("expected an integer"));
        }
        Ok(digits)
    }

    fn factor(&mut self) -> Result<(Rational, Monomial)> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let num = self.integer()?;
                self.skip_ws();
                let text = if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    format!("{num}/{den}")
                } else {
                    num.to_string()
                };
                let value: Rational = text.parse().map_err(|e: String| Error::parse(self.base + at, e))?;
                Ok((value, Monomial::one()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                let var: Variable = name
                    .parse()
                    .map_err(|e: Error| Error::parse(self.base + at, e.to_string()))?;
                self.skip_ws();
                let exp = if self.peek() == Some('^') {
                    self.pos += 1;
                    let e = self.integer()?;
                    e.parse::<u32>().map_err(|_| self.err("exponent too large"))?
                } else {
                    1
                };
                Ok((Rational::one(), Monomial::from_pairs([(var, exp)])))
            }
            Some(c) => Err(self.err(format!("unexpected character `{c}`"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let (mut c, mut m) = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok((m, c));
            }
            self.pos += 1;
            let (c2, m2) = self.factor()?;
            c = &c * &c2;
            m = m.mul(&m2);
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            self.skip_ws();
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                None => break,
                Some(c) => return Err(self.err(format!("expected `+` or `-`, found `{c}`"))),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(terms))
    }
}

/// Parses one polynomial.
pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    Cursor { src, pos: 0, base: 0 }.poly()
}

/// Parses a generator list: one polynomial per line, `#` starts a comment,
/// blank lines are skipped. Error offsets are relative to the whole input.
pub fn parse_generators(src: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut base = 0;
    for line in src.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or_default();
        if !body.trim().is_empty() {
            out.push(
                Cursor {
                    src: body.trim_end(),
                    pos: 0,
                    base,
                }
                .poly()?,
            );
        }
        base += line.len();
    }
    Ok(out)
}
