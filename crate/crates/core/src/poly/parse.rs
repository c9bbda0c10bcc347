//! Recursive-descent reader for polynomial expressions.
//!
//! ```text
//! expr    := sign? term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := integer ('/' integer)? | name ('^' integer)?
//! ```
//!
//! Whitespace is insignificant. Positions in errors are byte offsets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::PolyError;
use crate::exactla::Rational;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn bump(&mut self) {
        if let Some(c) = self.text[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn syntax(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.syntax("expected an integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let nvars = self.names.len();
        let mut out = Polynomial::zero(nvars);
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                -Rational::one()
            }
            Some('+') => {
                self.bump();
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * &sign);
            match self.peek() {
                Some('+') => {
                    self.bump();
                    sign = Rational::one();
                }
                Some('-') => {
                    self.bump();
                    sign = -Rational::one();
                }
                None => return Ok(out),
                Some(c) => return Err(self.syntax(format!("unexpected character '{c}'"))),
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational), PolyError> {
        let nvars = self.names.len();
        let mut exps = vec![0u32; nvars];
        let mut coeff = Rational::one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    let den = if self.peek() == Some('/') {
                        self.bump();
                        let at = self.pos;
                        let d = self.integer()?;
                        if d.is_zero() {
                            return Err(PolyError::Syntax {
                                position: at,
                                message: "zero denominator".into(),
                            });
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coeff *= Rational::new(num, den);
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let start = self.pos;
                    let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                    let idx = self.names.iter().position(|n| n == name).ok_or_else(|| {
                        PolyError::UnknownVariable {
                            name: name.to_string(),
                            position: start,
                        }
                    })?;
                    let power = if self.peek() == Some('^') {
                        self.bump();
                        let at = self.pos;
                        let k = self.integer()?;
                        u32::try_from(k).map_err(|_| PolyError::Syntax {
                            position: at,
                            message: "exponent too large".into(),
                        })?
                    } else {
                        1
                    };
                    exps[idx] = exps[idx]
                        .checked_add(power)
                        .ok_or_else(|| self.syntax("exponent overflow"))?;
                }
                Some(c) => {
                    return Err(
                        self.syntax(format!("expected a coefficient or variable, found '{c}'"))
                    )
                }
                None => return Err(self.syntax("unexpected end of input")),
            }
            if self.peek() == Some('*') {
                self.bump();
            } else {
                return Ok((Monomial::from_exponents(exps), coeff));
            }
        }
    }
}

/// Parses `text` as a polynomial in the given variables.
pub fn parse_poly(text: &str, names: &[String]) -> Result<Polynomial, PolyError> {
    let mut p = Parser {
        text,
        pos: 0,
        names,
    };
    p.expr()
}
