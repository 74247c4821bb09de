//! Recursive-descent parser for the exact text syntax.
//!
//! Grammar (whitespace ignored):
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' '-'? digits)?
//! atom  := number | 'i' | 'rt' digits '(' expr ')' | 'sqrt(' expr ')' | '(' expr ')'
//! ```
//! Radicands must reduce to rationals.

use super::{ExactValue, RadicalDesc};
use crate::error::{Error, Result};
use rug::{Integer, Rational};

pub(super) fn parse(s: &str) -> Result<ExactValue> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: chars, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser {
    s: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, what: &str) -> Error {
        let tail: String = self.s[self.pos.min(self.s.len())..].iter().collect();
        Error::Parse(format!("{what} at position {} (near {tail:?})", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn starts_with(&self, w: &str) -> bool {
        let w: Vec<char> = w.chars().collect();
        self.s.len() >= self.pos + w.len() && self.s[self.pos..self.pos + w.len()] == w[..]
    }

    fn expr(&mut self) -> Result<ExactValue> {
        let mut v = self.term()?;
        loop {
            if self.eat('+') {
                v = &v + &self.term()?;
            } else if self.eat('-') {
                v = &v - &self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<ExactValue> {
        let mut v = self.unary()?;
        loop {
            if self.eat('*') {
                v = &v * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                v = v.div(&d)?;
            } else {
                return Ok(v);
            }
        }
    }

    fn unary(&mut self) -> Result<ExactValue> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExactValue> {
        let base = self.atom()?;
        if self.eat('^') {
            let paren = self.eat('(');
            let neg = self.eat('-');
            let n = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            if paren && !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            let e: i32 = n.parse().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.s[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Result<Rational> {
        let int = self.digits().unwrap_or_default();
        let mut frac = String::new();
        if self.eat('.') {
            frac = self.digits().unwrap_or_default();
        }
        if int.is_empty() && frac.is_empty() {
            return Err(self.err("expected number"));
        }
        let mut exp10: i64 = -(frac.len() as i64);
        if matches!(self.peek(), Some('e') | Some('E')) {
            self.pos += 1;
            let neg = self.eat('-');
            if !neg {
                self.eat('+');
            }
            let e: i64 = self.digits().ok_or_else(|| self.err("expected exponent digits"))?.parse().map_err(|_| self.err("bad exponent"))?;
            exp10 += if neg { -e } else { e };
        }
        let mantissa: Integer = format!("{int}{frac}").parse().map_err(|_| self.err("bad number"))?;
        let scale = Integer::from(10).pow(exp10.unsigned_abs() as u32);
        Ok(if exp10 >= 0 { Rational::from(mantissa * scale) } else { Rational::from((mantissa, scale)) })
    }

    fn radicand(&mut self) -> Result<Rational> {
        if !self.eat('(') {
            return Err(self.err("expected '('"));
        }
        let inner = self.expr()?;
        if !self.eat(')') {
            return Err(self.err("expected ')'"));
        }
        inner.as_rational().ok_or_else(|| Error::UnsupportedRadical(format!("non-rational radicand {inner}")))
    }

    fn atom(&mut self) -> Result<ExactValue> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => Ok(ExactValue::rational(self.number()?)),
            Some('i') => {
                self.pos += 1;
                Ok(ExactValue::i())
            }
            Some('r') if self.starts_with("rt") => {
                self.pos += 2;
                let k: u32 = self.digits().ok_or_else(|| self.err("expected root index"))?.parse().map_err(|_| self.err("bad root index"))?;
                let n = self.radicand()?;
                ExactValue::make(vec![(Rational::from(1), RadicalDesc::Root { k, n })])
            }
            Some('s') if self.starts_with("sqrt") => {
                self.pos += 4;
                let n = self.radicand()?;
                ExactValue::make(vec![(Rational::from(1), RadicalDesc::Root { k: 2, n })])
            }
            Some('c') if self.starts_with("cbrt") => {
                self.pos += 4;
                let n = self.radicand()?;
                ExactValue::make(vec![(Rational::from(1), RadicalDesc::Root { k: 3, n })])
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

use rug::ops::Pow;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms_roundtrip() {
        for s in ["8 + 6*rt2(2)", "rt3(4)", "rt4(8)", "i", "49/2 + 9/2*rt2(17)", "rt2(-7)", "-3/4 - rt2(6)", "0", "i*rt3(2)"] {
            let v = parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn expressions() {
        assert_eq!(parse("(7+rt2(5))^3/4").unwrap(), parse("112 + 38*rt2(5)").unwrap());
        assert_eq!(parse("2.5").unwrap(), ExactValue::rational(Rational::from((5, 2))));
        assert_eq!(parse("1e3").unwrap(), ExactValue::rational(1000));
        assert_eq!(parse("i*i").unwrap(), ExactValue::rational(-1));
        assert_eq!(parse("sqrt(-3)").unwrap(), parse("rt2(-3)").unwrap());
        assert_eq!(parse("rt2(2)^(-2)").unwrap(), ExactValue::rational(Rational::from((1, 2))));
        assert!(parse("rt2(rt2(2))").is_err());
        assert!(parse("1 +").is_err());
        assert!(parse("1/0").is_err());
    }
}
