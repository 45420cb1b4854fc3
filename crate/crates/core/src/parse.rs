//! Polynomial expressions: integer and `a/b` literals, variables, `+ - * ^`
//! and parentheses. Multiplication must be written out.

use crate::arith::rational::Q;
use crate::error::{Error, Result};
use crate::groebner::{MPoly, Var};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Variable names accepted in user-facing curve and function input.
pub const XY: &[(&str, Var)] = &[("x", Var::X), ("y", Var::Y)];
/// Names accepted when reading back certificates.
pub const STXY: &[(&str, Var)] = &[("s", Var::S), ("t", Var::T), ("x", Var::X), ("y", Var::Y)];

pub fn parse_poly(text: &str) -> Result<MPoly> {
    parse_with(text, XY)
}

/// Parses with an explicit name-to-slot mapping.
pub fn parse_with(text: &str, vars: &[(&str, Var)]) -> Result<MPoly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, vars };
    p.skip_ws();
    if p.pos == p.s.len() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err(&format!("unexpected '{}'", p.s[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a [(&'a str, Var)],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.err("implicit multiplication is not allowed; write '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(b'-') => Err(self.err("negative exponent")),
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.integer()?;
                let e = n.to_u32().filter(|&e| e <= 10_000).ok_or(Error::Parse { pos: start, msg: "exponent too large".into() })?;
                Ok(base.pow(e))
            }
            _ => Err(self.err("expected a nonnegative integer exponent")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse::<BigInt>().unwrap())
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.err("expected a denominator after '/'"));
                    }
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(Error::Parse { pos: save, msg: "zero denominator".into() });
                    }
                    return Ok(MPoly::constant(Q::new(n, d)));
                }
                Ok(MPoly::constant(Q::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                match self.vars.iter().find(|(n, _)| *n == name) {
                    Some((_, v)) => Ok(MPoly::var(*v)),
                    None => Err(Error::Parse { pos: start, msg: format!("unknown variable '{name}'") }),
                }
            }
            Some(c) => Err(self.err(&format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::qf;
    use crate::groebner::mpoly::{c, x, y};

    #[test]
    fn examples() {
        assert_eq!(parse_poly("y^2 - x^3").unwrap(), y().pow(2).sub(&x().pow(3)));
        let ex2 = y().pow(2).sub(&x().pow(3).mul(&x().pow(2).add(&c(1)).pow(2)));
        assert_eq!(parse_poly("y^2 - x^3*(x^2+1)^2").unwrap(), ex2);
        assert_eq!(parse_poly("1/2*x + y").unwrap(), x().scale(&qf(1, 2)).add(&y()));
        assert_eq!(parse_poly("-x^2").unwrap(), x().pow(2).neg());
        assert_eq!(parse_poly("2^3").unwrap(), c(8));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_poly("x + z"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x^-2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("2x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x*(y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x/2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn round_trip_of_printing() {
        let p = parse_with("t^3 - x*t^2 + t*(x+1) - x*(x+1)", STXY).unwrap();
        assert_eq!(parse_with(&p.to_string(), STXY).unwrap(), p);
    }
}
