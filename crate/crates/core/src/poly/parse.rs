use std::sync::Arc;

use num_bigint::BigInt;

use super::{PolyRing, Polynomial};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(start, "expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn exponent(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| Error::syntax(start, "exponent too large"))
    }

    fn ident(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        self.ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn at_factor_start(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(')
    }

    /// atom := number ('/' number)? | var | '(' expr ')'
    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.number()?;
                let s = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.number()?;
                    field.from_ratio(&num, &den)?
                } else {
                    field.from_bigint(&num)
                };
                Ok(self.ring.constant(s))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => Ok(self.ring.var(self.ident()?)),
            Some(b'(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::syntax(self.pos, "missing `)`"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) => Err(Error::syntax(self.pos, format!("unexpected `{}`", c as char))),
            None => Err(Error::syntax(self.pos, "expected a term")),
        }
    }

    /// factor := atom ('^' nat)?
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(base.pow(u64::from(e)));
        }
        Ok(base)
    }

    /// product := factor ('*'? factor)*, juxtaposition meaning multiplication.
    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if !self.at_factor_start() {
                break;
            }
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            negate = c == b'-';
        }
        loop {
            let t = self.product()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }
}

/// Parses `expr := ('+'|'-')? product (('+'|'-') product)*` with
/// `product := factor ('*'? factor)*`, `factor := atom ('^' nat)?` and
/// `atom := number ('/' number)? | var | '(' expr ')'`.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::syntax(p.pos, "trailing input"));
    }
    Ok(f)
}

/// Byte offsets of the commas outside any parentheses.
fn top_level_commas(text: &str) -> Result<Vec<usize>> {
    let mut depth = 0i32;
    let mut out = Vec::new();
    for (i, c) in text.bytes().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::syntax(i, "unbalanced `)`"));
                }
            }
            b',' if depth == 0 => out.push(i),
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::syntax(text.len(), "missing `)`"));
    }
    Ok(out)
}

/// Parses a comma-separated generator list, optionally wrapped in parentheses.
pub fn parse_generator_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    let mut inner = text.trim();
    top_level_commas(inner)?;
    if let Some(rest) = inner.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        // Only strip when the outer pair matches, not for "(x)*(y)".
        if top_level_commas(rest).is_ok() {
            inner = rest;
        }
    }
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut gens = Vec::new();
    let mut start = 0;
    for cut in top_level_commas(inner)?.into_iter().chain([inner.len()]) {
        gens.push(parse_polynomial(&inner[start..cut], ring)?);
        start = cut + 1;
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    #[test]
    fn renders_canonically() {
        let f2 = PolyRing::grevlex(&["x", "y", "z"], Field::prime(2).unwrap());
        assert_eq!(f2.parse("y^2 - x*z").unwrap().to_string(), "y^2 + x*z");
        let q = PolyRing::grevlex(&["x", "y"], Field::Rational);
        assert_eq!(q.parse("x + x").unwrap().to_string(), "2*x");
        assert_eq!(q.parse("x - x").unwrap().to_string(), "0");
        assert_eq!(q.parse("-3/6 x y^2 + 1").unwrap().to_string(), "-1/2*x*y^2 + 1");
        assert_eq!(q.parse("2x*3y").unwrap().to_string(), "6*x*y");
    }

    #[test]
    fn reports_errors() {
        let q = PolyRing::grevlex(&["x", "y"], Field::Rational);
        assert_eq!(q.parse("x + w"), Err(Error::UnknownVariable("w".into())));
        assert!(matches!(q.parse("x +"), Err(Error::Syntax { .. })));
        assert!(matches!(q.parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(q.parse("x ) y"), Err(Error::Syntax { .. })));
        assert_eq!(q.parse("1/0"), Err(Error::ZeroDenominator));
    }

    #[test]
    fn generator_lists() {
        let q = PolyRing::grevlex(&["x", "y"], Field::Rational);
        let gens = parse_generator_list("(x^2, x*y, y^3)", &q).unwrap();
        assert_eq!(gens.len(), 3);
        assert!(parse_generator_list("()", &q).unwrap().is_empty());
        let gens = parse_generator_list("(x + y)^2, (x)*(y)", &q).unwrap();
        assert_eq!(gens[0].to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(gens[1].to_string(), "x*y");
        assert_eq!(parse_generator_list("(x)*(y)", &q).unwrap().len(), 1);
        assert!(parse_generator_list("(x, y", &q).is_err());
    }

    #[test]
    fn nested_expressions() {
        let q = PolyRing::grevlex(&["x", "y"], Field::Rational);
        assert_eq!(q.parse("-(x - y)^2").unwrap().to_string(), "-x^2 + 2*x*y - y^2");
        assert_eq!(q.parse("2(x + 1)y").unwrap().to_string(), "2*x*y + 2*y");
        assert_eq!(q.parse("(1/2)^2 x").unwrap().to_string(), "1/4*x");
        assert!(matches!(q.parse("(x + y"), Err(Error::Syntax { .. })));
    }
}
