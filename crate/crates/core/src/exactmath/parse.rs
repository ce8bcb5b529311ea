//! Polynomial text grammar.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = factor { "*" factor } ;
//! factor  = "-" factor | "+" factor | primary [ "^" integer ] ;
//! primary = integer [ "/" integer ] | identifier | "(" expr ")" ;
//! ```
//!
//! Implicit multiplication is rejected, `a/b` is only accepted between two
//! integer literals, and every identifier must be a variable of the ring.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::Field;
use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Parses `text` into a polynomial of `ring`.
pub fn parse_polynomial<K: Field>(text: &str, ring: &Arc<PolyRing<K>>) -> Result<Polynomial<K>> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.error("empty input"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a rational literal such as `4`, `-3`, `1/2` or `0.125` (read exactly).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let err = || Error::Parse { pos: 0, msg: format!("invalid rational `{text}`") };
    if let Some((int, frac)) = t.split_once('.') {
        // exact decimal such as `-0.125`
        if t.contains('/') || frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| err())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, scale));
    }
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(Error::Parse { pos: 0, msg: "zero denominator".into() });
    }
    Ok(BigRational::new(n, d))
}

struct Parser<'a, K: Field> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing<K>>,
}

impl<K: Field> Parser<'_, K> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    return Err(self.error("implicit multiplication is not allowed; use `*`"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<K>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(self.factor()?.neg());
            }
            Some(b'+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Parse { pos: start, msg: "exponent too large".into() })?;
            if e > u16::MAX as u32 {
                return Err(Error::Parse { pos: start, msg: "exponent too large".into() });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<Polynomial<K>> {
        let c = self.peek().ok_or_else(|| self.error("unexpected end of input"))?;
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            let num: BigInt = self.digits().parse().map_err(|_| self.error("invalid integer"))?;
            let mut q = BigRational::from_integer(num);
            // `a/b` binds tighter than everything else, but only between literals
            let save = self.pos;
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let den = self.digits();
                if den.is_empty() {
                    return Err(self.error("`/` must be followed by an integer literal"));
                }
                let d: BigInt = den.parse().map_err(|_| self.error("invalid integer"))?;
                if d.is_zero() {
                    return Err(Error::Parse { pos: start, msg: "zero denominator".into() });
                }
                q /= BigRational::from_integer(d);
            } else {
                self.pos = save;
            }
            let v = self.ring.field().from_rational(&q).map_err(|e| Error::Parse { pos: start, msg: e.to_string() })?;
            return Ok(Polynomial::constant(self.ring, v));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
            return match self.ring.var_index(name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
            };
        }
        Err(self.error(&format!("unexpected character `{}`", c as char)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{PrimeField, Rationals};
    use crate::exactmath::monomial::MonomialOrder;

    fn ring() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, &["x1", "x2"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn parses_cusp() {
        let r = ring();
        let f = parse_polynomial("x1^3 - x2^2", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x1^3 - x2^2");
    }

    #[test]
    fn zero_has_no_terms() {
        assert!(parse_polynomial("0", &ring()).unwrap().is_zero());
    }

    #[test]
    fn parenthesized_product() {
        let f = parse_polynomial("(x1+x2)*(x1-x2)", &ring()).unwrap();
        assert_eq!(f.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let r = ring();
        let f = parse_polynomial("-1/2*x1^2 + -x2 - 3/4", &r).unwrap();
        assert_eq!(f.to_string(), "-1/2*x1^2 - x2 - 3/4");
        assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
        assert_eq!(parse_polynomial("-x1^2", &r).unwrap().to_string(), "-x1^2");
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        match parse_polynomial("x1 + y", &r) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "y");
                assert_eq!(pos, 5);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("2 x1", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_polynomial("x1 +", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("(x1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x1/x2", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn parses_over_prime_field() {
        let f7 = PrimeField::new(7).unwrap();
        let r = PolyRing::new(f7, &["x"], MonomialOrder::GrevLex).unwrap();
        let f = parse_polynomial("1/2*x + 8", &r).unwrap();
        assert_eq!(f.to_string(), "4*x + 1");
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("1/2").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_rational(" -4 ").unwrap(), BigRational::from_integer((-4).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("-0.125").unwrap(), BigRational::new((-1).into(), 8.into()));
        assert_eq!(parse_rational("2.50").unwrap(), BigRational::new(5.into(), 2.into()));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("1.5/2").is_err());
    }
}
