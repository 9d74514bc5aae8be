//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := int ('/' int)? | var ('^' int)? | '(' expr ')' ('^' int)?
//! ```
//!
//! Juxtaposed identifiers such as `st^4` or `x0x1` are split into ring
//! variables greedily (longest name first), so `st^4` reads as `s*t^4`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::PolyRing;
use crate::coeffs::Field;
use crate::error::{Error, Result};

pub fn parse_polynomial<F: Field>(ring: &Arc<PolyRing<F>>, text: &str) -> Result<Polynomial<F>> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<PolyRing<F>>,
    src: &'a [u8],
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, msg: &str) -> Error {
        let what = match self.src.get(self.pos) {
            Some(&c) if c.is_ascii_graphic() => format!("{msg} `{}`", c as char),
            Some(_) => msg.to_string(),
            None => format!("{msg} (end of input)"),
        };
        Error::Parse { offset: self.pos, msg: what }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut negate = false;
        match self.peek() {
            Some(b'+') => self.pos += 1,
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?)?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    acc = acc.mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.integer()?;
        u32::try_from(e).map_err(|_| Error::Parse { offset: at, msg: "exponent too large".into() })
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let field = self.ring.field();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut c = field.from_bigint(&n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let d = field.from_bigint(&self.integer()?);
                    let inv = field
                        .inv(&d)
                        .ok_or(Error::Parse { offset: at, msg: "zero denominator".into() })?;
                    c = field.mul(&c, &inv);
                }
                Ok(self.ring.constant(c))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                let e = self.exponent()?;
                inner.pow(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let vars = self.split_identifier(ident)?;
                let e = self.exponent()?;
                let mut m = Monomial::one();
                let (last, init) = vars.split_last().expect("nonempty identifier");
                for &v in init {
                    m = m.try_mul(&Monomial::var(v))?;
                }
                m = m.try_mul(&Monomial::var(*last).pow(e)?)?;
                Ok(self.ring.monomial(m, field.one()))
            }
            _ => Err(self.error("unexpected")),
        }
    }

    fn split_identifier(&self, ident: &str) -> Result<Vec<usize>> {
        if let Some(i) = self.ring.var_index(ident) {
            return Ok(vec![i]);
        }
        let mut out = Vec::new();
        let mut rest = ident;
        while !rest.is_empty() {
            let best = self
                .ring
                .names()
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    out.push(i);
                    rest = &rest[n.len()..];
                }
                None => return Err(Error::UnknownVariable(ident.to_string())),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PrimeField;
    use crate::poly::MonomialOrder;

    fn ring() -> Arc<PolyRing<PrimeField>> {
        let names = ["s", "t", "x0", "x1", "x2"].map(String::from).to_vec();
        PolyRing::new(PrimeField::new(32003).unwrap(), names, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn implicit_products() {
        let r = ring();
        let a = r.parse("s^4t+s^3t^2+s^2t^3+st^4").unwrap();
        let b = r.parse("s^4*t+s^3*t^2+s^2*t^3+s*t^4").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        assert_eq!(r.parse("x0x1").unwrap(), r.parse("x0*x1").unwrap());
        assert_eq!(r.parse("-(x0-x1)^2").unwrap().to_string(), "-x0^2+2*x0*x1-x1^2");
    }

    #[test]
    fn errors_carry_offsets() {
        let r = ring();
        match r.parse("x0+*x1") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(r.parse("x0+y"), Err(Error::UnknownVariable(_))));
        assert!(matches!(r.parse("(x0"), Err(Error::Parse { offset: 3, .. })));
        assert!(r.parse("1/0").is_err());
    }

    #[test]
    fn fractions_and_residues() {
        let r = ring();
        let half = r.parse("1/2*x0").unwrap();
        assert_eq!(half.add(&half).unwrap(), r.parse("x0").unwrap());
        let f7 = PolyRing::standard(PrimeField::new(7).unwrap(), "x", 2).unwrap();
        assert_eq!(f7.parse("5x0+3x0").unwrap(), f7.parse("x0").unwrap());
    }
}
