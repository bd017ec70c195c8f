use std::sync::Arc;

use num_traits::ToPrimitive;

use super::{Polynomial, RingSpec};
use crate::kernel::BigInt;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Syntax { offset: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Arc<RingSpec>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            t => format!("{t:?}"),
        };
        Err(Error::Syntax { offset: self.offset(), message: format!("{message}, found {found}") })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.unary()?;
            acc = acc.checked_mul(&rhs)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(k) => {
                self.bump();
                let k = k.to_u32().ok_or(Error::ExponentOverflow)?;
                base.checked_pow(k)
            }
            _ => self.error("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&v)))
            }
            Tok::Ident(name) => {
                self.bump();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name, offset }),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.error("expected a number, variable or `(`"),
        }
    }
}

/// Parses an expression in the polynomial grammar (see the module docs).
pub fn parse_poly(text: &str, ring: &Arc<RingSpec>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring };
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("expected an operator or end of input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ExponentVector, FieldKind, Scalar};
    use proptest::prelude::*;

    fn ring() -> Arc<RingSpec> {
        Arc::new(RingSpec::new(["X", "Y", "Z"], FieldKind::Rationals).unwrap())
    }

    #[test]
    fn binomial_identity() {
        let r = ring();
        let f = parse_poly("(X+Y)^2 - X^2 - 2*X*Y", &r).unwrap();
        assert_eq!(f, parse_poly("Y^2", &r).unwrap());
    }

    #[test]
    fn double_caret_is_syntax_error_at_two() {
        match parse_poly("X^^2", &ring()) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn juxtaposition_rejected() {
        assert!(matches!(parse_poly("2X", &ring()), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_poly("X Y", &ring()), Err(Error::Syntax { offset: 2, .. })));
    }

    #[test]
    fn unknown_variable() {
        assert_eq!(
            parse_poly("X + W", &ring()),
            Err(Error::UnknownVariable { name: "W".into(), offset: 4 })
        );
    }

    #[test]
    fn exponent_overflow() {
        assert_eq!(parse_poly("X^99999999999", &ring()), Err(Error::ExponentOverflow));
        assert_eq!(parse_poly("(X^65536)^65536", &ring()), Err(Error::ExponentOverflow));
    }

    #[test]
    fn unary_minus_precedence() {
        let r = ring();
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("-X^2"), -&p("X^2"));
        assert_eq!(p("-X*Y"), -&p("X*Y"));
        assert_eq!(p("--X"), p("X"));
        assert_eq!(p("X - -Y"), p("X + Y"));
    }

    #[test]
    fn modular_literals_reduce() {
        let r = Arc::new(RingSpec::new(["X"], FieldKind::Prime(Default::default())).unwrap());
        assert_eq!(parse_poly("32004*X", &r).unwrap(), parse_poly("X", &r).unwrap());
        assert!(parse_poly("32003*X", &r).unwrap().is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..5, 3), -20i64..20), 0..8)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn print_parse_roundtrip(terms in arb_poly()) {
            let r = ring();
            let f = Polynomial::from_terms(
                &r,
                terms.into_iter().map(|(e, c)| (ExponentVector::from(e), Scalar::Rat(crate::kernel::rat(c)))),
            );
            let g = parse_poly(&f.to_string(), &r).unwrap();
            prop_assert_eq!(&f, &g);
            prop_assert_eq!(parse_poly(&g.to_string(), &r).unwrap(), g);
        }
    }
}
