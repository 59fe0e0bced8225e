//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   = term { ("+" | "-") term } ;
//! term   = unary { "*" unary } ;
//! unary  = "-" unary | power ;
//! power  = atom [ "^" integer ] ;
//! atom   = integer | identifier | "(" expr ")" ;
//! ```

use std::sync::Arc;

use super::poly::{RingSpec, TruncPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, i)),
            '-' => out.push((Tok::Minus, i)),
            '*' => out.push((Tok::Star, i)),
            '^' => out.push((Tok::Caret, i)),
            '(' => out.push((Tok::LParen, i)),
            ')' => out.push((Tok::RParen, i)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    spec: &'a Arc<RingSpec>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<TruncPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TruncPoly> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<TruncPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<TruncPoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.at();
        match self.bump() {
            Tok::Int(s) => {
                let e: u32 = s.parse().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("exponent `{s}` too large"),
                })?;
                // anything of positive order raised past the cap vanishes
                let e = if base.order().is_some_and(|o| o > 0) {
                    e.min(self.spec.cap())
                } else {
                    e
                };
                Ok(base.pow(e))
            }
            other => Err(Error::Parse {
                pos,
                msg: format!("expected integer exponent, found {}", describe(&other)),
            }),
        }
    }

    fn atom(&mut self) -> Result<TruncPoly> {
        let pos = self.at();
        match self.bump() {
            Tok::Int(s) => {
                let p = self.spec.field().p() as u64;
                let v = s.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(TruncPoly::constant(self.spec, v as u32))
            }
            Tok::Ident(name) => match self.spec.var_index(&name) {
                Some(i) => Ok(TruncPoly::var(self.spec, i)),
                None => Err(Error::UnknownIdentifier { name, pos }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.at();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    other => Err(Error::Parse {
                        pos: close,
                        msg: format!("expected `)`, found {}", describe(&other)),
                    }),
                }
            }
            other => Err(Error::Parse {
                pos,
                msg: format!("expected a number, variable or `(`, found {}", describe(&other)),
            }),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) => format!("`{s}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parse an expression into its expansion reduced mod `p` and truncated at
/// the ring's cap.
pub fn parse_poly(text: &str, spec: &Arc<RingSpec>) -> Result<TruncPoly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, spec };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(Error::Parse {
            pos: p.at(),
            msg: format!("unexpected {}", describe(p.peek())),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::ring::Monomial;

    fn ring() -> Arc<RingSpec> {
        let names = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
        RingSpec::new(names, PrimeField::default(), 8).unwrap()
    }

    fn mono(e: [u16; 4]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn hypersurface_equation() {
        let r = ring();
        let f = parse_poly("x^2*(x-y)", &r).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.coeff(&mono([3, 0, 0, 0])), 1);
        assert_eq!(f.coeff(&mono([2, 1, 0, 0])), r.field().from_i64(-1));
        assert_eq!(f.to_string(), "x^3 - x^2*y");
    }

    #[test]
    fn zero_has_no_order() {
        let z = parse_poly("0", &ring()).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.order(), None);
    }

    #[test]
    fn binomial_square() {
        let r = ring();
        let p = parse_poly("(x+y)^2", &r).unwrap();
        assert_eq!(p.coeff(&mono([2, 0, 0, 0])), 1);
        assert_eq!(p.coeff(&mono([1, 1, 0, 0])), 2);
        assert_eq!(p.coeff(&mono([0, 2, 0, 0])), 1);
        assert_eq!(p.terms().len(), 3);
    }

    #[test]
    fn precedence_and_unary_minus() {
        let r = ring();
        assert_eq!(parse_poly("-x^2", &r).unwrap(), parse_poly("-(x*x)", &r).unwrap());
        assert_eq!(parse_poly("1+2*3", &r).unwrap(), parse_poly("7", &r).unwrap());
        assert_eq!(parse_poly("x - - y", &r).unwrap(), parse_poly("x+y", &r).unwrap());
        assert_eq!(parse_poly("32004", &r).unwrap(), parse_poly("1", &r).unwrap());
    }

    #[test]
    fn huge_exponent_truncates() {
        let r = ring();
        assert!(parse_poly("x^1000000", &r).unwrap().is_zero());
        assert_eq!(parse_poly("(1+x)^0", &r).unwrap(), parse_poly("1", &r).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert_eq!(
            parse_poly("x + w", &r),
            Err(Error::UnknownIdentifier { name: "w".into(), pos: 4 })
        );
        assert!(matches!(parse_poly("(x+y", &r), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly("x y", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x $", &r), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("", &r), Err(Error::Parse { pos: 0, .. })));
    }
}
