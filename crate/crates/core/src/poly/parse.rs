//! Text grammar for polynomials, used repo-wide.
//!
//! Integer/rational literals, variable names `[A-Za-z][A-Za-z0-9_]*`,
//! operators `+ - * ^`, parentheses; whitespace insignificant. `^` binds
//! tighter than `*`, which binds tighter than `+`/`-`; unary minus is
//! allowed.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::vars::VarTable;

use super::{MPoly, PolyError};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek_byte(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_tok(&mut self) -> Result<(Tok, usize), PolyError> {
        while matches!(self.peek_byte(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        let start = self.pos;
        self.next_tok_at(start).map(|t| (t, start))
    }

    fn next_tok_at(&mut self, _start: usize) -> Result<Tok, PolyError> {
        let b = match self.peek_byte() {
            None => return Ok(Tok::End),
            Some(b) => b,
        };
        self.pos += 1;
        match b {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'^' => Ok(Tok::Caret),
            b'/' => Ok(Tok::Slash),
            b'(' => Ok(Tok::LParen),
            b')' => Ok(Tok::RParen),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while matches!(self.peek_byte(), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Tok::Int(text.parse().unwrap()))
            }
            b if b.is_ascii_alphabetic() => {
                let start = self.pos - 1;
                while matches!(self.peek_byte(), Some(c) if c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
                ))
            }
            _ => Err(self.error(&format!("unexpected character {:?}", b as char))),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    tok_pos: usize,
    table: Arc<VarTable>,
}

impl<'a> Parser<'a> {
    fn new(table: &Arc<VarTable>, src: &'a str) -> Result<Self, PolyError> {
        let mut lexer = Lexer::new(src);
        let (tok, tok_pos) = lexer.next_tok()?;
        Ok(Parser { lexer, tok, tok_pos, table: table.clone() })
    }

    fn bump(&mut self) -> Result<(), PolyError> {
        let (tok, pos) = self.lexer.next_tok()?;
        self.tok = tok;
        self.tok_pos = pos;
        Ok(())
    }

    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.tok_pos, msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = match self.tok {
            Tok::Minus => {
                self.bump()?;
                self.term()?.neg()
            }
            Tok::Plus => {
                self.bump()?;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.tok {
                Tok::Star => {
                    self.bump()?;
                    acc = acc.mul(&self.power()?);
                }
                Tok::Slash => {
                    // only constant divisors: rational literals like 1/2
                    self.bump()?;
                    let d = self.power()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !num_traits::Zero::is_zero(c))
                        .ok_or_else(|| self.error("division only by nonzero constants"))?;
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly, PolyError> {
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.bump()?;
            let e = match std::mem::replace(&mut self.tok, Tok::End) {
                Tok::Int(n) => n,
                other => {
                    self.tok = other;
                    return Err(self.error("expected integer exponent"));
                }
            };
            self.bump()?;
            let e: usize = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MPoly, PolyError> {
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => {
                self.bump()?;
                Ok(MPoly::constant(
                    &self.table,
                    BigRational::new(n, BigInt::one()),
                ))
            }
            Tok::Ident(name) => {
                let at = self.tok_pos;
                self.bump()?;
                match self.table.lookup(&name) {
                    Some(idx) => Ok(MPoly::var_idx(&self.table, idx)),
                    None => Err(PolyError::Parse {
                        pos: at,
                        msg: format!("unknown variable {name}"),
                    }),
                }
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.error("expected closing parenthesis"));
                }
                self.bump()?;
                Ok(inner)
            }
            Tok::Minus => {
                self.bump()?;
                Ok(self.atom()?.neg())
            }
            other => {
                self.tok = other;
                Err(self.error("expected literal, variable or parenthesis"))
            }
        }
    }
}

/// Parse a polynomial in the repo-wide text grammar over `table`.
pub fn parse_poly(table: &Arc<VarTable>, src: &str) -> Result<MPoly, PolyError> {
    let mut p = Parser::new(table, src)?;
    let poly = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.error("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let t = VarTable::standard();
        let a = parse_poly(&t, "t1^3 + t2*t3^2").unwrap();
        assert_eq!(a.total_degree(), 3);
        assert_eq!(a.num_terms(), 2);
    }

    #[test]
    fn parse_rational_and_unary() {
        let t = VarTable::standard();
        let a = parse_poly(&t, "-1/2*t1 + (t2 - t1)^2").unwrap();
        let b = parse_poly(&t, "t1^2 - 2*t1*t2 + t2^2 - 1/2*t1").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_errors_carry_position() {
        let t = VarTable::standard();
        match parse_poly(&t, "t1 + q3") {
            Err(PolyError::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_poly(&t, "t1 +").is_err());
        assert!(parse_poly(&t, "(t1").is_err());
        assert!(parse_poly(&t, "t1 t2").is_err());
    }
}
