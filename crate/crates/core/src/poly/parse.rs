//! Recursive-descent parser for the polynomial expression grammar:
//! rationals `a/b`, declared variables, `+ - * ^` and parentheses, with
//! `^` taking non-negative integer exponents.

use super::{Coeff, Ctx, Polynomial};
use crate::error::Error;
use crate::Result;
use num_bigint::BigInt;
use num_traits::Zero;

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
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
        let mut out = Vec::new();
        loop {
            lx.skip_ws();
            if lx.pos >= lx.src.len() {
                break;
            }
            let start = lx.pos;
            let b = lx.src[lx.pos];
            let tok = match b {
                b'+' => {
                    lx.pos += 1;
                    Tok::Plus
                }
                b'-' => {
                    lx.pos += 1;
                    Tok::Minus
                }
                b'*' => {
                    lx.pos += 1;
                    Tok::Star
                }
                b'^' => {
                    lx.pos += 1;
                    Tok::Caret
                }
                b'/' => {
                    lx.pos += 1;
                    Tok::Slash
                }
                b'(' => {
                    lx.pos += 1;
                    Tok::LParen
                }
                b')' => {
                    lx.pos += 1;
                    Tok::RParen
                }
                b'0'..=b'9' => {
                    let mut end = lx.pos;
                    while end < lx.src.len() && lx.src[end].is_ascii_digit() {
                        end += 1;
                    }
                    let text = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap();
                    lx.pos = end;
                    Tok::Int(text.parse::<BigInt>().unwrap())
                }
                b if b.is_ascii_alphabetic() || b == b'_' => {
                    let mut end = lx.pos;
                    while end < lx.src.len()
                        && (lx.src[end].is_ascii_alphanumeric() || lx.src[end] == b'_')
                    {
                        end += 1;
                    }
                    let text = std::str::from_utf8(&lx.src[lx.pos..end]).unwrap().to_string();
                    lx.pos = end;
                    Tok::Ident(text)
                }
                other => {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("unexpected character `{}`", other as char),
                    })
                }
            };
            out.push((tok, start));
        }
        Ok(out)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    ctx: &'a Ctx,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        self.idx += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            other => Err(Error::Parse {
                pos,
                msg: format!("expected {:?}, found {:?}", tok, other),
            }),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(&n).map_err(|_| Error::Parse {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(base.power(e));
                }
                Some(Tok::Minus) => return Err(Error::NegativeExponent(pos)),
                other => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected integer exponent, found {:?}", other),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // optional `/ den` forms a rational literal
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::DivisionByZero(format!(
                                    "zero denominator at byte {dpos}"
                                )));
                            }
                            Ok(Polynomial::constant(self.ctx, Coeff::new(n, d)))
                        }
                        other => Err(Error::Parse {
                            pos: dpos,
                            msg: format!("expected integer denominator, found {:?}", other),
                        }),
                    }
                } else {
                    Ok(Polynomial::constant(self.ctx, Coeff::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.ctx.index_of(&name) {
                Some(idx) => Ok(Polynomial::variable(self.ctx, idx)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => Err(Error::Parse {
                pos,
                msg: format!("expected term, found {:?}", other),
            }),
        }
    }
}

/// Parses `text` into a canonical polynomial over `ctx`.
pub fn parse_expression(text: &str, ctx: &Ctx) -> Result<Polynomial> {
    let toks = Lexer::tokens(text)?;
    let mut p = Parser { toks, idx: 0, ctx, end: text.len() };
    let poly = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(Error::Parse {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(poly)
}
