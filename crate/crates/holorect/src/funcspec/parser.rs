//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' nonneg_int)?
//! atom  := number | 'i' | var | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! Numbers are decimal with optional fraction and exponent. `^` takes a bare
//! nonnegative integer literal; anything else is rejected at its position.

use crate::complex::{Complex, I};
use crate::error::{Error, Result};

use super::expr::{Builtin, Expr};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { value: f64, integral: Option<u64> },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
        };
        let mut out = Vec::new();
        while let Some((tok, pos)) = lx.next_token()? {
            out.push((tok, pos));
        }
        Ok(out)
    }

    fn next_token(&mut self) -> Result<Option<(Tok, usize)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => return Ok(Some((self.lex_number()?, start))),
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end])
                    .expect("alphanumeric ascii")
                    .to_string();
                self.pos = end;
                return Ok(Some((Tok::Ident(name), start)));
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character '{}'", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((tok, start)))
    }

    fn lex_number(&mut self) -> Result<Tok> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let mut plain_int = true;
        if self.pos < self.src.len() && self.src[self.pos] == b'.' {
            plain_int = false;
            self.pos += 1;
            if self.pos >= self.src.len() || !self.src[self.pos].is_ascii_digit() {
                return Err(Error::Syntax {
                    pos: self.pos,
                    msg: "expected digits after decimal point".into(),
                });
            }
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
        }
        if self.pos < self.src.len() && (self.src[self.pos] == b'e' || self.src[self.pos] == b'E')
        {
            // only a well-formed exponent suffix belongs to the number;
            // otherwise the 'e' starts an identifier such as exp(
            let mut look = self.pos + 1;
            if look < self.src.len() && (self.src[look] == b'+' || self.src[look] == b'-') {
                look += 1;
            }
            if look < self.src.len() && self.src[look].is_ascii_digit() {
                plain_int = false;
                self.pos = look;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value: f64 = text.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("invalid number literal '{text}'"),
        })?;
        let integral = if plain_int { text.parse::<u64>().ok() } else { None };
        Ok(Tok::Num { value, integral })
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    var: &'a str,
    end: usize,
}

pub fn parse_expr(src: &str, var: &str) -> Result<Expr> {
    let toks = Lexer::tokens(src)?;
    let mut p = Parser {
        toks,
        idx: 0,
        var,
        end: src.len(),
    };
    let e = p.expr()?;
    if let Some((tok, pos)) = p.peek() {
        return Err(Error::Syntax {
            pos,
            msg: format!("unexpected trailing input {tok:?}"),
        });
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<(Tok, usize)> {
        self.toks.get(self.idx).cloned()
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.peek();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(_, p)| p).unwrap_or(self.end)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.bump() {
            Some((t, _)) if t == want => Ok(()),
            Some((t, pos)) => Err(Error::Syntax {
                pos,
                msg: format!("expected {what}, found {t:?}"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.idx += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Add(lhs.into(), rhs.into());
                }
                Tok::Minus => {
                    self.idx += 1;
                    let rhs = self.term()?;
                    lhs = Expr::Sub(lhs.into(), rhs.into());
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Tok::Star => {
                    self.idx += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(lhs.into(), rhs.into());
                }
                Tok::Slash => {
                    self.idx += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Div(lhs.into(), rhs.into());
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some((Tok::Minus, _)) = self.peek() {
            self.idx += 1;
            let inner = self.unary()?;
            return Ok(Expr::Sub(
                Expr::Const(Complex::new(0.0, 0.0)).into(),
                inner.into(),
            ));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some((Tok::Caret, _)) = self.peek() {
            self.idx += 1;
            let pos = self.here();
            match self.bump() {
                Some((
                    Tok::Num {
                        integral: Some(n), ..
                    },
                    _,
                )) if n <= u32::MAX as u64 => Ok(Expr::Pow(base.into(), n as u32)),
                Some((Tok::Num { .. }, _)) | Some((Tok::Minus, _)) => Err(Error::Syntax {
                    pos,
                    msg: "exponent must be a nonnegative integer literal".into(),
                }),
                _ => Err(Error::Syntax {
                    pos,
                    msg: "expected a nonnegative integer exponent after '^'".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some((Tok::Num { value, .. }, _)) => Ok(Expr::Const(Complex::from(value))),
            Some((Tok::Ident(name), pos)) => {
                if name == "i" {
                    return Ok(Expr::Const(I));
                }
                if name == self.var {
                    return Ok(Expr::Var);
                }
                let builtin = match name.as_str() {
                    "exp" => Builtin::Exp,
                    "sin" => Builtin::Sin,
                    "cos" => Builtin::Cos,
                    _ => {
                        return Err(Error::Syntax {
                            pos,
                            msg: format!("unknown function or symbol '{name}'"),
                        })
                    }
                };
                self.expect(Tok::LParen, "'(' after function name")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Call(builtin, arg.into()))
            }
            Some((Tok::LParen, _)) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some((t, pos)) => Err(Error::Syntax {
                pos,
                msg: format!("expected a value, found {t:?}"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}
