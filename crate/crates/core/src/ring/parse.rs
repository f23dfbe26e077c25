//! Polynomial text grammar.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := atom ['^' integer]
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Juxtaposition is rejected: `2x` and `x y` are errors.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().map_err(|_| Error::Parse {
                pos,
                msg: "bad integer".into(),
            })?;
            out.push((pos, Tok::Int(n)));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(s[start..i].to_string())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((pos, tok));
        i += c.len_utf8();
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
        if matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen)) {
            return self.err("expected `*` between factors");
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            let Some(Tok::Int(k)) = self.peek().cloned() else {
                return self.err("expected a non-negative integer exponent");
            };
            let k: u32 = k.try_into().map_err(|_| Error::Parse {
                pos: self.pos(),
                msg: "exponent too large".into(),
            })?;
            self.at += 1;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let mut c = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.at += 1;
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return self.err("expected an integer denominator");
                    };
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.at += 1;
                    c /= Rational::from_integer(d);
                }
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                let Some(i) = self.ring.var_index(&name) else {
                    return Err(Error::UnknownVariable(name));
                };
                self.at += 1;
                Ok(Polynomial::monomial(
                    self.ring,
                    Monomial::var(self.ring.nvars(), i),
                    Rational::from_integer(1.into()),
                ))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_polynomial(ring: &Ring, s: &str) -> Result<Polynomial> {
    let toks = tokenize(s)?;
    let mut parser = Parser {
        ring,
        toks,
        at: 0,
        end: s.len() + 1,
    };
    let p = parser.expr()?;
    if parser.at != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradingSpec;

    #[test]
    fn rationals_and_whitespace() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        let a = parse_polynomial(&r, "3/2*x^2*y - z^3").unwrap();
        let b = parse_polynomial(&r, "  - z ^ 3+3 / 2 * x^2 *y").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_juxtaposition() {
        let r = GradingSpec::standard(&["x", "y"]);
        assert!(matches!(
            parse_polynomial(&r, "2x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_polynomial(&r, "x y"),
            Err(Error::Parse { pos: 3, .. })
        ));
    }

    #[test]
    fn unknown_variable() {
        let r = GradingSpec::standard(&["x"]);
        assert_eq!(
            parse_polynomial(&r, "x + w"),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn parentheses_and_powers() {
        let r = GradingSpec::standard(&["x", "y"]);
        let a = parse_polynomial(&r, "(x+y)^2 - 2*x*y").unwrap();
        assert_eq!(a, parse_polynomial(&r, "x^2 + y^2").unwrap());
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
    }
}
