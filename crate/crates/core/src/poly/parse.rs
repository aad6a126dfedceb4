//! Infix polynomial syntax.
//!
//! ```text
//! poly   := sign? term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' nat)?
//! coeff  := int ('/' nat)?
//! ```
//!
//! Whitespace is ignored. Juxtaposition (`2x`, `x y`) is rejected.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let col = pos + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '/' | '^' => {
                toks.push((
                    col,
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '/' => Tok::Slash,
                        _ => Tok::Caret,
                    },
                ));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                toks.push((col, Tok::Int(s.parse().expect("digits"))));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                toks.push((col, Tok::Ident(s)));
            }
            other => return Err(syntax(col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ring: &'a Ring,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map(|(c, _)| *c).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn nat(&mut self, what: &str) -> Result<BigInt> {
        let col = self.column();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => Err(syntax(col, format!("expected {what}"))),
        }
    }

    fn poly(&mut self) -> Result<Vec<(Monomial, Rational)>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            let col = self.column();
            match self.bump() {
                None => break,
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => return Err(syntax(col, "expected `+`, `-` or end of input")),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut mono = Monomial::one(self.ring.arity());
        let col = self.column();
        match self.peek() {
            Some(Tok::Int(_)) => {
                let num = self.nat("integer")?;
                let mut den = BigInt::one();
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dcol = self.column();
                    den = self.nat("denominator")?;
                    if den.is_zero() {
                        return Err(syntax(dcol, "zero denominator"));
                    }
                }
                coeff = Rational::new(num, den);
            }
            Some(Tok::Ident(_)) => mono = mono.mul(&self.factor()?),
            _ => return Err(syntax(col, "expected a coefficient or a variable")),
        }
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            mono = mono.mul(&self.factor()?);
        }
        if let Some(Tok::Int(_)) | Some(Tok::Ident(_)) = self.peek() {
            return Err(syntax(self.column(), "implicit multiplication is not allowed; use `*`"));
        }
        Ok((mono, coeff))
    }

    fn factor(&mut self) -> Result<Monomial> {
        let col = self.column();
        let name = match self.bump() {
            Some(Tok::Ident(n)) => n,
            _ => return Err(syntax(col, "expected a variable")),
        };
        let idx = self.ring.index_of(&name).ok_or(Error::UnknownVariable(name))?;
        let mut e: u32 = 1;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let ecol = self.column();
            let n = self.nat("exponent")?;
            e = u32::try_from(n).map_err(|_| syntax(ecol, "exponent too large"))?;
        }
        let mut m = Monomial::one(self.ring.arity());
        m.set_exponent(idx, e);
        Ok(m)
    }
}

/// Parses `text` over `ring`. Error positions are 1-based columns.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(1, "empty polynomial"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ring,
        end: text.len() + 1,
    };
    let terms = p.poly()?;
    Ok(Polynomial::from_terms(ring, terms))
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Ring) -> Result<Polynomial> {
        parse_polynomial(text, ring)
    }
}
