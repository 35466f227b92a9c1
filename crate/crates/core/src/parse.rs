//! Polynomial expressions.
//!
//! ```text
//! expr        := ['-'] term (('+' | '-') term)*
//! term        := factor ('*' factor)*
//! factor      := base ('^' uint)?
//! base        := coefficient | variable | '(' expr ')'
//! coefficient := int | int '/' uint        (fractions over Q only)
//! variable    := 'X' | 'Y' | 'X' uint
//! ```
//!
//! With arity 1 the only variable is `X`; with arity 2 it is `X, Y` (or
//! `X1, X2`); with larger arity it is `X1..Xr`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bivariate::BiPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::multi::MultiPoly;
use crate::uni::UniPoly;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Uni(UniPoly),
    Bi(BiPoly),
    Multi(MultiPoly),
}

#[derive(Debug, Clone, PartialEq, Eq)]
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
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(Error::Syntax {
                        line: l,
                        column: col,
                        expected: format!("a number, variable, operator or parenthesis, found `{c}`"),
                    })
                }
            }
        };
        column += i - start;
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Naming {
    Plain,
    Indexed,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    field: Field,
    arity: usize,
    naming: Option<Naming>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let t = self.peek();
        Error::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.into(),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let negate = self.peek().tok == Tok::Minus;
        if negate {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.checked_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = acc.checked_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().tok.clone() {
            Tok::Int(e) if e <= BigInt::from(MAX_EXPONENT) => {
                self.bump();
                let e: u64 = e.try_into().expect("bounded");
                Ok(base.pow(e))
            }
            Tok::Int(_) => Err(self.error(&format!("an exponent at most {MAX_EXPONENT}"))),
            _ => Err(self.error("an unsigned integer exponent")),
        }
    }

    fn base(&mut self) -> Result<MultiPoly> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(n) => {
                self.bump();
                let c = if self.peek().tok == Tok::Slash {
                    if self.field != Field::Rationals {
                        return Err(self.error("no fraction (fractions are only accepted over Q)"));
                    }
                    self.bump();
                    let d = match self.peek().tok.clone() {
                        Tok::Int(d) if !d.is_zero() => d,
                        _ => return Err(self.error("a nonzero unsigned integer denominator")),
                    };
                    self.bump();
                    self.field.from_ratio(&n, &d)?
                } else {
                    self.field.from_bigint(&n)
                };
                Ok(MultiPoly::constant_any(self.field, self.arity, c))
            }
            Tok::Ident(name) => {
                let index = self.variable(&name, t.line, t.column)?;
                self.bump();
                Ok(MultiPoly::var_any(self.field, self.arity, index))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.error("a number, variable or `(`")),
        }
    }

    /// Zero-based index of a variable name under the declared arity.
    fn variable(&mut self, name: &str, line: usize, column: usize) -> Result<usize> {
        let (naming, index) = match name {
            "X" => (Naming::Plain, 0),
            "Y" => (Naming::Plain, 1),
            _ => match name.strip_prefix('X').and_then(|s| s.parse::<usize>().ok()) {
                Some(k) if k >= 1 && !name[1..].starts_with('0') => (Naming::Indexed, k - 1),
                _ => {
                    return Err(Error::UnknownVariable {
                        name: name.into(),
                        line,
                        column,
                    })
                }
            },
        };
        if naming == Naming::Plain && self.arity > 2 {
            return Err(Error::MixedArity(format!(
                "`{name}` at {line}:{column}: use X1..X{} with {} variables",
                self.arity, self.arity
            )));
        }
        if index >= self.arity {
            return Err(Error::MixedArity(format!(
                "`{name}` at {line}:{column} needs more than {} variable(s)",
                self.arity
            )));
        }
        match self.naming {
            Some(n) if n != naming => Err(Error::MixedArity(format!(
                "`{name}` at {line}:{column} mixes X, Y with indexed names"
            ))),
            _ => {
                self.naming = Some(naming);
                Ok(index)
            }
        }
    }
}

fn parse_raw(text: &str, field: Field, arity: usize) -> Result<MultiPoly> {
    if arity == 0 {
        return Err(Error::MixedArity("arity must be at least 1".into()));
    }
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        field,
        arity,
        naming: None,
    };
    let e = p.expr()?;
    match p.peek().tok {
        Tok::End => Ok(e),
        Tok::Int(_) | Tok::Ident(_) | Tok::LParen => Err(p.error("an operator (implicit multiplication is not allowed)")),
        _ => Err(p.error("an operator or end of input")),
    }
}

/// Parses `text` as a polynomial in `arity` variables.
pub fn parse_poly(text: &str, field: Field, arity: usize) -> Result<Parsed> {
    let raw = parse_raw(text, field, arity)?;
    Ok(match arity {
        1 => Parsed::Uni(raw.to_uni_any()?),
        2 => Parsed::Bi(raw.to_bipoly(1)?),
        _ => Parsed::Multi(raw),
    })
}

pub fn parse_uni(text: &str, field: Field) -> Result<UniPoly> {
    parse_raw(text, field, 1)?.to_uni_any()
}

pub fn parse_bi(text: &str, field: Field) -> Result<BiPoly> {
    parse_raw(text, field, 2)?.to_bipoly(1)
}

/// A polynomial in `X1..Xr`; with `r = 2`, `X` and `Y` are accepted too.
pub fn parse_multi(text: &str, field: Field, r: usize) -> Result<MultiPoly> {
    if r < 2 {
        return Err(Error::MixedArity(format!("multivariate polynomials need r >= 2, got {r}")));
    }
    parse_raw(text, field, r)
}
