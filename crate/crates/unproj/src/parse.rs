//! Polynomial expression grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := uint ('/' uint)? | ident | '(' expr ')'
//! ```
//! Multiplication must be explicit and exponents are nonnegative integers.

use std::fmt;

use unproj_core::arith::{Field, Integer, Rational};
use unproj_core::poly::{Polynomial, Ring};

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
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

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) | Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'r, K: Field> {
    ring: &'r Ring<K>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_' || chars[i] == '.') {
                    return Err(ParseError {
                        line,
                        column: col0 + i + 1,
                        message: format!("malformed number literal near '{}'", chars[i]),
                    });
                }
                out.push((Tok::Num(chars[start..i].iter().collect()), col0 + start + 1));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col0 + start + 1));
                continue;
            }
            other => {
                return Err(ParseError { line, column: col0 + i + 1, message: format!("unexpected character '{other}'") })
            }
        };
        out.push((tok, col0 + i + 1));
        i += 1;
    }
    out.push((Tok::End, col0 + chars.len() + 1));
    Ok(out)
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line, column: self.toks[self.pos].1, message: message.into() })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial<K>, ParseError> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
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

    fn term(&mut self) -> Result<Polynomial<K>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    return self.err("implicit multiplication; write '*' between factors")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<K>, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<K>, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Num(s) => match s.parse::<u32>() {
                Ok(e) => {
                    self.bump();
                    Ok(base.pow(e))
                }
                Err(_) => self.err(format!("exponent {s} is too large")),
            },
            Tok::Minus => self.err("negative exponent"),
            t => self.err(format!("expected a nonnegative integer exponent, found {t}")),
        }
    }

    fn integer(&mut self, s: &str) -> Result<Integer, ParseError> {
        match s.parse::<Integer>() {
            Ok(v) => Ok(v),
            Err(_) => self.err(format!("malformed number literal '{s}'")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial<K>, ParseError> {
        match self.peek().clone() {
            Tok::Num(s) => {
                let num = self.integer(&s)?;
                self.bump();
                let mut value = Rational::from_integer(num);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let Tok::Num(d) = self.peek().clone() else {
                        return self.err("expected an integer denominator after '/'");
                    };
                    let den = self.integer(&d)?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.bump();
                    value = Rational::new(value.numer().clone(), den).expect("nonzero denominator");
                }
                match self.ring.field().from_rational(&value) {
                    Ok(c) => Ok(Polynomial::constant(self.ring, c)),
                    Err(e) => self.err(format!("coefficient {value} is not in the field: {e}")),
                }
            }
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.bump();
                    Ok(Polynomial::var(self.ring, i))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err(format!("expected ')', found {}", self.peek()));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Slash => self.err("'/' is only allowed between integer literals"),
            t => self.err(format!("expected a number, variable or '(', found {t}")),
        }
    }
}

/// Parses `text` over `ring`; positions are reported as line 1.
pub fn parse_polynomial<K: Field>(text: &str, ring: &Ring<K>) -> Result<Polynomial<K>, ParseError> {
    parse_polynomial_at(text, ring, 1, 0)
}

/// Parses `text` that starts at `line`, column `col0 + 1` of a larger input.
pub fn parse_polynomial_at<K: Field>(
    text: &str,
    ring: &Ring<K>,
    line: usize,
    col0: usize,
) -> Result<Polynomial<K>, ParseError> {
    let toks = lex(text, line, col0)?;
    let mut p = Parser { ring, toks, pos: 0, line };
    if *p.peek() == Tok::End {
        return p.err("empty expression");
    }
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return match p.peek() {
            Tok::RParen => p.err("unbalanced ')'"),
            Tok::Slash => p.err("'/' is only allowed between integer literals"),
            t => {
                let t = t.to_string();
                p.err(format!("unexpected {t}"))
            }
        };
    }
    Ok(out)
}

/// Canonical text of `f`; inverse of [`parse_polynomial`].
pub fn print_polynomial<K: Field>(f: &Polynomial<K>) -> String {
    f.to_string()
}
