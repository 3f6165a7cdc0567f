//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'|'+'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | variable | parameter | '(' expr ')' | '-' factor
//! ```
//!
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use super::{Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl Lexer<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn next_token(&mut self) -> Result<(Tok, usize, usize)> {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        let Some(&c) = self.chars.peek() else {
            return Ok((Tok::End, line, col));
        };
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = self.chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                self.bump();
            }
            return Ok((Tok::Int(s.parse().unwrap()), line, col));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = self.chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                s.push(d);
                self.bump();
            }
            return Ok((Tok::Ident(s), line, col));
        }
        if "+-*/^()".contains(c) {
            self.bump();
            return Ok((Tok::Sym(c), line, col));
        }
        Err(Error::Parse { line, col, msg: format!("unexpected character `{c}`") })
    }
}

struct Parser<'r> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    ring: &'r Ring,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (_, line, col) = &self.toks[self.pos];
        Err(Error::Parse { line: *line, col: *col, msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if *self.peek() == Tok::Sym('/') {
                self.pos += 1;
                let at = self.pos;
                let d = self.factor()?;
                let Some(c) = d.as_constant() else {
                    self.pos = at;
                    return self.err("division by a non-constant polynomial");
                };
                let Ok(inv) = c.inv() else {
                    self.pos = at;
                    return self.err("division by zero");
                };
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let Tok::Int(k) = self.peek().clone() else {
                return self.err("expected an integer exponent");
            };
            let Ok(k) = u16::try_from(&k) else {
                return self.err("exponent exceeds the 16-bit limit");
            };
            self.pos += 1;
            if let Some(d) = base.total_degree() {
                if d as u64 * k as u64 > u16::MAX as u64 {
                    return self.err("exponent exceeds the 16-bit limit");
                }
            }
            return Ok(base.pow(k as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        match self.peek().clone() {
            Tok::Int(k) => {
                self.pos += 1;
                Ok(self.ring.constant(field.from_bigint(&k)))
            }
            Tok::Ident(name) => {
                if let Some(i) = self.ring.var_index(&name) {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                } else if let Some(i) = field.param_names().iter().position(|p| *p == name) {
                    self.pos += 1;
                    Ok(self.ring.constant(field.param(i)?))
                } else {
                    self.err(format!("unknown variable `{name}`"))
                }
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Tok::Sym('-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Tok::End => self.err("unexpected end of expression"),
            Tok::Sym(c) => self.err(format!("unexpected `{c}`")),
        }
    }
}

/// Parses `text` in `ring`; error positions are offset so that the first
/// character of `text` sits at `line:col`.
pub fn parse_polynomial_at(text: &str, ring: &Ring, line: usize, col: usize) -> Result<Polynomial> {
    let mut lexer = Lexer { chars: text.chars().peekable(), line, col };
    let mut toks = Vec::new();
    loop {
        let t = lexer.next_token()?;
        let end = t.0 == Tok::End;
        toks.push(t);
        if end {
            break;
        }
    }
    let mut p = Parser { toks, pos: 0, ring };
    if *p.peek() == Tok::End {
        return p.err("empty polynomial");
    }
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::TermOrdering;

    fn ring() -> Ring {
        Ring::new(Field::Rational, ["x", "y", "z"], TermOrdering::DegRevLex).unwrap()
    }

    #[test]
    fn parses_the_text_grammar() {
        let r = ring();
        let f = r.parse("x^2*y - 3/2*z + 2*(x + 1)^2").unwrap();
        assert_eq!(f.to_string(), "x^2*y + 2*x^2 + 4*x - 3/2*z + 2");
        assert_eq!(r.parse("-x").unwrap(), r.var(0).neg());
        assert_eq!(r.parse("- -x").unwrap(), r.var(0));
    }

    #[test]
    fn reports_positions() {
        let r = ring();
        assert_eq!(
            r.parse("x + w"),
            Err(Error::Parse { line: 1, col: 5, msg: "unknown variable `w`".into() })
        );
        assert!(matches!(r.parse("x / y"), Err(Error::Parse { col: 5, .. })));
        assert!(matches!(r.parse("x / 0"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse(""), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x^70000"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("(x + 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial_at("\n  x $", &r, 3, 10), Err(Error::Parse { line: 4, col: 5, .. })));
    }

    #[test]
    fn prime_field_coefficients() {
        let r = Ring::new(Field::prime(7).unwrap(), ["x"], TermOrdering::DegRevLex).unwrap();
        assert_eq!(r.parse("x - 1").unwrap().to_string(), "x + 6");
        assert_eq!(r.parse("x/3").unwrap().to_string(), "5*x");
        assert!(r.parse("x/7").is_err());
    }
}
