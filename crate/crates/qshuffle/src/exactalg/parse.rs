//! Expression parser.
//!
//! Grammar:
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | variable | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::rf::Rf;
use super::var::Var;
use super::{AlgError, Q};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, AlgError> {
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Int(s[st..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(AlgError::Parse {
                pos: i,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

/// Value type an expression evaluates into.
pub trait ParseTarget: Sized {
    fn constant(c: Q) -> Self;
    /// Value of an identifier, or `None` if it is unknown.
    fn ident(name: &str) -> Option<Self>;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn neg(self) -> Self;
    fn div(self, o: Self) -> Result<Self, String>;
    fn pow(self, e: i32) -> Result<Self, String>;
}

impl ParseTarget for Rf {
    fn constant(c: Q) -> Rf {
        Rf::constant(c)
    }
    fn ident(name: &str) -> Option<Rf> {
        Var::parse(name).map(Rf::var)
    }
    fn add(self, o: Rf) -> Rf {
        &self + &o
    }
    fn sub(self, o: Rf) -> Rf {
        &self - &o
    }
    fn mul(self, o: Rf) -> Rf {
        &self * &o
    }
    fn neg(self) -> Rf {
        -self
    }
    fn div(self, o: Rf) -> Result<Rf, String> {
        self.checked_div(&o).map_err(|_| "division by zero".into())
    }
    fn pow(self, e: i32) -> Result<Rf, String> {
        Rf::pow(&self, e).map_err(|_| "zero raised to a negative power".into())
    }
}

struct Parser<T> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    _t: std::marker::PhantomData<T>,
}

impl<T: ParseTarget> Parser<T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<R>(&self, msg: impl Into<String>) -> Result<R, AlgError> {
        Err(AlgError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<T, AlgError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<T, AlgError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(self.unary()?);
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.unary()?;
                acc = acc.div(d).map_err(|msg| AlgError::Parse { pos: at, msg })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<T, AlgError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<T, AlgError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: i32 = match i32::try_from(n) {
                    Ok(e) if e <= 255 => e,
                    _ => return self.err("exponent too large"),
                };
                let at = self.offset();
                base.pow(if neg { -e } else { e })
                    .map_err(|msg| AlgError::Parse { pos: at, msg })
            }
            _ => self.err("expected integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<T, AlgError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(T::constant(Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => match T::ident(&name) {
                Some(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression into a reduced rational function.
pub fn parse(s: &str) -> Result<Rf, AlgError> {
    parse_into(s)
}

/// Parses an expression into any [`ParseTarget`].
pub fn parse_into<T: ParseTarget>(s: &str) -> Result<T, AlgError> {
    let toks = lex(s)?;
    let mut p = Parser::<T> {
        toks,
        pos: 0,
        end: s.len(),
        _t: std::marker::PhantomData,
    };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        assert_eq!(parse("-w1^2").unwrap(), -Rf::var(Var::W(1)).pow(2).unwrap());
        assert_eq!(
            parse("1/2*Y1").unwrap(),
            Rf::var(Var::Y(1)).scale(&Q::new(1.into(), 2.into()))
        );
        assert_eq!(parse("2^-1").unwrap(), Rf::constant(Q::new(1.into(), 2.into())));
    }

    #[test]
    fn errors_carry_positions() {
        match parse("w1 + q") {
            Err(AlgError::Parse { pos, .. }) => assert_eq!(pos, 5),
            r => panic!("unexpected {r:?}"),
        }
        assert!(matches!(parse("(w1"), Err(AlgError::Parse { pos: 3, .. })));
        assert!(parse("1/(w1-w1)").is_err());
        assert!(parse("w1 w2").is_err());
    }
}
