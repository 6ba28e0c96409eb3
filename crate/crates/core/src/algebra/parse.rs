use num_bigint::BigInt;

use super::mpoly::MPoly;
use super::rational::{big, Rational};
use crate::error::{Error, Result};

/// Parse a polynomial written with `+ - * ^`, parentheses, integers,
/// `p/q` literals and identifiers. `alias` maps identifiers before use.
pub fn parse_poly_with(src: &str, vars: &[String], alias: &dyn Fn(&str) -> String) -> Result<MPoly> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        vars: vars.to_vec(),
        alias,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("unexpected token {:?}", p.toks[p.pos])));
    }
    let vars = p.vars.clone();
    Ok(out.with_vars(&vars))
}

pub fn parse_poly(src: &str) -> Result<MPoly> {
    parse_poly_with(src, &[], &|s| s.to_string())
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = chars[s..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| Error::Parse(t.clone()))?));
        } else if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[s..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: Vec<String>,
    alias: &'a dyn Fn(&str) -> String,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
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

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse("division by a non-constant".into()));
                }
                let c: Rational = d.constant_term();
                acc = acc.scale(&(Rational::from_integer(1.into()) / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MPoly::constant(self.vars.clone(), big(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let name = (self.alias)(&name);
                let p = MPoly::var(self.vars.clone(), &name);
                self.vars = p.vars().to_vec();
                Ok(p)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            t => Err(Error::Parse(format!("unexpected {t:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_render() {
        let p = parse_poly("3/2*x^2 - (y+1)*(y-1)").unwrap();
        assert_eq!(p.render(), "3/2*x^2 - y^2 + 1");
        let q = parse_poly(&p.render()).unwrap();
        assert_eq!(p, q.with_vars(p.vars()));
    }

    #[test]
    fn errors() {
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("x ^ y").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("x $").is_err());
    }
}
