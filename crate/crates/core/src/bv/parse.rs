//! Expression syntax for BV elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | 'x' int | '[' expr ',' expr ']'
//!         | 'D' '(' expr ')' | 'D' factor | '(' expr ')'
//! ```
//!
//! `D` is `Δ` (the symbol itself is also accepted). Every sub-expression is
//! brought to normal form as it is read.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::element::{add_into, bracket, delta, product, scale, single, BVElement, Monomial, Terms};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.char_indices().collect(), idx: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |&(p, _)| p)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos(), msg: msg.into() }
    }

    fn peek(&mut self) -> Option<char> {
        while let Some(&(_, c)) = self.chars.get(self.idx) {
            if c.is_whitespace() {
                self.idx += 1;
            } else {
                return Some(c);
            }
        }
        None
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.idx;
        while matches!(self.chars.get(self.idx), Some((_, c)) if c.is_ascii_digit()) {
            self.idx += 1;
        }
        if start == self.idx {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.idx].iter().map(|&(_, c)| c).collect();
        digits.parse().map_err(|_| self.err("bad number"))
    }

    fn expr(&mut self) -> Result<Terms> {
        let mut out = Terms::new();
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            let s = BigRational::from_integer(BigInt::from(if negative { -1 } else { 1 }));
            add_into(&mut out, scale(&t, &s));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<Terms> {
        let mut acc = self.factor()?;
        while self.eat('*') || self.eat('·') {
            let f = self.factor()?;
            acc = product(&acc, &f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Terms> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat('/') { self.integer()? } else { BigInt::from(1) };
                if den == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                let c = BigRational::new(num, den);
                Ok(scale(&single(Monomial::unit()), &c))
            }
            Some('x') => {
                self.idx += 1;
                let g = self.integer()?;
                let g: usize = g.try_into().map_err(|_| self.err("generator index too large"))?;
                if g == 0 {
                    return Err(self.err("generators are numbered from 1"));
                }
                Ok(single(Monomial::generator(g)))
            }
            Some('[') => {
                self.idx += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                bracket(&a, &b)
            }
            Some('D') | Some('Δ') => {
                self.idx += 1;
                let inner = if self.eat('(') {
                    let e = self.expr()?;
                    self.expect(')')?;
                    e
                } else {
                    self.factor()?
                };
                Ok(delta(&inner))
            }
            Some('(') => {
                self.idx += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) => Err(self.err(format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_terms(src: &str) -> Result<Terms> {
    let mut p = Parser::new(src);
    let t = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(t)
}

impl BVElement {
    /// Parses and normalizes an expression of the given arity.
    pub fn parse(arity: usize, src: &str) -> Result<BVElement> {
        BVElement::from_terms(arity, parse_terms(src)?)
    }
}

impl std::str::FromStr for BVElement {
    type Err = Error;

    /// Parses with the arity inferred from the largest generator.
    fn from_str(src: &str) -> Result<BVElement> {
        let terms = parse_terms(src)?;
        let arity = terms.keys().flat_map(|m| m.generators()).max().unwrap_or(0);
        BVElement::from_terms(arity, terms)
    }
}
