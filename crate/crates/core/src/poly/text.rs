//! Plain-text polynomial grammar.
//!
//! A polynomial is a sum of terms joined by `+`/`-`; a term is a product of
//! factors joined by `*`:
//!
//! ```text
//! -3/2*x1^2*x2*T[(2,0)|(1,1)]^2*U[(0,1)|(0,0)]*t^3
//! ```
//!
//! Output lists terms from the largest x-exponent down (degree-lex), then
//! from the largest parameter monomial down.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::param::ParamPolynomial;
use super::qpoly::QPoly;
use super::tpoly::{TMono, TPoly, Var, Q};
use super::PolyError;
use crate::exponent::Exponent;

fn write_x(out: &mut Vec<String>, e: &Exponent) {
    for (i, &k) in e.coords().iter().enumerate() {
        match k {
            0 => {}
            1 => out.push(format!("x{}", i + 1)),
            _ => out.push(format!("x{}^{}", i + 1, k)),
        }
    }
}

fn write_t(out: &mut Vec<String>, m: &TMono) {
    for (v, k) in m.factors() {
        let base = match v {
            Var::T(tv) => format!("T[{}|{}]", tv.row, tv.col),
            Var::U(tv) => format!("U[{}|{}]", tv.row, tv.col),
            Var::Time => "t".to_string(),
        };
        if *k == 1 {
            out.push(base);
        } else {
            out.push(format!("{base}^{k}"));
        }
    }
}

fn join_terms(terms: impl Iterator<Item = (Q, Vec<String>)>) -> String {
    let mut s = String::new();
    for (c, factors) in terms {
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else if c.is_negative() {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        let a = c.abs();
        if factors.is_empty() {
            s.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            s.push_str(&factors.join("*"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn format_tpoly(p: &TPoly) -> String {
    join_terms(p.terms().rev().map(|(m, c)| {
        let mut f = Vec::new();
        write_t(&mut f, m);
        (c.clone(), f)
    }))
}

pub fn format_qpoly(p: &QPoly) -> String {
    join_terms(p.terms().rev().map(|(e, c)| {
        let mut f = Vec::new();
        write_x(&mut f, e);
        (c.clone(), f)
    }))
}

pub fn format_param(p: &ParamPolynomial) -> String {
    join_terms(p.terms().rev().flat_map(|(e, coeff)| {
        coeff.terms().rev().map(move |(m, c)| {
            let mut f = Vec::new();
            write_x(&mut f, e);
            write_t(&mut f, m);
            (c.clone(), f)
        })
    }))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), PolyError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<&'a str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32, PolyError> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.err("number too large"))
    }

    fn power(&mut self) -> Result<u32, PolyError> {
        if self.eat(b'^') {
            self.small()
        } else {
            Ok(1)
        }
    }

    fn exponent(&mut self) -> Result<Exponent, PolyError> {
        self.expect(b'(')?;
        let mut v = vec![self.small()?];
        while self.eat(b',') {
            v.push(self.small()?);
        }
        self.expect(b')')?;
        Ok(Exponent::new(v))
    }

    fn tvar(&mut self) -> Result<(Exponent, Exponent), PolyError> {
        self.expect(b'[')?;
        let row = self.exponent()?;
        self.expect(b'|')?;
        let col = self.exponent()?;
        self.expect(b']')?;
        Ok((row, col))
    }

    /// One term, already past its sign: (coefficient, x-exponent, T-monomial).
    fn term(&mut self, n: usize) -> Result<(Q, Vec<u32>, Vec<(Var, u32)>), PolyError> {
        let mut c = Q::one();
        let mut x = vec![0u32; n];
        let mut t = Vec::new();
        loop {
            match self.peek() {
                Some(b'0'..=b'9') => {
                    let num: BigInt = self.digits()?.parse().expect("digits");
                    let den: BigInt = if self.eat(b'/') {
                        self.digits()?.parse().expect("digits")
                    } else {
                        BigInt::one()
                    };
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    c *= Q::new(num, den);
                }
                Some(b'x') => {
                    self.pos += 1;
                    let i = self.small()? as usize;
                    if i == 0 || i > n {
                        return Err(self.err(format!("variable x{i} outside x1..x{n}")));
                    }
                    x[i - 1] += self.power()?;
                }
                Some(b'T') | Some(b'U') => {
                    let is_t = self.src[self.pos] == b'T';
                    self.pos += 1;
                    let (row, col) = self.tvar()?;
                    let v = if is_t { Var::t(row, col) } else { Var::u(row, col) };
                    t.push((v, self.power()?));
                }
                Some(b't') => {
                    self.pos += 1;
                    t.push((Var::Time, self.power()?));
                }
                _ => return Err(self.err("expected a factor")),
            }
            if !self.eat(b'*') {
                return Ok((c, x, t));
            }
        }
    }

    fn poly(&mut self, n: usize) -> Result<Vec<(Q, Vec<u32>, Vec<(Var, u32)>)>, PolyError> {
        let mut out = Vec::new();
        let mut negative = self.eat(b'-');
        if !negative {
            self.eat(b'+');
        }
        loop {
            let (c, x, t) = self.term(n)?;
            out.push((if negative { -c } else { c }, x, t));
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }
}

/// Parses a polynomial in `x1..xn` with parameter coefficients.
pub fn parse_param(s: &str, n: usize) -> Result<ParamPolynomial, PolyError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut out = ParamPolynomial::zero(n);
    for (c, x, t) in p.poly(n)? {
        out.add_term(Exponent::new(x), TPoly::monomial(TMono::from_factors(t), c));
    }
    Ok(out)
}

/// Parses a polynomial in the parameter variables only.
pub fn parse_tpoly(s: &str) -> Result<TPoly, PolyError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut out = TPoly::zero();
    for (c, _, t) in p.poly(0)? {
        out.add_term(TMono::from_factors(t), c);
    }
    Ok(out)
}
