//! Text form of polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int | 'q' ['^' exp] | var ['^' exp]
//! exp    := ['-'] int | '(' ['-'] int ')'
//! ```
//!
//! Whitespace is ignored between tokens. Negative exponents are accepted for
//! `q` only. Printing is the inverse: terms in descending lexicographic order
//! of exponents, each coefficient expanded from the highest power of `q`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mpoly::MultiPoly;
use crate::qring::QCoef;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    coeff: BigInt,
    q_exp: i64,
    vars: Vec<(usize, i64)>,
}

/// A parsed polynomial before a variable order has been fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    terms: Vec<Term>,
    /// Variable names in order of first appearance.
    names: Vec<String>,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        Lexer {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in self.chars.iter().take(pos) {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error_at(start, "expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn identifier(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphabetic() || *c == '_')
        {
            return None;
        }
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn exponent(&mut self) -> Result<i64> {
        let start = self.pos;
        let paren = self.eat('(');
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let k = self.integer()?;
        if paren && !self.eat(')') {
            return Err(self.error_at(self.pos, "expected ')'"));
        }
        let k: i64 = k
            .try_into()
            .map_err(|_| self.error_at(start, "exponent out of range"))?;
        Ok(if negative { -k } else { k })
    }
}

/// Parses the text form without fixing a variable order.
pub fn parse(src: &str) -> Result<Parsed> {
    let mut lx = Lexer::new(src);
    let mut names: Vec<String> = Vec::new();
    let mut terms = Vec::new();
    if lx.peek().is_none() {
        return Err(lx.error_at(lx.pos, "empty input"));
    }
    let mut first = true;
    loop {
        let mut sign = BigInt::one();
        if lx.eat('-') {
            sign = -sign;
        } else if !lx.eat('+') && !first {
            break;
        }
        first = false;
        let mut term = Term {
            coeff: sign,
            q_exp: 0,
            vars: Vec::new(),
        };
        loop {
            let pos = {
                lx.skip_ws();
                lx.pos
            };
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => term.coeff *= lx.integer()?,
                Some(_) => {
                    let Some(name) = lx.identifier() else {
                        return Err(lx.error_at(pos, "expected an integer, 'q' or a variable"));
                    };
                    let e = if lx.eat('^') { lx.exponent()? } else { 1 };
                    if name == "q" {
                        term.q_exp += e;
                    } else {
                        if e < 0 {
                            return Err(
                                lx.error_at(pos, format!("negative exponent on variable {name}"))
                            );
                        }
                        let idx = match names.iter().position(|n| *n == name) {
                            Some(i) => i,
                            None => {
                                names.push(name);
                                names.len() - 1
                            }
                        };
                        term.vars.push((idx, e));
                    }
                }
                None => return Err(lx.error_at(pos, "unexpected end of input")),
            }
            if !lx.eat('*') {
                break;
            }
        }
        terms.push(term);
        if lx.peek().is_none() {
            break;
        }
        match lx.peek() {
            Some('+') | Some('-') => {}
            Some(c) => return Err(lx.error_at(lx.pos, format!("unexpected character '{c}'"))),
            None => unreachable!(),
        }
    }
    if lx.peek().is_some() {
        return Err(lx.error_at(lx.pos, "trailing input"));
    }
    Ok(Parsed { terms, names })
}

impl Parsed {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Default variable order: `x1, ..., xN` when every name has that form
    /// (N being the largest index), otherwise order of first appearance.
    pub fn default_order(&self) -> Vec<String> {
        let indices: Option<Vec<usize>> = self.names.iter().map(|n| positional_index(n)).collect();
        match indices {
            Some(ix) if !ix.is_empty() => {
                let n = *ix.iter().max().unwrap();
                (1..=n).map(|i| format!("x{i}")).collect()
            }
            _ => self.names.clone(),
        }
    }

    /// Builds the polynomial over the given variable order.
    pub fn to_poly(&self, order: &[String]) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.names.len());
        for n in &self.names {
            match order.iter().position(|o| o == n) {
                Some(i) => map.push(i),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "variable {n} is not in the variable list"
                    )))
                }
            }
        }
        let nvars = order.len();
        let mut p = MultiPoly::zero(nvars);
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let mut e = vec![0i64; nvars];
            for &(idx, k) in &t.vars {
                e[map[idx]] += k;
            }
            p.add_term(e, &QCoef::from_terms([(t.q_exp, t.coeff.clone())]));
        }
        Ok(p)
    }
}

fn positional_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

/// Parses with the default variable order; returns the polynomial and the order.
pub fn parse_poly(src: &str) -> Result<(MultiPoly, Vec<String>)> {
    let parsed = parse(src)?;
    let order = parsed.default_order();
    Ok((parsed.to_poly(&order)?, order))
}

/// Parses over an explicit variable order.
pub fn parse_poly_in(src: &str, order: &[String]) -> Result<MultiPoly> {
    parse(src)?.to_poly(order)
}

/// Parses a univariate polynomial in `y` (the form used for factors).
pub fn parse_univariate(src: &str) -> Result<MultiPoly> {
    parse_poly_in(src, &["y".to_string()])
}

pub fn format_poly(p: &MultiPoly, names: &[String]) -> String {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    p.to_string_with(&refs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_coefficients_in_q() {
        let (p, order) = parse_poly("3*q^2 - q^-1 + 7").unwrap();
        assert!(order.is_empty());
        assert_eq!(p.to_string(), "3*q^2+7-q^-1");
        let (p2, _) = parse_poly("3*q^2 - q^(-1) + 7").unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn positional_and_named_orders() {
        let (p, order) = parse_poly("x3 + 2*x1").unwrap();
        assert_eq!(order, vec!["x1", "x2", "x3"]);
        assert_eq!(p.to_string(), "2*x1+x3");
        let (_, order) = parse_poly("b*a + a").unwrap();
        assert_eq!(order, vec!["b", "a"]);
    }

    #[test]
    fn round_trip() {
        let src = "q*x1*x3+x2^2*x3+x2^2*x4";
        let (p, order) = parse_poly(src).unwrap();
        assert_eq!(format_poly(&p, &order), src);
        let y = parse_univariate("7*q*y^2 - 2*y + 2*q").unwrap();
        assert_eq!(y.to_string_with(&["y"]), "7*q*y^2-2*y+2*q");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x1 + * x2") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 6)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("x1\n + x2^-1") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x1 x2").is_err());
    }

    #[test]
    fn cancellation_and_zero() {
        let (p, _) = parse_poly("x1 - x1").unwrap();
        assert!(p.is_zero());
        let (p, _) = parse_poly("0").unwrap();
        assert!(p.is_zero());
    }
}
