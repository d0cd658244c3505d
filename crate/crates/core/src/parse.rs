//! Input formats: polynomial expressions and sparse JSON.
//!
//! Expression grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! A system file holds two expressions on separate lines, optionally written
//! as `f = ...` and `g = ...`; `#` starts a comment. A file whose first
//! non-blank character is `{` is read as `{"f": [[i, j, c], ...], "g": [...]}`
//! with `c` the coefficient of `x^i y^j` as a string or an integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::arith::Dyadic;
use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;

/// Guards against accidental huge expansions such as `(x+y)^100000`.
const MAX_EXPONENT: u32 = 4096;

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]` in the source line, 1-based.
    col0: usize,
}

impl Parser {
    fn new(text: &str, line: usize, col0: usize) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line,
            col0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.col0 + self.pos, message)
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

    fn parse_all(&mut self) -> Result<BivariatePolynomial> {
        if self.peek().is_none() {
            return Err(self.error("expected an expression"));
        }
        let p = self.expr()?;
        match self.peek() {
            None => Ok(p),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn expr(&mut self) -> Result<BivariatePolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BivariatePolynomial> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BivariatePolynomial> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BivariatePolynomial> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.error("exponent must be a nonnegative integer literal")),
        }
        let start = self.pos;
        let n = self.integer()?;
        let n = u32::try_from(&n)
            .ok()
            .filter(|n| *n <= MAX_EXPONENT)
            .ok_or_else(|| err(self.line, self.col0 + start, format!("exponent exceeds {MAX_EXPONENT}")))?;
        Ok(base.pow(n as usize))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        if matches!(self.chars.get(self.pos), Some('.') | Some('/') | Some('e') | Some('E')) {
            return Err(self.error("coefficients must be integers"));
        }
        digits
            .parse()
            .map_err(|_| err(self.line, self.col0 + start, "expected an integer"))
    }

    fn atom(&mut self) -> Result<BivariatePolynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(BivariatePolynomial::constant(self.integer()?)),
            Some('x') => {
                self.pos += 1;
                self.no_identifier_tail()?;
                Ok(BivariatePolynomial::x())
            }
            Some('y') => {
                self.pos += 1;
                self.no_identifier_tail()?;
                Ok(BivariatePolynomial::y())
            }
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(p)
            }
            Some('.') => Err(self.error("coefficients must be integers")),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn no_identifier_tail(&self) -> Result<()> {
        match self.chars.get(self.pos) {
            Some(c) if c.is_alphanumeric() || *c == '_' => Err(self.error("unknown variable; only x and y are allowed")),
            _ => Ok(()),
        }
    }
}

/// Parses a single expression.
pub fn parse_polynomial(text: &str) -> Result<BivariatePolynomial> {
    Parser::new(text, 1, 1).parse_all()
}

/// Parses a system in either input format.
pub fn parse_system(text: &str) -> Result<(BivariatePolynomial, BivariatePolynomial)> {
    if text.trim_start().starts_with('{') {
        return parse_json_system(text);
    }
    let mut exprs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let (offset, expr) = strip_label(body, exprs.len());
        let p = Parser::new(expr, line, offset + 1).parse_all()?;
        exprs.push(p);
        if exprs.len() > 2 {
            return Err(err(line, 1, "expected exactly two polynomials"));
        }
    }
    if exprs.len() != 2 {
        let line = text.lines().count().max(1);
        return Err(err(line, 1, format!("expected two polynomials, found {}", exprs.len())));
    }
    let g = exprs.pop().unwrap();
    let f = exprs.pop().unwrap();
    Ok((f, g))
}

/// Drops an optional `f =` / `g =` label; returns the char offset of the rest.
fn strip_label(body: &str, index: usize) -> (usize, &str) {
    let label = if index == 0 { 'f' } else { 'g' };
    let after = body
        .trim_start()
        .strip_prefix(label)
        .map(str::trim_start)
        .and_then(|rest| rest.strip_prefix('='));
    match after {
        Some(after) => (body.chars().count() - after.chars().count(), after),
        None => (0, body),
    }
}

fn parse_json_system(text: &str) -> Result<(BivariatePolynomial, BivariatePolynomial)> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| err(1, 1, "expected a JSON object"))?;
    let read = |key: &str| -> Result<BivariatePolynomial> {
        let terms = obj
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| err(1, 1, format!("missing term list \"{key}\"")))?;
        let mut out = Vec::with_capacity(terms.len());
        for (k, t) in terms.iter().enumerate() {
            let bad = || err(1, 1, format!("term {k} of \"{key}\" must be [i, j, c]"));
            let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let i = t[0].as_u64().ok_or_else(bad)? as usize;
            let j = t[1].as_u64().ok_or_else(bad)? as usize;
            let c: BigInt = match &t[2] {
                Value::String(s) => s.trim().parse().map_err(|_| {
                    err(1, 1, format!("coefficient of term {k} of \"{key}\" is not an integer"))
                })?,
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string().parse().map_err(|_| bad())?,
                _ => return Err(err(1, 1, format!("coefficient of term {k} of \"{key}\" is not an integer"))),
            };
            out.push((i, j, c));
        }
        Ok(BivariatePolynomial::from_terms(out))
    };
    Ok((read("f")?, read("g")?))
}

/// An exact rational from `-7`, `3/4` or `-1.25`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || err(1, 1, format!("not a rational number: '{text}'"));
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let whole: BigInt = match int.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            digits => digits.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let num = whole * &scale + frac.parse::<BigInt>().map_err(|_| bad())?;
        let q = BigRational::new(num, scale);
        return Ok(if negative { -q } else { q });
    }
    let q: BigRational = t.parse().map_err(|_| bad())?;
    Ok(q)
}

/// A positive box width: `2^-k`, `2^k`, or a positive rational, rounded
/// down to a dyadic number.
pub fn parse_width(text: &str) -> Result<Dyadic> {
    let t = text.trim();
    if let Some(k) = t.strip_prefix("2^") {
        let k: i64 = k
            .trim_start_matches(['(', ' '])
            .trim_end_matches([')', ' '])
            .parse()
            .map_err(|_| err(1, 1, format!("bad width exponent in '{text}'")))?;
        return Ok(Dyadic::pow2(k));
    }
    let q = parse_rational(t)?;
    if !q.is_positive() {
        return Err(err(1, 1, "width must be positive"));
    }
    let mut prec = 0;
    while Dyadic::floor_rational(&q, prec).is_zero() {
        prec += 1;
    }
    Ok(Dyadic::floor_rational(&q, prec + 64))
}

/// Renders a polynomial in the sparse JSON term format.
pub fn to_json_terms(p: &BivariatePolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(i, j, c)| serde_json::json!([i, j, c.to_string()]))
            .collect(),
    )
}
