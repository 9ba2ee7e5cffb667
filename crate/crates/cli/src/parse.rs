//! Reading forms and combinant families from the command line.
//!
//! A form argument is one of
//!
//! - a JSON array of coefficients, each an integer or a `"p/q"` string;
//! - a JSON object `{"order": d, "coeffs": [...]}`;
//! - a polynomial in `x1`, `x2` such as `3*x1^2*x2 - 1/2*x2^3`;
//! - `-`, meaning any of the above read from stdin.
//!
//! Coefficient arrays are raw monomial coefficients, or binomially weighted
//! ones when the binomial convention is selected. Expressions are always
//! ordinary polynomials.

use std::collections::BTreeMap;
use std::io::Read;

use num::traits::{One, Zero};
use serde_json::Value;
use wcomb_core::scalar::{parse_scalar, Scalar};
use wcomb_core::{BinaryForm, CombinantVector};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Raw,
    Binomial,
}

pub fn read_stdin() -> Result<String, CliError> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| CliError::io(format!("reading stdin: {e}")))?;
    Ok(text)
}

/// Contents of a file argument, `-` being stdin.
pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        return read_stdin();
    }
    std::fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {path}: {e}")))
}

pub fn parse_form(text: &str, conv: Convention) -> Result<BinaryForm, CliError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(CliError::parse("empty form"));
    }
    if t == "-" {
        return parse_form(&read_stdin()?, conv);
    }
    if t.starts_with('[') || t.starts_with('{') {
        let value: Value =
            serde_json::from_str(t).map_err(|e| CliError::parse(format!("invalid JSON: {e}")))?;
        return form_from_json(&value, conv);
    }
    parse_expression(t)
}

pub fn form_from_json(value: &Value, conv: Convention) -> Result<BinaryForm, CliError> {
    let (coeffs, order) = match value {
        Value::Array(items) => (items, None),
        Value::Object(map) => {
            let coeffs = match map.get("coeffs") {
                Some(Value::Array(items)) => items,
                _ => return Err(CliError::parse("form object needs a \"coeffs\" array")),
            };
            let order = match map.get("order") {
                None => None,
                Some(v) => Some(
                    v.as_u64()
                        .ok_or_else(|| CliError::parse("\"order\" must be a nonnegative integer"))?,
                ),
            };
            (coeffs, order)
        }
        _ => return Err(CliError::parse("a form is a JSON array or object")),
    };
    if coeffs.is_empty() {
        return Err(CliError::parse("empty coefficient list"));
    }
    if let Some(d) = order {
        if d + 1 != coeffs.len() as u64 {
            return Err(CliError::parse(format!(
                "order {d} needs {} coefficients, got {}",
                d + 1,
                coeffs.len()
            )));
        }
    }
    let values = coeffs.iter().map(scalar_from_json).collect::<Result<Vec<_>, _>>()?;
    let form = match conv {
        Convention::Raw => BinaryForm::new(values),
        Convention::Binomial => BinaryForm::from_binomial(values),
    };
    form.map_err(CliError::from)
}

fn scalar_from_json(value: &Value) -> Result<Scalar, CliError> {
    match value {
        Value::String(s) => Ok(parse_scalar(s)?),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(parse_scalar(&n.to_string())?),
        _ => Err(CliError::parse(format!(
            "coefficient {value} is not an integer or a \"p/q\" string"
        ))),
    }
}

/// Reads a combinant family: `{"r": r, "d": d, "components": {"q": form}}`.
pub fn parse_family(text: &str, conv: Convention) -> Result<CombinantVector, CliError> {
    let value: Value = serde_json::from_str(text.trim())
        .map_err(|e| CliError::parse(format!("invalid JSON: {e}")))?;
    let field = |name: &str| {
        value
            .get(name)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| CliError::parse(format!("family needs a nonnegative integer \"{name}\"")))
    };
    let (r, d) = (field("r")?, field("d")?);
    let entries = value
        .get("components")
        .and_then(Value::as_object)
        .ok_or_else(|| CliError::parse("family needs a \"components\" object"))?;
    let mut components = BTreeMap::new();
    for (key, form) in entries {
        let q: usize = key
            .parse()
            .map_err(|_| CliError::parse(format!("slot key {key:?} is not an integer")))?;
        components.insert(q, form_from_json(form, conv)?);
    }
    Ok(CombinantVector::new(r, d, components)?)
}

// Expressions. A polynomial is a map from exponent pairs to coefficients.

type Poly = BTreeMap<(u32, u32), Scalar>;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(String),
    Var(u8),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c == 'x' {
            match chars.get(i + 1) {
                Some('1') => out.push(Token::Var(1)),
                Some('2') => out.push(Token::Var(2)),
                _ => return Err(CliError::parse(format!("unknown variable at offset {i}"))),
            }
            i += 2;
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(CliError::parse(format!("unexpected character {c:?} at offset {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, CliError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = add(acc, self.term()?, false);
            } else if self.eat('-') {
                acc = add(acc, self.term()?, true);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, CliError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = mul(&acc, &self.unary()?);
            } else if self.eat('/') {
                let rhs = self.unary()?;
                let c = constant_of(&rhs)
                    .ok_or_else(|| CliError::parse("can only divide by a constant"))?;
                if c == Scalar::zero() {
                    return Err(CliError::parse("division by zero"));
                }
                acc = acc.into_iter().map(|(k, v)| (k, v / &c)).collect();
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly, CliError> {
        if self.eat('-') {
            return Ok(self.unary()?.into_iter().map(|(k, v)| (k, -v)).collect());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly, CliError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exp = match self.tokens.get(self.pos) {
            Some(Token::Num(n)) => n
                .parse::<u32>()
                .map_err(|_| CliError::parse(format!("exponent {n} too large")))?,
            _ => return Err(CliError::parse("expected an integer exponent after '^'")),
        };
        self.pos += 1;
        let mut out = constant(Scalar::one());
        for _ in 0..exp {
            out = mul(&out, &base);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Poly, CliError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(constant(parse_scalar(&n)?))
            }
            Some(Token::Var(v)) => {
                self.pos += 1;
                let key = if v == 1 { (1, 0) } else { (0, 1) };
                Ok(Poly::from([(key, Scalar::one())]))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(CliError::parse("missing ')'"));
                }
                Ok(inner)
            }
            Some(tok) => Err(CliError::parse(format!("unexpected {tok:?}"))),
            None => Err(CliError::parse("unexpected end of expression")),
        }
    }
}

fn constant(c: Scalar) -> Poly {
    Poly::from([((0, 0), c)])
}

fn constant_of(p: &Poly) -> Option<Scalar> {
    let mut nonzero = p.iter().filter(|(_, v)| **v != Scalar::zero());
    match nonzero.next() {
        None => Some(Scalar::zero()),
        Some((&(0, 0), v)) if nonzero.next().is_none() => Some(v.clone()),
        _ => None,
    }
}

fn add(mut a: Poly, b: Poly, negate: bool) -> Poly {
    for (k, v) in b {
        let v = if negate { -v } else { v };
        *a.entry(k).or_insert_with(|| Scalar::zero()) += v;
    }
    a
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i1, j1), x) in a {
        for (&(i2, j2), y) in b {
            *out.entry((i1 + i2, j1 + j2))
                .or_insert_with(|| Scalar::zero()) += x * y;
        }
    }
    out
}

/// Parses a homogeneous polynomial in `x1`, `x2`.
pub fn parse_expression(text: &str) -> Result<BinaryForm, CliError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(CliError::parse("empty expression"));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(CliError::parse(format!(
            "trailing input after token {}",
            parser.pos
        )));
    }
    let zero = Scalar::zero();
    let terms: Vec<_> = poly.into_iter().filter(|(_, v)| *v != zero).collect();
    let degrees: Vec<u32> = terms.iter().map(|((i, j), _)| i + j).collect();
    let order = match degrees.first() {
        None => {
            return Err(CliError::parse(
                "the zero expression has no order; give it as a coefficient array",
            ))
        }
        Some(&d) => d,
    };
    if degrees.iter().any(|&d| d != order) {
        return Err(CliError::parse(format!(
            "expression is not homogeneous (degrees {:?})",
            {
                let mut ds = degrees.clone();
                ds.sort_unstable();
                ds.dedup();
                ds
            }
        )));
    }
    let mut coeffs = vec![zero; order as usize + 1];
    for ((_, j), v) in terms {
        coeffs[j as usize] = v;
    }
    Ok(BinaryForm::new(coeffs)?)
}
