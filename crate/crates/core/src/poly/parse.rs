//! Text format for polynomial systems.
//!
//! ```text
//! # comment
//! ring x0 x1 over qq
//! x0^2 - 1
//! 2*x0*x1 + 1/3
//! ```
//!
//! A term is a `*`-separated product of coefficients (integers, `a/b`
//! rationals, decimals such as `1.5e-3`) and powers `var^k`; terms are joined
//! by `+` and `-`.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Monomial, Polynomial};
use crate::coeff::{Field, FieldConfig, FieldError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0}")]
    Coefficient(FieldError),
    #[error("missing `ring <vars> over <field>` header")]
    MissingHeader,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}

/// A parsed system file before its coefficients are mapped into a field.
/// Keeping the raw lines lets the caller override the declared field.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemSource {
    pub vars: Vec<String>,
    pub field: FieldConfig,
    lines: Vec<(usize, String)>,
}

impl SystemSource {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut header = None;
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if header.is_none() {
                header = Some(parse_header(content, lineno)?);
                continue;
            }
            lines.push((lineno, raw.split('#').next().unwrap_or("").to_string()));
        }
        let (vars, field) = header.ok_or_else(|| ParseError::new(1, 1, ParseErrorKind::MissingHeader))?;
        Ok(SystemSource { vars, field, lines })
    }

    pub fn polynomials<K: Field>(&self, field: &K) -> Result<Vec<Polynomial<K>>, ParseError> {
        self.lines
            .iter()
            .map(|(lineno, text)| parse_polynomial_at(text, &self.vars, field, *lineno))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

fn parse_header(line: &str, lineno: usize) -> Result<(Vec<String>, FieldConfig), ParseError> {
    let words: Vec<&str> = line.split_whitespace().collect();
    if words.first() != Some(&"ring") {
        return Err(ParseError::new(lineno, 1, ParseErrorKind::MissingHeader));
    }
    let over = words
        .iter()
        .position(|w| *w == "over")
        .ok_or_else(|| ParseError::new(lineno, 1, ParseErrorKind::Syntax("expected `over <field>`".into())))?;
    let vars: Vec<String> = words[1..over].iter().map(|s| s.to_string()).collect();
    if vars.is_empty() {
        return Err(ParseError::new(lineno, 6, ParseErrorKind::Syntax("no variables declared".into())));
    }
    for v in &vars {
        if !is_identifier(v) {
            return Err(ParseError::new(lineno, 1, ParseErrorKind::Syntax(format!("bad variable name `{v}`"))));
        }
    }
    let spec = words.get(over + 1).ok_or_else(|| {
        ParseError::new(lineno, line.len(), ParseErrorKind::Syntax("missing field after `over`".into()))
    })?;
    let field = spec
        .parse::<FieldConfig>()
        .map_err(|e| ParseError::new(lineno, line.find(spec).unwrap_or(0) + 1, ParseErrorKind::Coefficient(e)))?;
    Ok((vars, field))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses one polynomial over `field` with the given variable names.
pub fn parse_polynomial<K: Field>(text: &str, vars: &[String], field: &K) -> Result<Polynomial<K>, ParseError> {
    parse_polynomial_at(text, vars, field, 1)
}

/// Renders a system in the input format.
pub fn format_system<K: Field>(vars: &[String], polys: &[Polynomial<K>]) -> String {
    let field = polys.first().map(|p| p.field().config().to_string()).unwrap_or_else(|| "qq".into());
    let mut out = format!("ring {} over {}\n", vars.join(" "), field);
    for p in polys {
        out.push_str(&p.format_with(vars));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str, lineno: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < bytes.len() {
        let c = bytes[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            _ => None,
        };
        if let Some(t) = single {
            out.push((col, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == '.') {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == 'e' || bytes[i] == 'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == '+' || bytes[j] == '-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            out.push((col, Tok::Num(bytes[start..i].iter().collect())));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Ident(bytes[start..i].iter().collect())));
            continue;
        }
        return Err(ParseError::new(lineno, col, ParseErrorKind::Syntax(format!("unexpected character `{c}`"))));
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [String],
    field: &'a K,
    line: usize,
    end_col: usize,
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(c, _)| *c).unwrap_or(self.end_col)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError::new(self.line, self.col(), kind)
    }

    fn expect_integer(&mut self) -> Result<BigInt, ParseError> {
        match self.toks.get(self.pos) {
            Some((_, Tok::Num(s))) if s.chars().all(|c| c.is_ascii_digit()) => {
                let v = s.parse().unwrap();
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err(ParseErrorKind::Syntax("expected an integer".into()))),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial<K>, ParseError> {
        let n = self.vars.len();
        let mut p = Polynomial::zero(self.field, n);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) if !first => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                None if first => return Err(self.err(ParseErrorKind::Syntax("empty polynomial".into()))),
                _ if first => false,
                None => break,
                _ => return Err(self.err(ParseErrorKind::Syntax("expected `+` or `-`".into()))),
            };
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = self.field.neg(&c);
            }
            p.add_term(m, &c);
            if self.peek().is_none() {
                break;
            }
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(Monomial, K::Elem), ParseError> {
        let n = self.vars.len();
        let mut exps = vec![0u16; n];
        let mut coeff = self.field.one();
        loop {
            let col = self.col();
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Num(s))) => {
                    self.pos += 1;
                    let value = if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let num: BigInt = s
                            .parse()
                            .map_err(|_| ParseError::new(self.line, col, ParseErrorKind::Syntax("`a/b` needs integers".into())))?;
                        let den = self.expect_integer()?;
                        self.field
                            .from_ratio(&num, &den)
                            .map_err(|e| ParseError::new(self.line, col, ParseErrorKind::Coefficient(e)))?
                    } else if s.chars().all(|c| c.is_ascii_digit()) {
                        let v: BigInt = s.parse().unwrap();
                        self.field
                            .from_ratio(&v, &BigInt::from(1))
                            .map_err(|e| ParseError::new(self.line, col, ParseErrorKind::Coefficient(e)))?
                    } else {
                        self.field
                            .from_decimal(&s)
                            .map_err(|e| ParseError::new(self.line, col, ParseErrorKind::Coefficient(e)))?
                    };
                    coeff = self.field.mul(&coeff, &value);
                }
                Some((_, Tok::Ident(name))) => {
                    self.pos += 1;
                    let idx = self
                        .vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| ParseError::new(self.line, col, ParseErrorKind::UnknownVariable(name.clone())))?;
                    let mut e = 1u16;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        let ecol = self.col();
                        let v = self.expect_integer()?;
                        e = u16::try_from(v).map_err(|_| {
                            ParseError::new(self.line, ecol, ParseErrorKind::Syntax("exponent too large".into()))
                        })?;
                    }
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| ParseError::new(self.line, col, ParseErrorKind::Syntax("exponent too large".into())))?;
                }
                _ => return Err(self.err(ParseErrorKind::Syntax("expected a coefficient or a variable".into()))),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(exps), coeff))
    }
}

fn parse_polynomial_at<K: Field>(text: &str, vars: &[String], field: &K, line: usize) -> Result<Polynomial<K>, ParseError> {
    let toks = tokenize(text, line)?;
    let mut parser = Parser { toks, pos: 0, vars, field, line, end_col: text.chars().count() + 1 };
    parser.polynomial()
}
