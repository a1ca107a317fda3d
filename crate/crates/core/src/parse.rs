//! Parser for the textual ODE system format.
//!
//! ```text
//! # Rabinovich-Fabrikant
//! x' = y*(z - 1 + x^2) + a*x
//! y' = x*(3*z + 1 - x^2) + a*y
//! z' = -2*z*(b + x*y)
//! ```
//!
//! One equation `name' = expression` per line. Expressions are built from
//! integer literals, rational literals `p/q`, identifiers, `+`, `-`, `*`, `^`
//! and parentheses; `*` is mandatory between factors and `^` takes a positive
//! integer literal. Identifiers that never appear on a left-hand side are
//! parameters. `#` starts a comment.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num::{BigInt, ToPrimitive, Zero};

use crate::monomial::Monomial;
use crate::poly::{Coefficient, OdeSystem, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    DuplicateEquation,
    BadExponent,
    StrayToken,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind,
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Prime,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{}`", s),
            Tok::Int(n) => write!(f, "`{}`", n),
            Tok::Prime => f.write_str("`'`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

fn tokenize(text: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' || chars[i] == 'E') {
                return Err(ParseError::new(
                    ParseErrorKind::Syntax,
                    line,
                    i + 1,
                    "floating point literals are not accepted; write rationals as p/q",
                ));
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digit run")),
                column,
            });
            continue;
        }
        let tok = match c {
            '\'' => Tok::Prime,
            '=' => Tok::Eq,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                return Err(ParseError::new(
                    ParseErrorKind::StrayToken,
                    line,
                    column,
                    format!("unexpected character `{}`", c),
                ))
            }
        };
        out.push(Token { tok, column });
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Number(Rational),
    Symbol(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn symbols<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Number(_) => {}
            Expr::Symbol(s) => out.push(s),
            Expr::Neg(a) | Expr::Pow(a, _) => a.symbols(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.symbols(out);
                b.symbols(out);
            }
        }
    }
}

struct LineParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    line_len: usize,
}

impl<'a> LineParser<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|t| t.column)
            .unwrap_or(self.line_len + 1)
    }

    fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError::new(kind, self.line, self.column(), message)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(ParseErrorKind::Syntax, format!("expected {}, found {}", expected, t)),
            None => self.error(ParseErrorKind::Syntax, format!("expected {}, found end of line", expected)),
        }
    }

    fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn equation(&mut self) -> Result<(String, usize, Expr), ParseError> {
        let column = self.column();
        let name = match self.bump() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                return Err(self.unexpected("a variable name"));
            }
        };
        self.expect(Tok::Prime, "`'` after the variable name")?;
        self.expect(Tok::Eq, "`=`")?;
        let rhs = self.expr()?;
        if let Some(t) = self.peek() {
            return Err(self.error(ParseErrorKind::StrayToken, format!("unexpected {}", t)));
        }
        Ok((name, column, rhs))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    return Err(self.error(
                        ParseErrorKind::Syntax,
                        "division is only allowed between integer literals",
                    ))
                }
                Some(Tok::Ident(_) | Tok::Int(_) | Tok::LParen) => {
                    return Err(self.error(ParseErrorKind::Syntax, "expected `*` between factors"))
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Int(n)) => {
                let e = n.to_u32().filter(|&e| e > 0 && e <= i32::MAX as u32);
                match e {
                    Some(e) => {
                        self.pos += 1;
                        Ok(Expr::Pow(Box::new(base), e))
                    }
                    None => Err(self.error(
                        ParseErrorKind::BadExponent,
                        format!("exponent must be a positive integer literal, found `{}`", n),
                    )),
                }
            }
            _ => Err(self.error(
                ParseErrorKind::BadExponent,
                "exponent must be a positive integer literal",
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Tok::Int(d)) => d.clone(),
                        _ => {
                            return Err(self.error(
                                ParseErrorKind::Syntax,
                                "division is only allowed between integer literals",
                            ))
                        }
                    };
                    if d.is_zero() {
                        return Err(self.error(ParseErrorKind::Syntax, "division by zero"));
                    }
                    self.pos += 1;
                    Ok(Expr::Number(Rational::new(n.clone(), d)))
                } else {
                    Ok(Expr::Number(Rational::from_integer(n.clone())))
                }
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Symbol(s.clone()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.unexpected("a number, a name or `(`")),
        }
    }
}

struct Scope {
    nvars: usize,
    nparams: usize,
    vars: HashMap<String, usize>,
    params: HashMap<String, usize>,
}

impl Scope {
    fn eval(&self, e: &Expr) -> Polynomial {
        match e {
            Expr::Number(r) => {
                Polynomial::constant(self.nvars, Coefficient::constant(self.nparams, r.clone()))
            }
            Expr::Symbol(s) => {
                if let Some(&i) = self.vars.get(s) {
                    Polynomial::variable(self.nvars, self.nparams, i)
                } else {
                    let i = self.params[s];
                    let c = Coefficient::term(
                        Monomial::var(self.nparams, i),
                        Rational::from_integer(1.into()),
                    );
                    Polynomial::constant(self.nvars, c)
                }
            }
            Expr::Neg(a) => self.eval(a).neg(),
            Expr::Add(a, b) => self.eval(a).add(&self.eval(b)),
            Expr::Sub(a, b) => self.eval(a).sub(&self.eval(b)),
            Expr::Mul(a, b) => self.eval(a).mul(&self.eval(b)),
            Expr::Pow(a, n) => self.eval(a).pow(*n),
        }
    }
}

/// Parses a system in the textual format into its expanded canonical form.
///
/// Variables keep the order of their equations; parameters are sorted by name.
pub fn parse_system(text: &str) -> Result<OdeSystem, ParseError> {
    let mut equations: Vec<(String, Expr)> = Vec::new();
    let mut lhs_seen: HashMap<String, usize> = HashMap::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(content, line)?;
        if tokens.is_empty() {
            continue;
        }
        let mut p = LineParser {
            tokens: &tokens,
            pos: 0,
            line,
            line_len: content.chars().count(),
        };
        let (name, column, rhs) = p.equation()?;
        if let Some(prev) = lhs_seen.insert(name.clone(), line) {
            return Err(ParseError::new(
                ParseErrorKind::DuplicateEquation,
                line,
                column,
                format!("`{}` already has an equation on line {}", name, prev),
            ));
        }
        equations.push((name, rhs));
    }
    if equations.is_empty() {
        return Err(ParseError::new(
            ParseErrorKind::Empty,
            last_line.max(1),
            1,
            "no equations found",
        ));
    }

    let variables: Vec<String> = equations.iter().map(|(n, _)| n.clone()).collect();
    let vars: HashMap<String, usize> = variables
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    let mut symbols = Vec::new();
    for (_, e) in &equations {
        e.symbols(&mut symbols);
    }
    let parameters: Vec<String> = symbols
        .into_iter()
        .filter(|s| !vars.contains_key(*s))
        .map(str::to_string)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let scope = Scope {
        nvars: variables.len(),
        nparams: parameters.len(),
        vars,
        params: parameters
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect(),
    };
    let rhs = equations.iter().map(|(_, e)| scope.eval(e)).collect();
    Ok(OdeSystem::new(variables, parameters, rhs).expect("parser output is well-formed"))
}
