//! Text format for polynomial mappings.
//!
//! A mapping file declares its variables and then lists one polynomial per
//! component:
//!
//! ```text
//! # the mapping (x1, x2, x1*x2*x3)
//! vars x1 x2 x3;
//! x1;
//! x2;
//! x1*x2*x3
//! ```
//!
//! Grammar: integer literals, the declared variable names, operators
//! `+ - * ^` (with positive integer exponents), parentheses. `#` starts a
//! comment to end of line; whitespace is insignificant. Every failure is a
//! diagnostic with line and column, never a crash.

use num_bigint::BigInt;

use crate::algebra::{MultiPoly, Rational, VarSpace};

/// A polynomial mapping `F: C^n -> C^n` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialMapping {
    n: usize,
    components: Vec<MultiPoly>,
    source_text: String,
}

impl PolynomialMapping {
    /// Build from components directly (used by tests and by the library).
    /// Every variable index used must be `< n`.
    pub fn new(n: usize, components: Vec<MultiPoly>) -> Result<Self, ParseError> {
        if components.len() != n {
            return Err(ParseError::at(
                0,
                0,
                format!("mapping has {} components but {} variables", components.len(), n),
            ));
        }
        for p in &components {
            if let Some(max) = p.occurring_vars().into_iter().max() {
                if max >= n {
                    return Err(ParseError::at(0, 0, format!("variable index {} out of range", max)));
                }
            }
        }
        let mut m = PolynomialMapping { n, components, source_text: String::new() };
        m.source_text = m.canonical_text();
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn source_text(&self) -> &str {
        &self.source_text
    }

    /// Canonical one-line form; parsing it back yields the same components.
    pub fn canonical_text(&self) -> String {
        let header: Vec<String> = (0..self.n).map(|i| VarSpace::Ambient.var_name(i)).collect();
        let comps: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        format!("vars {}; {}", header.join(" "), comps.join("; "))
    }
}

/// Parse diagnostic with 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, col: usize, message: String) -> Self {
        ParseError { line, col, message }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parse the textual format into a [`PolynomialMapping`].
pub fn parse_mapping(text: &str) -> Result<PolynomialMapping, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, vars: Vec::new() };
    p.mapping(text)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Semi,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        match ch {
            c if c.is_whitespace() => {
                chars.next();
                bump(c, &mut line, &mut col);
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    chars.next();
                    bump(c, &mut line, &mut col);
                    if c == '\n' {
                        break;
                    }
                }
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                let value = s.parse::<BigInt>().expect("digits");
                out.push(Spanned { tok: Tok::Int(value), line: tline, col: tcol });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                        bump(c, &mut line, &mut col);
                    } else {
                        break;
                    }
                }
                out.push(Spanned { tok: Tok::Ident(s), line: tline, col: tcol });
            }
            _ => {
                let tok = match ch {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ';' => Tok::Semi,
                    other => {
                        return Err(ParseError::at(tline, tcol, format!("unexpected character '{}'", other)))
                    }
                };
                chars.next();
                bump(ch, &mut line, &mut col);
                out.push(Spanned { tok, line: tline, col: tcol });
            }
        }
    }
    Ok(out)
}

/// Exponents beyond this are rejected so hostile inputs cannot demand
/// astronomically large expansions.
const MAX_EXPONENT: u32 = 999;

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.line, t.col),
            None => self
                .tokens
                .last()
                .map(|t| (t.line, t.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::at(line, col, msg.into())
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t.tok == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected {}", what))),
        }
    }

    fn mapping(&mut self, source: &str) -> Result<PolynomialMapping, ParseError> {
        match self.next() {
            Some(Spanned { tok: Tok::Ident(kw), .. }) if kw == "vars" => {}
            _ => {
                return Err(ParseError::at(1, 1, "input must start with a 'vars' header".into()));
            }
        }
        loop {
            match self.peek() {
                Some(Spanned { tok: Tok::Ident(name), line, col }) => {
                    let (name, line, col) = (name.clone(), *line, *col);
                    if self.vars.contains(&name) {
                        return Err(ParseError::at(line, col, format!("duplicate variable '{}'", name)));
                    }
                    self.vars.push(name);
                    self.pos += 1;
                }
                Some(Spanned { tok: Tok::Semi, .. }) => break,
                _ => return Err(self.error("expected variable name or ';' in header")),
            }
        }
        self.expect(Tok::Semi, "';' after header")?;
        if self.vars.is_empty() {
            return Err(self.error("header declares no variables"));
        }

        let mut components = Vec::new();
        loop {
            if self.peek().is_none() {
                break;
            }
            components.push(self.expr()?);
            match self.peek() {
                Some(Spanned { tok: Tok::Semi, .. }) => {
                    self.pos += 1;
                    // Tolerate a trailing separator at end of input.
                    if self.peek().is_none() {
                        break;
                    }
                }
                None => break,
                _ => return Err(self.error("expected ';' between components")),
            }
        }

        let n = self.vars.len();
        if components.len() != n {
            let (line, col) = self.here();
            return Err(ParseError::at(
                line,
                col,
                format!("{} variables declared but {} components given", n, components.len()),
            ));
        }
        let mut m = PolynomialMapping { n, components, source_text: source.to_string() };
        m.source_text = source.to_string();
        Ok(m)
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            self.pos += 1;
            let (line, col) = self.here();
            match self.next() {
                Some(Spanned { tok: Tok::Int(k), .. }) => {
                    use num_traits::ToPrimitive;
                    let k = k.to_u32().filter(|k| (1..=MAX_EXPONENT).contains(k)).ok_or_else(|| {
                        ParseError::at(line, col, format!("exponent must be an integer in 1..={}", MAX_EXPONENT))
                    })?;
                    return Ok(base.pow(k));
                }
                _ => {
                    return Err(ParseError::at(line, col, "exponent must be a positive integer literal".into()))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().cloned() {
            Some(Spanned { tok: Tok::Int(value), .. }) => {
                self.pos += 1;
                Ok(MultiPoly::constant(VarSpace::Ambient, Rational::from_integer(value)))
            }
            Some(Spanned { tok: Tok::Ident(name), line, col }) => {
                self.pos += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(idx) => Ok(MultiPoly::var(VarSpace::Ambient, idx)),
                    None => Err(ParseError::at(line, col, format!("unknown variable {}", name))),
                }
            }
            Some(Spanned { tok: Tok::LParen, .. }) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error("expected integer, variable or '('")),
        }
    }
}
