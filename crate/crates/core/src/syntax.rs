//! Tokens and polynomial expressions shared by the polynomial reader and the
//! script language.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

const SYMBOLS: &str = "+-*/^()[],;=";

pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                pos,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
        } else if SYMBOLS.contains(c) {
            i += 1;
            col += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
            });
        } else {
            return Err(Error::parse(
                line,
                col,
                format!("unexpected character `{c}`"),
            ));
        }
    }
    Ok(out)
}

/// Cursor over a token slice with position-aware errors.
pub struct Cursor<'a> {
    toks: &'a [Token],
    at: usize,
    end: Pos,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token], end: Pos) -> Self {
        Cursor { toks, at: 0, end }
    }

    pub fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    pub fn peek_at(&self, k: usize) -> Option<&'a Tok> {
        self.toks.get(self.at + k).map(|t| &t.tok)
    }

    pub fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    pub fn is_done(&self) -> bool {
        self.at >= self.toks.len()
    }

    pub fn bump(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.at);
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        let p = self.pos();
        Error::parse(p.line, p.column, message)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, Pos)> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok((s.clone(), pos))
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    pub fn expect_usize(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let v = n
                    .to_usize()
                    .ok_or_else(|| self.error("integer too large"))?;
                self.at += 1;
                Ok(v)
            }
            _ => Err(self.unexpected("a non-negative integer")),
        }
    }

    pub fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }
}

/// Syntax tree of a polynomial expression; variables are resolved later
/// against a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    Var(String),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Div(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

fn starts_factor(t: Option<&Tok>) -> bool {
    matches!(
        t,
        Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::Sym('('))
    )
}

impl PolyExpr {
    pub fn parse(cur: &mut Cursor<'_>) -> Result<PolyExpr> {
        let mut lhs = if cur.eat_sym('-') {
            PolyExpr::Neg(Box::new(Self::parse_term(cur)?))
        } else {
            cur.eat_sym('+');
            Self::parse_term(cur)?
        };
        loop {
            if cur.eat_sym('+') {
                lhs = PolyExpr::Add(Box::new(lhs), Box::new(Self::parse_term(cur)?));
            } else if cur.eat_sym('-') {
                lhs = PolyExpr::Sub(Box::new(lhs), Box::new(Self::parse_term(cur)?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_term(cur: &mut Cursor<'_>) -> Result<PolyExpr> {
        let mut lhs = Self::parse_factor(cur)?;
        loop {
            if cur.eat_sym('*') {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(Self::parse_factor(cur)?));
            } else if cur.eat_sym('/') {
                lhs = PolyExpr::Div(Box::new(lhs), Box::new(Self::parse_factor(cur)?));
            } else if starts_factor(cur.peek()) {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(Self::parse_factor(cur)?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_factor(cur: &mut Cursor<'_>) -> Result<PolyExpr> {
        if cur.eat_sym('-') {
            return Ok(PolyExpr::Neg(Box::new(Self::parse_factor(cur)?)));
        }
        let mut base = Self::parse_atom(cur)?;
        while cur.eat_sym('^') {
            let e = cur.expect_usize()?;
            let e = u32::try_from(e).map_err(|_| cur.error("exponent too large"))?;
            base = PolyExpr::Pow(Box::new(base), e);
        }
        Ok(base)
    }

    fn parse_atom(cur: &mut Cursor<'_>) -> Result<PolyExpr> {
        match cur.peek() {
            Some(Tok::Int(n)) => {
                cur.bump();
                Ok(PolyExpr::Int(n.clone()))
            }
            Some(Tok::Ident(s)) => {
                cur.bump();
                Ok(PolyExpr::Var(s.clone()))
            }
            Some(Tok::Sym('(')) => {
                cur.bump();
                let e = Self::parse(cur)?;
                cur.expect_sym(')')?;
                Ok(e)
            }
            _ => Err(cur.unexpected("a polynomial term")),
        }
    }

    /// Names referenced by this expression.
    pub fn identifiers(&self, out: &mut Vec<String>) {
        match self {
            PolyExpr::Int(_) => {}
            PolyExpr::Var(s) => out.push(s.clone()),
            PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => a.identifiers(out),
            PolyExpr::Add(a, b)
            | PolyExpr::Sub(a, b)
            | PolyExpr::Mul(a, b)
            | PolyExpr::Div(a, b) => {
                a.identifiers(out);
                b.identifiers(out);
            }
        }
    }

    pub fn eval(&self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        Ok(match self {
            PolyExpr::Int(n) => Polynomial::constant(ring, ring.field().from_bigint(n)),
            PolyExpr::Var(name) => resolve_identifier(ring, name)?,
            PolyExpr::Neg(a) => a.eval(ring)?.neg(),
            PolyExpr::Add(a, b) => a.eval(ring)?.add(&b.eval(ring)?),
            PolyExpr::Sub(a, b) => a.eval(ring)?.sub(&b.eval(ring)?),
            PolyExpr::Mul(a, b) => a.eval(ring)?.mul(&b.eval(ring)?),
            PolyExpr::Pow(a, e) => a.eval(ring)?.pow(*e),
            PolyExpr::Div(a, b) => {
                let num = a.eval(ring)?;
                let den = b.eval(ring)?;
                match den.as_constant() {
                    Some(c) if !c.is_zero() => num.scale(&c.inv()),
                    _ => {
                        return Err(Error::Unsupported(
                            "division is only defined by nonzero constants".into(),
                        ))
                    }
                }
            }
        })
    }

    fn prec(&self) -> u8 {
        match self {
            PolyExpr::Add(..) | PolyExpr::Sub(..) | PolyExpr::Neg(..) => 1,
            PolyExpr::Mul(..) | PolyExpr::Div(..) => 2,
            PolyExpr::Pow(..) => 3,
            PolyExpr::Int(_) | PolyExpr::Var(_) => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.write_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            PolyExpr::Int(n) => write!(f, "{n}"),
            PolyExpr::Var(s) => write!(f, "{s}"),
            PolyExpr::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 2)
            }
            PolyExpr::Add(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " + ")?;
                b.write_at(f, 2)
            }
            PolyExpr::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(f, " - ")?;
                b.write_at(f, 2)
            }
            PolyExpr::Mul(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "*")?;
                b.write_at(f, 3)
            }
            PolyExpr::Div(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "/")?;
                b.write_at(f, 3)
            }
            PolyExpr::Pow(a, e) => {
                a.write_at(f, 4)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// Index of the variable named by one character; a lowercase letter falls
/// back to its uppercase variable when no lowercase one exists.
fn char_var(vars: &[String], ch: char) -> Option<usize> {
    let exact = |c: char| {
        vars.iter()
            .position(|v| v.len() == c.len_utf8() && v.starts_with(c))
    };
    exact(ch).or_else(|| {
        let mut up = ch.to_uppercase();
        match (up.next(), up.next()) {
            (Some(u), None) if u != ch => exact(u),
            _ => None,
        }
    })
}

/// A variable name, or a run of single-letter variables such as `XZ`.
pub fn resolve_identifier(ring: &Arc<PolyRing>, name: &str) -> Result<Polynomial> {
    if let Some(i) = ring.var_index(name) {
        return Ok(Polynomial::var(ring, i));
    }
    let mut acc = Polynomial::one(ring);
    for ch in name.chars() {
        let i = char_var(ring.vars(), ch)
            .ok_or_else(|| Error::Unsupported(format!("unknown variable `{name}`")))?;
        acc = acc.mul(&Polynomial::var(ring, i));
    }
    Ok(acc)
}

pub fn is_known_identifier(vars: &[String], name: &str) -> bool {
    vars.iter().any(|v| v == name) || name.chars().all(|ch| char_var(vars, ch).is_some())
}

/// Parse a complete polynomial expression from text.
pub fn parse_expr(text: &str) -> Result<PolyExpr> {
    let toks = tokenize(text)?;
    let end = Pos {
        line: 1,
        column: text.chars().count() + 1,
    };
    let mut cur = Cursor::new(&toks, end);
    let e = PolyExpr::parse(&mut cur)?;
    if !cur.is_done() {
        return Err(cur.unexpected("end of polynomial"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn juxtaposition_and_powers() {
        let e = parse_expr("2X^2 Y - (Z)").unwrap();
        assert_eq!(e.to_string(), "2*X^2*Y - Z");
    }

    #[test]
    fn printing_reparses_to_same_tree() {
        for s in [
            "-(X + Y)*Z",
            "X - (-Y)",
            "(X^2)^3",
            "3/2*X - -1",
            "-(-X)",
            "X*(Y*Z)",
        ] {
            let Ok(e) = parse_expr(s) else { continue };
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s}");
        }
    }

    #[test]
    fn error_positions() {
        let err = parse_expr("X + * Y").unwrap_err();
        assert_eq!(
            err,
            Error::parse(1, 5, "expected a polynomial term, found `*`")
        );
    }
}
