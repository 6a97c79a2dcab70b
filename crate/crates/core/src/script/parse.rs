use std::collections::HashMap;

use super::ast::*;
use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::monomial::OrderKind;
use crate::syntax::{is_known_identifier, tokenize, Cursor, PolyExpr, Pos, Tok};

/// Parse and name-check a script.
pub fn parse_script(text: &str) -> Result<Script> {
    let script = parse_syntax(text)?;
    check(&script)?;
    Ok(script)
}

/// Parse without resolving names.
pub fn parse_syntax(text: &str) -> Result<Script> {
    let toks = tokenize(text)?;
    let end = end_pos(text);
    let mut cur = Cursor::new(&toks, end);
    let mut stmts = Vec::new();
    while !cur.is_done() {
        stmts.push(statement(&mut cur)?);
    }
    Ok(Script { stmts })
}

fn end_pos(text: &str) -> Pos {
    let line = text.lines().count().max(1);
    let last = if text.ends_with('\n') {
        ""
    } else {
        text.lines().last().unwrap_or("")
    };
    let line = if text.ends_with('\n') { line + 1 } else { line };
    Pos {
        line,
        column: last.chars().count() + 1,
    }
}

fn name(cur: &mut Cursor<'_>) -> Result<Name> {
    let (text, pos) = cur.expect_ident()?;
    Ok(Name { text, pos })
}

fn is_ident(t: Option<&Tok>, s: &str) -> bool {
    matches!(t, Some(Tok::Ident(x)) if x == s)
}

fn statement(cur: &mut Cursor<'_>) -> Result<Stmt> {
    let pos = cur.pos();
    let (kw, _) = cur.expect_ident()?;
    let stmt = match kw.as_str() {
        "ring" => {
            let name = name(cur)?;
            cur.expect_sym('=')?;
            Stmt::Ring {
                name,
                def: ring_def(cur)?,
            }
        }
        "ideal" => {
            let name = name(cur)?;
            cur.expect_sym('=')?;
            Stmt::Ideal {
                name,
                ideal: ideal_expr(cur)?,
            }
        }
        "module" => {
            let name = name(cur)?;
            cur.expect_sym('=')?;
            Stmt::Module {
                name,
                expr: module_expr(cur)?,
            }
        }
        other => match CommandKind::from_keyword(other) {
            Some(kind) => Stmt::Command {
                pos: PosIgnored(pos),
                command: command(cur, kind, pos)?,
            },
            None => {
                return Err(Error::parse(
                    pos.line,
                    pos.column,
                    format!("unknown statement `{other}`"),
                ))
            }
        },
    };
    cur.expect_sym(';')?;
    Ok(stmt)
}

fn field(cur: &mut Cursor<'_>) -> Result<Field> {
    let pos = cur.pos();
    let (id, _) = cur.expect_ident()?;
    let modulus = |cur: &mut Cursor<'_>| -> Result<Field> {
        let p = cur.expect_usize()?;
        Field::prime(p as u64).map_err(|e| Error::parse(pos.line, pos.column, e.to_string()))
    };
    match id.as_str() {
        "QQ" | "Q" => Ok(Field::Rational),
        "GF" => {
            cur.expect_sym('(')?;
            let f = modulus(cur)?;
            cur.expect_sym(')')?;
            Ok(f)
        }
        "ZZ" => {
            cur.expect_sym('/')?;
            modulus(cur)
        }
        other => Err(Error::parse(
            pos.line,
            pos.column,
            format!("unknown field `{other}`"),
        )),
    }
}

fn order(cur: &mut Cursor<'_>) -> Result<OrderKind> {
    let pos = cur.pos();
    let (id, _) = cur.expect_ident()?;
    match id.as_str() {
        "lex" => Ok(OrderKind::Lex),
        "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
        other => Err(Error::parse(
            pos.line,
            pos.column,
            format!("unknown monomial order `{other}`"),
        )),
    }
}

fn poly_list(cur: &mut Cursor<'_>, close: char) -> Result<Vec<PolyExpr>> {
    let mut out = Vec::new();
    if cur.eat_sym(close) {
        return Ok(out);
    }
    loop {
        out.push(PolyExpr::parse(cur)?);
        if cur.eat_sym(close) {
            return Ok(out);
        }
        cur.expect_sym(',')?;
    }
}

fn ring_def(cur: &mut Cursor<'_>) -> Result<RingDef> {
    if is_ident(cur.peek(), "poly") && cur.peek_at(1) == Some(&Tok::Sym('(')) {
        cur.bump();
        cur.expect_sym('(')?;
        let field = field(cur)?;
        cur.expect_sym(',')?;
        cur.expect_sym('[')?;
        let mut vars = Vec::new();
        if !cur.eat_sym(']') {
            loop {
                vars.push(name(cur)?);
                if cur.eat_sym(']') {
                    break;
                }
                cur.expect_sym(',')?;
            }
        }
        let order = if cur.eat_sym(',') {
            order(cur)?
        } else {
            OrderKind::DegRevLex
        };
        cur.expect_sym(')')?;
        let ideal = if cur.eat_sym('/') {
            cur.expect_keyword("ideal")?;
            cur.expect_sym('(')?;
            poly_list(cur, ')')?
        } else {
            Vec::new()
        };
        return Ok(RingDef::Poly {
            field,
            vars,
            order,
            ideal,
        });
    }
    let base = name(cur)?;
    cur.expect_sym('/')?;
    let by = if is_ident(cur.peek(), "ideal") && cur.peek_at(1) == Some(&Tok::Sym('(')) {
        cur.bump();
        cur.bump();
        IdealExpr::Gens {
            gens: poly_list(cur, ')')?,
            ring: None,
        }
    } else {
        IdealExpr::Named(name(cur)?)
    };
    Ok(RingDef::Quotient { base, by })
}

fn ideal_expr(cur: &mut Cursor<'_>) -> Result<IdealExpr> {
    let literal = if cur.eat_sym('(') {
        true
    } else if is_ident(cur.peek(), "ideal") && cur.peek_at(1) == Some(&Tok::Sym('(')) {
        cur.bump();
        cur.bump();
        true
    } else {
        false
    };
    if !literal {
        return Ok(IdealExpr::Named(name(cur)?));
    }
    let gens = poly_list(cur, ')')?;
    let ring = if is_ident(cur.peek(), "in") {
        cur.bump();
        Some(name(cur)?)
    } else {
        None
    };
    Ok(IdealExpr::Gens { gens, ring })
}

fn module_expr(cur: &mut Cursor<'_>) -> Result<ModuleExpr> {
    let head = name(cur)?;
    if !cur.eat_sym('(') {
        return Ok(ModuleExpr::Named(head));
    }
    let expr = match head.text.as_str() {
        "coker" => {
            let ring = name(cur)?;
            cur.expect_sym(',')?;
            let rank = cur.expect_usize()?;
            cur.expect_sym(',')?;
            cur.expect_sym('[')?;
            let mut relations = Vec::new();
            if !cur.eat_sym(']') {
                loop {
                    cur.expect_sym('[')?;
                    relations.push(poly_list(cur, ']')?);
                    if cur.eat_sym(']') {
                        break;
                    }
                    cur.expect_sym(',')?;
                }
            }
            ModuleExpr::Coker {
                ring,
                rank,
                relations,
            }
        }
        "cyclic" => {
            let ring = name(cur)?;
            cur.expect_sym(',')?;
            ModuleExpr::Cyclic {
                ring,
                ideal: ideal_expr(cur)?,
            }
        }
        "free" => {
            let ring = name(cur)?;
            cur.expect_sym(',')?;
            ModuleExpr::Free {
                ring,
                rank: cur.expect_usize()?,
            }
        }
        "sum" | "hom" => {
            let a = name(cur)?;
            cur.expect_sym(',')?;
            let b = name(cur)?;
            if head.text == "sum" {
                ModuleExpr::Sum(a, b)
            } else {
                ModuleExpr::Hom(a, b)
            }
        }
        "dual" => ModuleExpr::Dual(name(cur)?),
        "ext" => {
            let i = cur.expect_usize()?;
            cur.expect_sym(',')?;
            let a = name(cur)?;
            cur.expect_sym(',')?;
            ModuleExpr::Ext(i, a, name(cur)?)
        }
        other => {
            return Err(Error::parse(
                head.pos.line,
                head.pos.column,
                format!("unknown module constructor `{other}`"),
            ))
        }
    };
    cur.expect_sym(')')?;
    Ok(expr)
}

enum Arg {
    Name(Name),
    Int(usize, Pos),
    Ideal(IdealExpr, Pos),
}

fn arg_pos(a: &Arg) -> Pos {
    match a {
        Arg::Name(n) => n.pos,
        Arg::Int(_, p) | Arg::Ideal(_, p) => *p,
    }
}

fn command(cur: &mut Cursor<'_>, kind: CommandKind, pos: Pos) -> Result<Command> {
    let mut args = Vec::new();
    while !cur.is_done() && cur.peek() != Some(&Tok::Sym(';')) {
        let at = cur.pos();
        args.push(match cur.peek() {
            Some(Tok::Int(_)) => Arg::Int(cur.expect_usize()?, at),
            Some(Tok::Sym('(')) => Arg::Ideal(ideal_expr(cur)?, at),
            Some(Tok::Ident(_)) => Arg::Name(name(cur)?),
            _ => return Err(cur.unexpected("a command argument or `;`")),
        });
    }
    let arity = match kind {
        CommandKind::Hom | CommandKind::Colon | CommandKind::Resolve => 2,
        CommandKind::Ext => 3,
        _ => 1,
    };
    if args.len() != arity {
        return Err(Error::parse(
            pos.line,
            pos.column,
            format!(
                "`{}` takes {arity} argument{} ({}), found {}",
                kind.keyword(),
                if arity == 1 { "" } else { "s" },
                kind.usage(),
                args.len()
            ),
        ));
    }
    let mut it = args.into_iter();
    let next_name = |it: &mut std::vec::IntoIter<Arg>| -> Result<Name> {
        match it.next().expect("arity checked") {
            Arg::Name(n) => Ok(n),
            other => {
                let p = arg_pos(&other);
                Err(Error::parse(p.line, p.column, "expected a name"))
            }
        }
    };
    let next_int = |it: &mut std::vec::IntoIter<Arg>| -> Result<usize> {
        match it.next().expect("arity checked") {
            Arg::Int(n, _) => Ok(n),
            other => {
                let p = arg_pos(&other);
                Err(Error::parse(
                    p.line,
                    p.column,
                    "expected a non-negative integer",
                ))
            }
        }
    };
    let next_ideal = |it: &mut std::vec::IntoIter<Arg>| -> Result<IdealExpr> {
        match it.next().expect("arity checked") {
            Arg::Name(n) => Ok(IdealExpr::Named(n)),
            Arg::Ideal(e, _) => Ok(e),
            Arg::Int(_, p) => Err(Error::parse(p.line, p.column, "expected an ideal")),
        }
    };
    Ok(match kind {
        CommandKind::Gb => Command::Gb(next_name(&mut it)?),
        CommandKind::Resolve => {
            let m = next_name(&mut it)?;
            Command::Resolve(m, next_int(&mut it)?)
        }
        CommandKind::Hom => {
            let a = next_name(&mut it)?;
            Command::Hom(a, next_name(&mut it)?)
        }
        CommandKind::Ext => {
            let i = next_int(&mut it)?;
            let a = next_name(&mut it)?;
            Command::Ext(i, a, next_name(&mut it)?)
        }
        CommandKind::Dual => Command::Dual(next_name(&mut it)?),
        CommandKind::Reflexive => Command::Reflexive(next_name(&mut it)?),
        CommandKind::Lemma => Command::Lemma(next_name(&mut it)?),
        CommandKind::Annihilator => Command::Annihilator(next_name(&mut it)?),
        CommandKind::Colon => {
            let a = next_ideal(&mut it)?;
            Command::Colon(a, next_ideal(&mut it)?)
        }
        CommandKind::Kdim => Command::Kdim(next_name(&mut it)?),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    Ring,
    Ideal,
    Module,
}

impl Kind {
    fn label(self) -> &'static str {
        match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Module => "module",
        }
    }
}

#[derive(Default)]
struct Scope {
    kinds: HashMap<String, Kind>,
    /// Variables of each ring; the ring each ideal lives in.
    vars: HashMap<String, Vec<String>>,
    ideal_ring: HashMap<String, String>,
    current: Option<String>,
}

fn perr(pos: Pos, msg: String) -> Error {
    Error::parse(pos.line, pos.column, msg)
}

impl Scope {
    fn expect(&self, n: &Name, allowed: &[Kind]) -> Result<Kind> {
        match self.kinds.get(&n.text) {
            None => Err(perr(n.pos, format!("unknown symbol `{}`", n.text))),
            Some(k) if allowed.contains(k) => Ok(*k),
            Some(k) => {
                let want: Vec<&str> = allowed.iter().map(|k| k.label()).collect();
                Err(perr(
                    n.pos,
                    format!(
                        "`{}` is a {}, expected a {}",
                        n.text,
                        k.label(),
                        want.join(" or ")
                    ),
                ))
            }
        }
    }

    fn check_polys(&self, ring: &str, polys: &[PolyExpr], pos: Pos) -> Result<()> {
        let vars = &self.vars[ring];
        for p in polys {
            let mut ids = Vec::new();
            p.identifiers(&mut ids);
            if let Some(bad) = ids.iter().find(|id| !is_known_identifier(vars, id)) {
                return Err(perr(
                    pos,
                    format!("unknown symbol `{bad}` in ring `{ring}`"),
                ));
            }
        }
        Ok(())
    }

    /// The ring an ideal expression lives in.
    fn ideal(&self, e: &IdealExpr, default_ring: Option<&str>, pos: Pos) -> Result<String> {
        match e {
            IdealExpr::Named(n) => {
                self.expect(n, &[Kind::Ideal])?;
                Ok(self.ideal_ring[&n.text].clone())
            }
            IdealExpr::Gens { gens, ring } => {
                let r = match ring {
                    Some(r) => {
                        self.expect(r, &[Kind::Ring])?;
                        r.text.clone()
                    }
                    None => default_ring
                        .map(str::to_string)
                        .or_else(|| self.current.clone())
                        .ok_or_else(|| perr(pos, "no ring has been defined yet".into()))?,
                };
                self.check_polys(&r, gens, pos)?;
                Ok(r)
            }
        }
    }

    fn module(&self, e: &ModuleExpr, pos: Pos) -> Result<()> {
        let ring = |n: &Name| self.expect(n, &[Kind::Ring]).map(|_| ());
        let any = |n: &Name| {
            self.expect(n, &[Kind::Ring, Kind::Ideal, Kind::Module])
                .map(|_| ())
        };
        match e {
            ModuleExpr::Named(n) | ModuleExpr::Dual(n) => any(n),
            ModuleExpr::Coker {
                ring: r,
                rank,
                relations,
            } => {
                ring(r)?;
                for rel in relations {
                    if rel.len() != *rank {
                        return Err(perr(
                            pos,
                            format!("relation has {} entries, expected {rank}", rel.len()),
                        ));
                    }
                    self.check_polys(&r.text, rel, pos)?;
                }
                Ok(())
            }
            ModuleExpr::Cyclic { ring: r, ideal } => {
                ring(r)?;
                self.ideal(ideal, Some(&r.text), pos).map(|_| ())
            }
            ModuleExpr::Free { ring: r, .. } => ring(r),
            ModuleExpr::Sum(a, b) | ModuleExpr::Hom(a, b) | ModuleExpr::Ext(_, a, b) => {
                any(a)?;
                any(b)
            }
        }
    }
}

fn check(script: &Script) -> Result<()> {
    let mut sc = Scope::default();
    for stmt in &script.stmts {
        match stmt {
            Stmt::Ring { name, def } => {
                let vars = match def {
                    RingDef::Poly { vars, ideal, .. } => {
                        let names: Vec<String> = vars.iter().map(|v| v.text.clone()).collect();
                        for (i, v) in vars.iter().enumerate() {
                            if names[..i].contains(&v.text) {
                                return Err(perr(
                                    v.pos,
                                    format!("variable `{}` declared twice", v.text),
                                ));
                            }
                        }
                        sc.vars.insert(name.text.clone(), names.clone());
                        sc.check_polys(&name.text, ideal, name.pos)?;
                        names
                    }
                    RingDef::Quotient { base, by } => {
                        sc.expect(base, &[Kind::Ring])?;
                        sc.ideal(by, Some(&base.text), name.pos)?;
                        sc.vars[&base.text].clone()
                    }
                };
                sc.vars.insert(name.text.clone(), vars);
                sc.kinds.insert(name.text.clone(), Kind::Ring);
                sc.current = Some(name.text.clone());
            }
            Stmt::Ideal { name, ideal } => {
                let r = sc.ideal(ideal, None, name.pos)?;
                sc.kinds.insert(name.text.clone(), Kind::Ideal);
                sc.ideal_ring.insert(name.text.clone(), r);
            }
            Stmt::Module { name, expr } => {
                sc.module(expr, name.pos)?;
                sc.kinds.insert(name.text.clone(), Kind::Module);
            }
            Stmt::Command { pos, command } => {
                let all = [Kind::Ring, Kind::Ideal, Kind::Module];
                match command {
                    Command::Gb(a) => {
                        sc.expect(a, &all)?;
                    }
                    Command::Resolve(a, n) => {
                        sc.expect(a, &all)?;
                        if *n == 0 {
                            return Err(perr(pos.0, "resolution length must be at least 1".into()));
                        }
                    }
                    Command::Hom(a, b) | Command::Ext(_, a, b) => {
                        sc.expect(a, &all)?;
                        sc.expect(b, &all)?;
                    }
                    Command::Dual(a)
                    | Command::Reflexive(a)
                    | Command::Lemma(a)
                    | Command::Annihilator(a)
                    | Command::Kdim(a) => {
                        sc.expect(a, &all)?;
                    }
                    Command::Colon(a, b) => {
                        let ra = sc.ideal(a, None, pos.0)?;
                        let rb = sc.ideal(b, Some(&ra), pos.0)?;
                        if ra != rb {
                            return Err(perr(
                                pos.0,
                                format!("ideals live in different rings `{ra}` and `{rb}`"),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
