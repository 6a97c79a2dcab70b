use std::fmt;

use crate::coeff::Field;
use crate::monomial::OrderKind;
use crate::syntax::{PolyExpr, Pos};

/// A name together with where it appeared. Equality ignores the position.
#[derive(Debug, Clone, Eq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Self {
        Name {
            text: text.into(),
            pos: Pos::default(),
        }
    }
}

impl PartialEq for Name {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDef {
    /// `poly(FIELD, [VARS], ORDER) [/ ideal(...)]`
    Poly {
        field: Field,
        vars: Vec<Name>,
        order: OrderKind,
        ideal: Vec<PolyExpr>,
    },
    /// `BASE / ideal(...)` or `BASE / NAME`
    Quotient { base: Name, by: IdealExpr },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealExpr {
    Named(Name),
    /// Generators in the current ring, or in the ring named after `in`.
    Gens {
        gens: Vec<PolyExpr>,
        ring: Option<Name>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleExpr {
    /// A ring (free of rank one), an ideal (as a module) or a module.
    Named(Name),
    /// Relation vectors, each of length `rank`.
    Coker {
        ring: Name,
        rank: usize,
        relations: Vec<Vec<PolyExpr>>,
    },
    Cyclic {
        ring: Name,
        ideal: IdealExpr,
    },
    Free {
        ring: Name,
        rank: usize,
    },
    Sum(Name, Name),
    Hom(Name, Name),
    Dual(Name),
    Ext(usize, Name, Name),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gb,
    Resolve,
    Hom,
    Ext,
    Dual,
    Reflexive,
    Lemma,
    Annihilator,
    Colon,
    Kdim,
}

impl CommandKind {
    pub const ALL: [CommandKind; 10] = [
        CommandKind::Gb,
        CommandKind::Resolve,
        CommandKind::Hom,
        CommandKind::Ext,
        CommandKind::Dual,
        CommandKind::Reflexive,
        CommandKind::Lemma,
        CommandKind::Annihilator,
        CommandKind::Colon,
        CommandKind::Kdim,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            CommandKind::Gb => "gb",
            CommandKind::Resolve => "resolve",
            CommandKind::Hom => "hom",
            CommandKind::Ext => "ext",
            CommandKind::Dual => "dual",
            CommandKind::Reflexive => "reflexive",
            CommandKind::Lemma => "lemma",
            CommandKind::Annihilator => "annihilator",
            CommandKind::Colon => "colon",
            CommandKind::Kdim => "kdim",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.keyword() == s)
    }

    /// Argument shapes, for arity checks and usage messages.
    pub fn usage(self) -> &'static str {
        match self {
            CommandKind::Gb => "gb NAME",
            CommandKind::Resolve => "resolve MODULE LENGTH",
            CommandKind::Hom => "hom MODULE MODULE",
            CommandKind::Ext => "ext I MODULE MODULE",
            CommandKind::Dual => "dual MODULE",
            CommandKind::Reflexive => "reflexive MODULE",
            CommandKind::Lemma => "lemma MODULE",
            CommandKind::Annihilator => "annihilator MODULE",
            CommandKind::Colon => "colon IDEAL IDEAL",
            CommandKind::Kdim => "kdim MODULE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gb(Name),
    Resolve(Name, usize),
    Hom(Name, Name),
    Ext(usize, Name, Name),
    Dual(Name),
    Reflexive(Name),
    Lemma(Name),
    Annihilator(Name),
    Colon(IdealExpr, IdealExpr),
    Kdim(Name),
}

impl Command {
    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Gb(_) => CommandKind::Gb,
            Command::Resolve(..) => CommandKind::Resolve,
            Command::Hom(..) => CommandKind::Hom,
            Command::Ext(..) => CommandKind::Ext,
            Command::Dual(_) => CommandKind::Dual,
            Command::Reflexive(_) => CommandKind::Reflexive,
            Command::Lemma(_) => CommandKind::Lemma,
            Command::Annihilator(_) => CommandKind::Annihilator,
            Command::Colon(..) => CommandKind::Colon,
            Command::Kdim(_) => CommandKind::Kdim,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: Name, def: RingDef },
    Ideal { name: Name, ideal: IdealExpr },
    Module { name: Name, expr: ModuleExpr },
    Command { pos: PosIgnored, command: Command },
}

/// A position that never takes part in equality.
#[derive(Debug, Clone, Copy, Default)]
pub struct PosIgnored(pub Pos);

impl PartialEq for PosIgnored {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for PosIgnored {}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Named(n) => write!(f, "{n}"),
            IdealExpr::Gens { gens, ring } => {
                write!(f, "(")?;
                join(f, gens)?;
                write!(f, ")")?;
                if let Some(r) = ring {
                    write!(f, " in {r}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleExpr::Named(n) => write!(f, "{n}"),
            ModuleExpr::Coker {
                ring,
                rank,
                relations,
            } => {
                write!(f, "coker({ring}, {rank}, [")?;
                for (i, r) in relations.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "[")?;
                    join(f, r)?;
                    write!(f, "]")?;
                }
                write!(f, "])")
            }
            ModuleExpr::Cyclic { ring, ideal } => write!(f, "cyclic({ring}, {ideal})"),
            ModuleExpr::Free { ring, rank } => write!(f, "free({ring}, {rank})"),
            ModuleExpr::Sum(a, b) => write!(f, "sum({a}, {b})"),
            ModuleExpr::Hom(a, b) => write!(f, "hom({a}, {b})"),
            ModuleExpr::Dual(a) => write!(f, "dual({a})"),
            ModuleExpr::Ext(i, a, b) => write!(f, "ext({i}, {a}, {b})"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind().keyword())?;
        match self {
            Command::Gb(a)
            | Command::Dual(a)
            | Command::Reflexive(a)
            | Command::Lemma(a)
            | Command::Annihilator(a)
            | Command::Kdim(a) => write!(f, " {a}"),
            Command::Resolve(a, n) => write!(f, " {a} {n}"),
            Command::Hom(a, b) => write!(f, " {a} {b}"),
            Command::Ext(i, a, b) => write!(f, " {i} {a} {b}"),
            Command::Colon(a, b) => write!(f, " {a} {b}"),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring { name, def } => {
                write!(f, "ring {name} = ")?;
                match def {
                    RingDef::Poly {
                        field,
                        vars,
                        order,
                        ideal,
                    } => {
                        write!(f, "poly({field}, [")?;
                        join(f, vars)?;
                        write!(f, "], {order})")?;
                        if !ideal.is_empty() {
                            write!(f, " / ideal(")?;
                            join(f, ideal)?;
                            write!(f, ")")?;
                        }
                    }
                    RingDef::Quotient { base, by } => match by {
                        IdealExpr::Named(n) => write!(f, "{base} / {n}")?,
                        IdealExpr::Gens { gens, .. } => {
                            write!(f, "{base} / ideal(")?;
                            join(f, gens)?;
                            write!(f, ")")?;
                        }
                    },
                }
                write!(f, ";")
            }
            Stmt::Ideal { name, ideal } => write!(f, "ideal {name} = {ideal};"),
            Stmt::Module { name, expr } => write!(f, "module {name} = {expr};"),
            Stmt::Command { command, .. } => write!(f, "{command};"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
