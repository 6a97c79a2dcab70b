use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Map, Value};

use super::ast::*;
use super::report::Report;
use crate::error::{Error, Result};
use crate::groebner::{self, FreeVector};
use crate::homological::{
    dual_module, ext_module, free_resolution, hom_module, is_reflexive, lemma_composite_check,
};
use crate::ideal::Ideal;
use crate::module::PresentedModule;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::QuotientRing;
use crate::syntax::PolyExpr;

#[derive(Clone)]
enum Value_ {
    Ring(Arc<QuotientRing>),
    Ideal(Ideal),
    Module(PresentedModule),
}

#[derive(Default, Clone, Copy)]
pub struct RunOptions {
    pub timing: bool,
}

/// Executes statements in order; definitions that fail stop the run.
pub struct Runner {
    values: HashMap<String, Value_>,
    current: Option<Arc<QuotientRing>>,
    options: RunOptions,
}

impl Runner {
    pub fn new(options: RunOptions) -> Self {
        Runner {
            values: HashMap::new(),
            current: None,
            options,
        }
    }

    pub fn run(&mut self, script: &Script) -> Vec<Report> {
        let mut out = Vec::new();
        for stmt in &script.stmts {
            let start = Instant::now();
            let mut report = match stmt {
                Stmt::Command { command, .. } => self.command(command),
                other => match self.define(other) {
                    Ok(()) => continue,
                    Err(e) => {
                        out.push(Report::failure(
                            other.to_string(),
                            self.field(),
                            e.to_string(),
                        ));
                        break;
                    }
                },
            };
            if self.options.timing {
                report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            out.push(report);
        }
        out
    }

    fn field(&self) -> Option<String> {
        self.current
            .as_ref()
            .map(|r| r.poly_ring().field().to_string())
    }

    fn get(&self, n: &Name) -> Result<&Value_> {
        self.values.get(&n.text).ok_or_else(|| {
            Error::parse(
                n.pos.line,
                n.pos.column,
                format!("unknown symbol `{}`", n.text),
            )
        })
    }

    fn ring(&self, n: &Name) -> Result<Arc<QuotientRing>> {
        match self.get(n)? {
            Value_::Ring(r) => Ok(r.clone()),
            _ => Err(Error::RingMismatch(format!("`{}` is not a ring", n.text))),
        }
    }

    fn polys(ring: &Arc<PolyRing>, es: &[PolyExpr]) -> Result<Vec<Polynomial>> {
        es.iter().map(|e| e.eval(ring)).collect()
    }

    fn ideal(&self, e: &IdealExpr, default: Option<&Arc<QuotientRing>>) -> Result<Ideal> {
        match e {
            IdealExpr::Named(n) => match self.get(n)? {
                Value_::Ideal(i) => Ok(i.clone()),
                _ => Err(Error::RingMismatch(format!("`{}` is not an ideal", n.text))),
            },
            IdealExpr::Gens { gens, ring } => {
                let r = match ring {
                    Some(r) => self.ring(r)?,
                    None => default
                        .or(self.current.as_ref())
                        .cloned()
                        .ok_or_else(|| Error::Unsupported("no ring has been defined yet".into()))?,
                };
                Ok(Ideal::new(&r, &Self::polys(r.poly_ring(), gens)?))
            }
        }
    }

    fn module(&self, n: &Name) -> Result<PresentedModule> {
        match self.get(n)? {
            Value_::Ring(r) => Ok(PresentedModule::free(r, 1)),
            Value_::Ideal(i) => i.as_module(),
            Value_::Module(m) => Ok(m.clone()),
        }
    }

    fn module_expr(&self, e: &ModuleExpr) -> Result<PresentedModule> {
        match e {
            ModuleExpr::Named(n) => self.module(n),
            ModuleExpr::Coker {
                ring,
                rank,
                relations,
            } => {
                let r = self.ring(ring)?;
                let rels = relations
                    .iter()
                    .map(|rel| Ok(FreeVector::new(Self::polys(r.poly_ring(), rel)?)))
                    .collect::<Result<Vec<_>>>()?;
                PresentedModule::new(&r, *rank, rels)
            }
            ModuleExpr::Cyclic { ring, ideal } => {
                let r = self.ring(ring)?;
                let i = self.ideal(ideal, Some(&r))?;
                QuotientRing::check_same(&r, i.ring())?;
                Ok(i.quotient_module())
            }
            ModuleExpr::Free { ring, rank } => Ok(PresentedModule::free(&self.ring(ring)?, *rank)),
            ModuleExpr::Sum(a, b) => self.module(a)?.direct_sum(&self.module(b)?),
            ModuleExpr::Hom(a, b) => Ok(hom_module(&self.module(a)?, &self.module(b)?)?
                .module()
                .clone()),
            ModuleExpr::Dual(a) => Ok(dual_module(&self.module(a)?)?.module().clone()),
            ModuleExpr::Ext(i, a, b) => ext_module(*i, &self.module(a)?, &self.module(b)?),
        }
    }

    fn define(&mut self, stmt: &Stmt) -> Result<()> {
        match stmt {
            Stmt::Ring { name, def } => {
                let ring = match def {
                    RingDef::Poly {
                        field,
                        vars,
                        order,
                        ideal,
                    } => {
                        let names: Vec<&str> = vars.iter().map(|v| v.text.as_str()).collect();
                        let p = PolyRing::new(*field, &names, *order);
                        QuotientRing::new(&p, Self::polys(&p, ideal)?)?
                    }
                    RingDef::Quotient { base, by } => {
                        let b = self.ring(base)?;
                        let i = self.ideal(by, Some(&b))?;
                        QuotientRing::check_same(&b, i.ring())?;
                        b.quotient(i.gens())?
                    }
                };
                self.current = Some(ring.clone());
                self.values.insert(name.text.clone(), Value_::Ring(ring));
            }
            Stmt::Ideal { name, ideal } => {
                let i = self.ideal(ideal, None)?;
                self.values.insert(name.text.clone(), Value_::Ideal(i));
            }
            Stmt::Module { name, expr } => {
                let m = self.module_expr(expr)?;
                self.values.insert(name.text.clone(), Value_::Module(m));
            }
            Stmt::Command { .. } => unreachable!("commands are not definitions"),
        }
        Ok(())
    }

    fn command(&self, c: &Command) -> Report {
        let echo = c.to_string();
        match self.command_result(c) {
            Ok((field, result, verdict)) => {
                let mut r = Report::success(echo, Some(field), result);
                r.ok = verdict;
                r
            }
            Err(e) => Report::failure(echo, self.field(), e.to_string()),
        }
    }

    fn command_result(&self, c: &Command) -> Result<(String, Map<String, Value>, bool)> {
        let mut out = Map::new();
        let mut verdict = true;
        let ring = match c {
            Command::Gb(a) => match self.get(a)? {
                Value_::Ideal(i) => {
                    let gb = i.groebner_basis()?;
                    out.insert("count".into(), json!(gb.len()));
                    out.insert("generators".into(), strings(&gb));
                    i.ring().clone()
                }
                _ => {
                    let m = self.module(a)?;
                    let gb = m.relation_gb();
                    out.insert("count".into(), json!(gb.len()));
                    out.insert("generators".into(), strings(gb.elements()));
                    m.ring().clone()
                }
            },
            Command::Resolve(a, n) => {
                let m = self.module(a)?;
                let res = free_resolution(&m, *n, true)?;
                out.insert("betti".into(), json!(res.ranks()));
                out.insert("complex".into(), json!(res.is_complex()));
                out.insert("exact".into(), json!(res.is_exact()?));
                out.insert(
                    "differentials".into(),
                    Value::Array(
                        res.differentials()
                            .iter()
                            .map(|d| json!(d.to_string()))
                            .collect(),
                    ),
                );
                verdict = res.is_complex();
                m.ring().clone()
            }
            Command::Hom(a, b) => {
                let h = hom_module(&self.module(a)?, &self.module(b)?)?;
                module_summary(h.module(), &mut out)?;
                out.insert("maps".into(), strings(h.maps()));
                h.module().ring().clone()
            }
            Command::Dual(a) => {
                let h = dual_module(&self.module(a)?)?;
                module_summary(h.module(), &mut out)?;
                out.insert("maps".into(), strings(h.maps()));
                h.module().ring().clone()
            }
            Command::Ext(i, a, b) => {
                let e = ext_module(*i, &self.module(a)?, &self.module(b)?)?;
                out.insert("zero".into(), json!(e.is_zero_module()));
                module_summary(&e, &mut out)?;
                e.ring().clone()
            }
            Command::Reflexive(a) => {
                let m = self.module(a)?;
                let r = is_reflexive(&m)?;
                out.insert("reflexive".into(), json!(r.reflexive));
                out.insert("torsionless".into(), json!(r.torsionless));
                out.insert(
                    "coker_dim".into(),
                    serde_json::to_value(r.coker_dim).expect("kdim"),
                );
                m.ring().clone()
            }
            Command::Lemma(a) => {
                let m = self.module(a)?;
                verdict = lemma_composite_check(&m)?;
                out.insert("holds".into(), json!(verdict));
                m.ring().clone()
            }
            Command::Annihilator(a) => {
                let m = self.module(a)?;
                let ann = m.annihilator()?;
                out.insert("generators".into(), strings(&ann.groebner_basis()?));
                m.ring().clone()
            }
            Command::Colon(a, b) => {
                let i = self.ideal(a, None)?;
                let j = self.ideal(b, Some(i.ring()))?;
                let c = i.colon(&j)?;
                out.insert("generators".into(), strings(&c.groebner_basis()?));
                i.ring().clone()
            }
            Command::Kdim(a) => {
                let m = self.module(a)?;
                out.insert(
                    "kdim".into(),
                    serde_json::to_value(m.k_dimension()).expect("kdim"),
                );
                m.ring().clone()
            }
        };
        Ok((ring.poly_ring().field().to_string(), out, verdict))
    }
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn module_summary(m: &PresentedModule, out: &mut Map<String, Value>) -> Result<()> {
    out.insert("generators".into(), json!(m.rank()));
    out.insert("relations".into(), strings(m.relations()));
    out.insert(
        "kdim".into(),
        serde_json::to_value(m.k_dimension()).expect("kdim"),
    );
    let ann = m.annihilator()?;
    out.insert(
        "annihilator".into(),
        strings(&groebner::ideal_gb_polys(m.ring(), ann.gens())?),
    );
    Ok(())
}

/// Parse, check and run a script.
pub fn run_script(text: &str, options: RunOptions) -> Result<Vec<Report>> {
    let script = super::parse::parse_script(text)?;
    Ok(Runner::new(options).run(&script))
}
