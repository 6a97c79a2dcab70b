//! A small command language over rings, ideals and modules.

pub mod ast;
pub mod parse;
pub mod report;
pub mod run;

pub use ast::{Command, CommandKind, IdealExpr, ModuleExpr, Name, RingDef, Script, Stmt};
pub use parse::{parse_script, parse_syntax};
pub use report::{render_json, render_text, Report};
pub use run::{run_script, RunOptions, Runner};

#[cfg(test)]
mod tests;
