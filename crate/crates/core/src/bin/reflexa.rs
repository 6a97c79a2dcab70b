use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use reflexa::finite::oracle::{oracle_cases, run_cases, summarize};
use reflexa::finite::Exec;
use reflexa::scenario::paper_example_timed;
use reflexa::script::{
    parse_script, parse_syntax, render_json, render_text, RunOptions, Runner, Script, Stmt,
};
use reflexa::Field;

const USAGE_ERROR: u8 = 2;
const VERDICT_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(
    name = "reflexa",
    version,
    about = "Reflexivity, duals and Ext over quotient rings"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Report wall-clock time per command.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script file (`-` reads standard input).
    Run { script: String },
    /// The cone over the twisted cubic, step by step.
    PaperExample {
        #[arg(long, default_value = "GF(32003)")]
        field: String,
    },
    /// Brute-force checks over small finite algebras.
    Oracle {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases added to the fixed corpus.
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// `gb NAME` after the definitions of a script.
    Gb(Shorthand),
    /// `resolve MODULE LENGTH` after the definitions of a script.
    Resolve(Shorthand),
    /// `ext I MODULE MODULE` after the definitions of a script.
    Ext(Shorthand),
    /// `reflexive MODULE` after the definitions of a script.
    Reflexive(Shorthand),
}

#[derive(Args)]
struct Shorthand {
    /// Definitions given inline instead of a file.
    #[arg(short = 'e', long = "expr")]
    expr: Option<String>,
    /// Script file with definitions (when `-e` is absent), then the command arguments.
    #[arg(required = true)]
    args: Vec<String>,
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("reflexa: {msg}");
    ExitCode::from(code)
}

fn read_source(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn run_checked(script: &Script, cli: &Cli) -> ExitCode {
    let reports = Runner::new(RunOptions { timing: cli.timing }).run(script);
    match cli.format {
        Format::Text => print!("{}", render_text(&reports)),
        Format::Json => println!("{}", render_json(&reports)),
    }
    if reports.iter().all(|r| r.ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERDICT_FAILURE)
    }
}

fn shorthand(keyword: &str, s: &Shorthand, cli: &Cli) -> ExitCode {
    let (source, args) = match &s.expr {
        Some(e) => (e.clone(), &s.args[..]),
        None => match read_source(&s.args[0]) {
            Ok(text) => (text, &s.args[1..]),
            Err(e) => return fail(USAGE_ERROR, format!("{}: {e}", s.args[0])),
        },
    };
    let defs = match parse_syntax(&source) {
        Ok(script) => script
            .stmts
            .into_iter()
            .filter(|st| !matches!(st, Stmt::Command { .. })),
        Err(e) => return fail(USAGE_ERROR, e),
    };
    let mut text: String = defs.map(|st| format!("{st}\n")).collect();
    text.push_str(&format!("{keyword} {};\n", args.join(" ")));
    match parse_script(&text) {
        Ok(script) => run_checked(&script, cli),
        Err(e) => fail(USAGE_ERROR, e),
    }
}

fn oracle(seed: u64, cases: usize, jobs: Option<usize>, cli: &Cli) -> ExitCode {
    let seed = match std::env::var("REFLEXA_SEED") {
        Ok(v) => match v.trim().parse() {
            Ok(s) => s,
            Err(_) => {
                return fail(
                    USAGE_ERROR,
                    format!("REFLEXA_SEED is not an integer: `{v}`"),
                )
            }
        },
        Err(_) => seed,
    };
    let exec = if jobs == Some(1) {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let all = oracle_cases(seed, cases);
    let records = match jobs.filter(|&j| j > 1) {
        #[cfg(feature = "parallel")]
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| run_cases(&all, seed, exec)),
            Err(e) => return fail(USAGE_ERROR, e),
        },
        _ => run_cases(&all, seed, exec),
    };
    let records = match records {
        Ok(r) => r,
        Err(e) => return fail(VERDICT_FAILURE, e),
    };
    let summary = summarize(&records);
    match cli.format {
        Format::Json => {
            let out = json!({ "seed": seed, "records": records, "summary": summary });
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
        }
        Format::Text => {
            for r in &records {
                println!(
                    "{:>5}  {:<5} p={} dim A={} dim M={} iso={:<12} h_invertible={:<5} lemma={:<5} {}",
                    r.id,
                    if r.ok { "ok" } else { "FAIL" },
                    r.characteristic,
                    r.algebra_dim,
                    r.report.module_dim,
                    r.report.iso,
                    r.report.h_invertible,
                    r.lemma,
                    r.label
                );
            }
            println!(
                "seed {seed}: {} cases, {} consistent, {} inconsistent, {} inconclusive ({:.2}%), {} lemma failures",
                summary.cases,
                summary.consistent,
                summary.inconsistent,
                summary.inconclusive,
                100.0 * summary.inconclusive_rate,
                summary.lemma_failures
            );
        }
    }
    if summary.inconsistent == 0 && summary.lemma_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERDICT_FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Cmd::Run { script } => {
            let text = match read_source(script) {
                Ok(t) => t,
                Err(e) => return fail(USAGE_ERROR, format!("{script}: {e}")),
            };
            match parse_script(&text) {
                Ok(s) => run_checked(&s, &cli),
                Err(e) => fail(USAGE_ERROR, e),
            }
        }
        Cmd::PaperExample { field } => {
            let field: Field = match field.parse() {
                Ok(f) => f,
                Err(e) => return fail(USAGE_ERROR, e),
            };
            let rep = paper_example_timed(field, cli.timing);
            match cli.format {
                Format::Text => print!("{}", rep.render_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&rep).expect("serializable")
                ),
            }
            if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERDICT_FAILURE)
            }
        }
        Cmd::Oracle { seed, cases, jobs } => oracle(*seed, *cases, *jobs, &cli),
        Cmd::Gb(s) => shorthand("gb", s, &cli),
        Cmd::Resolve(s) => shorthand("resolve", s, &cli),
        Cmd::Ext(s) => shorthand("ext", s, &cli),
        Cmd::Reflexive(s) => shorthand("reflexive", s, &cli),
    }
}
