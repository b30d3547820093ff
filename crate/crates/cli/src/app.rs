//! Command definitions and dispatch.
//!
//! Exit codes: 0 success (`equiv` true), 1 `equiv` false, 2 parse/usage/IO
//! errors, 3 census violations. With `--json`, results are wrapped as
//! `{"verb": .., "input": .., "result": ..}`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use tanglekit_core::{run_census_with_budget, CensusReport, ProjRat, TangleExpr};
use tanglekit_core::{EnumerateError, DEFAULT_WORD_BUDGET};

use crate::parse::{parse_braid, parse_fraction, parse_tangle, ParseError};
use crate::svg::render_tangle;

/// Environment variable overriding the census word budget.
pub const BUDGET_ENV: &str = "TANGLEKIT_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("{BUDGET_ENV} must be an unsigned integer, got `{0}`")]
    BadBudget(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "tanglekit",
    version,
    about = "Exact calculus of rational tangles: fractions, canonical forms, braids"
)]
pub struct Cli {
    /// Emit results as JSON envelopes.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the classifying fraction of a tangle expression.
    Fraction { expr: String },
    /// Decide whether two expressions are isotopy equivalent (exit 0/1).
    Equiv { left: String, right: String },
    /// Print the canonical alternating form of an expression.
    Canon { expr: String },
    /// Build the alternating tangle realizing a fraction.
    Synth { fraction: String },
    /// Translate an expression's move word to a three-strand braid word.
    Braid { expr: String },
    /// Translate a braid word back to a move word.
    Unbraid { word: String },
    /// Exhaustively cross-check the classification on short words.
    Census {
        /// Maximum raw word length to enumerate.
        #[arg(long)]
        max_len: u32,
    },
    /// Write a schematic twist diagram of an expression's class.
    Svg {
        expr: String,
        /// Output file path.
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// What a command produced: text for stdout plus the process exit code.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn fraction_json(v: &ProjRat) -> Value {
    // Exact integers of any size; relies on serde_json's
    // arbitrary_precision number representation.
    let number = |s: String| {
        serde_json::from_str::<serde_json::Number>(&s)
            .map(Value::Number)
            .expect("integer literal is a JSON number")
    };
    json!({
        "p": number(v.numer().to_string()),
        "q": number(v.denom().to_string()),
    })
}

fn envelope(verb: &str, input: Value, result: Value) -> String {
    let mut text = json!({
        "verb": verb,
        "input": input,
        "result": result,
    })
    .to_string();
    text.push('\n');
    text
}

fn census_budget() -> Result<u64, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(raw) => raw.parse().map_err(|_| CliError::BadBudget(raw)),
        Err(_) => Ok(DEFAULT_WORD_BUDGET),
    }
}

fn census_text(report: &CensusReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "max_len: {}", report.max_len);
    let _ = writeln!(out, "words: {}", report.word_count);
    let _ = writeln!(out, "matrix_classes: {}", report.matrix_classes);
    let _ = writeln!(out, "fraction_classes: {}", report.fraction_classes);
    let _ = writeln!(out, "violations: {}", report.violations.len());
    for v in &report.violations {
        let _ = writeln!(out, "violation[{}]: {} | {}", v.kind, v.left, v.right);
    }
    out
}

/// Runs one parsed command to completion.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Fraction { expr } => {
            let tangle = parse_tangle(expr)?;
            let fraction = tangle.fraction();
            Ok(Outcome::ok(if cli.json {
                envelope("fraction", json!(expr), fraction_json(&fraction))
            } else {
                format!("{fraction}\n")
            }))
        }
        Command::Equiv { left, right } => {
            let lhs = parse_tangle(left)?;
            let rhs = parse_tangle(right)?;
            let equal = lhs.equivalent(&rhs);
            let stdout = if cli.json {
                envelope("equiv", json!([left, right]), json!(equal))
            } else {
                format!("{equal}\n")
            };
            Ok(Outcome {
                stdout,
                code: if equal { 0 } else { 1 },
            })
        }
        Command::Canon { expr } => {
            let tangle = parse_tangle(expr)?;
            let canonical = TangleExpr::from_fraction(&tangle.fraction());
            Ok(Outcome::ok(if cli.json {
                envelope("canon", json!(expr), json!(canonical.to_string()))
            } else {
                format!("{canonical}\n")
            }))
        }
        Command::Synth { fraction } => {
            let value = parse_fraction(fraction)?;
            let tangle = TangleExpr::from_fraction(&value);
            Ok(Outcome::ok(if cli.json {
                envelope("synth", json!(fraction), json!(tangle.to_string()))
            } else {
                format!("{tangle}\n")
            }))
        }
        Command::Braid { expr } => {
            let tangle = parse_tangle(expr)?;
            let braid = tangle.to_word().to_braid();
            Ok(Outcome::ok(if cli.json {
                envelope("braid", json!(expr), json!(braid.to_string()))
            } else {
                format!("{braid}\n")
            }))
        }
        Command::Unbraid { word } => {
            let braid = parse_braid(word)?;
            let gen_word = braid.to_gen_word();
            Ok(Outcome::ok(if cli.json {
                envelope("unbraid", json!(word), json!(gen_word.to_string()))
            } else {
                format!("{gen_word}\n")
            }))
        }
        Command::Census { max_len } => {
            let report = run_census_with_budget(*max_len, census_budget()?)?;
            let stdout = if cli.json {
                envelope(
                    "census",
                    json!({ "max_len": max_len }),
                    serde_json::to_value(&report).expect("report serializes"),
                )
            } else {
                census_text(&report)
            };
            Ok(Outcome {
                stdout,
                code: if report.violations.is_empty() { 0 } else { 3 },
            })
        }
        Command::Svg { expr, output } => {
            let tangle = parse_tangle(expr)?;
            let document = render_tangle(&tangle);
            std::fs::write(output, &document).map_err(|source| CliError::Io {
                path: output.clone(),
                source,
            })?;
            Ok(Outcome::ok(if cli.json {
                envelope(
                    "svg",
                    json!(expr),
                    json!({
                        "output": output.display().to_string(),
                        "bytes": document.len(),
                    }),
                )
            } else {
                String::new()
            }))
        }
    }
}
