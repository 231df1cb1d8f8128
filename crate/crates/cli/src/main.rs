//! `ospkit`: run spo-insertion, the correspondences built on it, character
//! construction and identity checks from the command line.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch or
//! an inverse step is infeasible, and 2 on any input error.

mod commands;
mod input;
mod text;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ospkit_core::Partition;

#[derive(Parser, Debug)]
#[command(name = "ospkit", version, about = "Orthosymplectic tableaux and Cauchy-type correspondences")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Number of symplectic letters `1..m` and their barred partners.
    #[arg(long, global = true, default_value_t = 1)]
    pub m: u32,
    /// Number of circled letters `1o..no`.
    #[arg(long, global = true, default_value_t = 1)]
    pub n: u32,
    /// Largest top entry of an array, or number of `y` variables.
    #[arg(long, global = true, default_value_t = 1)]
    pub q: u32,
    /// Number of columns, word length or degree cap.
    #[arg(long, global = true, default_value_t = 2)]
    pub k: usize,
    /// Path to a JSON file, inline JSON, or `-` for standard input.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Run the inverse map.
    #[arg(long, global = true)]
    pub inverse: bool,
    /// Include every intermediate state.
    #[arg(long, global = true)]
    pub trace: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Refuse to enumerate shapes or arrays larger than this.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_cells: usize,
    /// Report wall time in verification output. Makes output nondeterministic.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Insert a letter into an spo-tableau: `{"tableau": T, "letter": "1b"}`.
    /// With --inverse: `{"tableau": T, "effect": {"added": [r, c]}}`.
    Insert,
    /// The spo-correspondence on an array of class A.
    Correspond,
    /// The Burge correspondence on a Burge array.
    Burge,
    /// The dual spo-correspondence on an array of class A*.
    DualCorrespond,
    /// The dual Burge correspondence.
    DualBurge,
    /// Words of length k against (spo-tableau, up-down tableau) pairs.
    Word,
    /// List objects of a kind.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long, value_parser = input::parse_shape, default_value = "")]
        shape: Partition,
    },
    /// Build a character polynomial.
    Character {
        #[arg(long, value_parser = input::parse_shape)]
        shape: Partition,
        #[arg(long, value_enum, default_value_t = CharKind::Spo)]
        kind: CharKind,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Check an identity up to degree k.
    Verify {
        #[command(subcommand)]
        identity: Identity,
    },
    /// Print any supported JSON object as text.
    Render,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Spo,
    Symplectic,
    Semistandard,
    DualSemistandard,
    /// Semistandard with entries in `1..q`.
    Ssyt,
    Updown,
    A,
    AStar,
    Words,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharKind {
    Spo,
    Symplectic,
    Schur,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    MuSum,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum Identity {
    Cauchy,
    DualCauchy,
    Power,
    Matrix,
}

/// A finished command: what to print and whether it counts as success.
pub struct Outcome {
    pub body: String,
    pub ok: bool,
}

fn one_line(msg: &str) -> String {
    msg.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// The error chain on one line, skipping causes already quoted by their parent.
fn diagnostic(e: &anyhow::Error) -> String {
    let mut parts: Vec<String> = Vec::new();
    for cause in e.chain() {
        let s = cause.to_string();
        if !parts.last().is_some_and(|p| p.contains(&s)) {
            parts.push(s);
        }
    }
    one_line(&parts.join(": "))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("ospkit: {}", one_line(first.trim_start_matches("error: ")));
            return ExitCode::from(2);
        }
    };
    match commands::dispatch(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.body);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("ospkit: {}", diagnostic(&e));
            let infeasible = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<ospkit_core::Error>(), Some(ospkit_core::Error::Infeasible(_))));
            ExitCode::from(if infeasible { 1 } else { 2 })
        }
    }
}
