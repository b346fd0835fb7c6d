//! Command-line driver.
//!
//! Exit codes: 0 success (or a true comparison), 1 false comparison or a
//! failed self-test, 2 usage error, 3 domain error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::augment::{classify_cone, ConeLabel};
use crate::error::{Error, Result};
use crate::graph::build_word_poset;
use crate::io::{
    export_dot, export_json, export_witness_json, parse_alphabet_spec, parse_word, AlphabetSpec,
};
use crate::order::{leq_induced, witness};
use crate::poset::Poset;
use crate::selftest;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "induced-orders",
    version,
    about = "Induced orders on words over ordered alphabets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide v ≤ w; words are `.`-separated letter names, `@` for the empty word.
    Compare {
        spec: PathBuf,
        v: String,
        w: String,
        /// Also print the alignment witness as JSON.
        #[arg(long)]
        witness: bool,
    },
    /// Hasse diagram of all words up to --max-len.
    Hasse {
        spec: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Connected components of the window, one per line.
    Components {
        spec: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Locate a word relative to the join A < e < B.
    Classify {
        spec_a: PathBuf,
        spec_b: PathBuf,
        w: String,
        /// Which side's words are labelled "future".
        #[arg(long, value_enum, default_value_t = Side::A)]
        future: Side,
    },
    /// Run the exhaustive property checks.
    Selftest {
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    A,
    B,
}

fn load_spec(path: &PathBuf) -> Result<AlphabetSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_alphabet_spec(&text)
}

fn union_alphabet(a: &Poset, b: &Poset) -> Result<Poset> {
    let names: Vec<&str> = a
        .elements()
        .iter()
        .chain(b.elements())
        .map(|l| l.as_str())
        .collect();
    Poset::trivial(&names)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let code = match command {
        Command::Compare {
            spec,
            v,
            w,
            witness: show,
        } => {
            let aug = load_spec(&spec)?.augmentation()?;
            let v = parse_word(&v, aug.working())?;
            let w = parse_word(&w, aug.working())?;
            let related = leq_induced(&aug, &v, &w)?;
            let _ = writeln!(out, "{related}");
            if show {
                if let Some(wit) = witness(&aug, &v, &w)? {
                    let _ = writeln!(out, "{}", export_witness_json(&wit));
                }
            }
            if related {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
        Command::Hasse {
            spec,
            max_len,
            format,
        } => {
            let graph = build_word_poset(&load_spec(&spec)?.augmentation()?, max_len)?;
            match format {
                Format::Dot => {
                    let _ = write!(out, "{}", export_dot(&graph));
                }
                Format::Json => {
                    let _ = writeln!(out, "{}", export_json(&graph));
                }
            }
            EXIT_TRUE
        }
        Command::Components { spec, max_len } => {
            let graph = build_word_poset(&load_spec(&spec)?.augmentation()?, max_len)?;
            for component in graph.components() {
                let words: Vec<String> = component
                    .iter()
                    .map(|&i| graph.words()[i].render())
                    .collect();
                let _ = writeln!(out, "{}", words.join(" "));
            }
            EXIT_TRUE
        }
        Command::Classify {
            spec_a,
            spec_b,
            w,
            future,
        } => {
            let lower = load_spec(&spec_a)?.poset()?;
            let upper = load_spec(&spec_b)?.poset()?;
            let word = parse_word(&w, &union_alphabet(&lower, &upper)?)?;
            let label = match (classify_cone(word.letters(), &lower, &upper)?, future) {
                (ConeLabel::Origin, _) => "origin",
                (ConeLabel::Elsewhere, _) => "elsewhere",
                (ConeLabel::ConeA, Side::A) | (ConeLabel::ConeB, Side::B) => "future",
                (ConeLabel::ConeA, Side::B) | (ConeLabel::ConeB, Side::A) => "past",
            };
            let _ = writeln!(out, "{label}");
            EXIT_TRUE
        }
        Command::Selftest { max_len } => {
            let outcomes = selftest::run(max_len);
            for outcome in &outcomes {
                let status = if outcome.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{status} {}: {}", outcome.name, outcome.detail);
            }
            if outcomes.iter().all(|o| o.passed) {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            }
        }
    };
    Ok(code)
}

/// Runs the CLI on `argv` (program name first), writing to the given streams.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_TRUE
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}
