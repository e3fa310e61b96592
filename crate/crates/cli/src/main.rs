//! `bqo`: batch front end over the JSON formats of `bqo-core`.
//!
//! Reports go to stdout (or `--out`) as pretty JSON; a one-line summary
//! goes to stderr. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | file could not be read or written |
//! | 2 | bad command line |
//! | 3 | schema or validation error in an input |
//! | 4 | x- or y-prefix too short |
//! | 5 | window exhausted while smoothing |
//! | 6 | a verification produced a counterexample |
//! | 7 | indeterminate block verdict under `--boundary-policy strict` |

mod cmd;
mod error;

use std::path::PathBuf;

use bqo_core::corpus::DEFAULT_SEED;
use bqo_core::Window;
use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "bqo", version, about = "Finite constructions around better-quasi-orders")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Override the window's entry bound N.
    #[arg(long, global = true)]
    window_n: Option<u32>,

    /// Override the window's length bound L.
    #[arg(long, global = true)]
    window_l: Option<usize>,

    /// What an indeterminate block verdict does to the exit code.
    #[arg(long, global = true, value_enum, default_value_t = BoundaryPolicy::Strict)]
    boundary_policy: BoundaryPolicy,

    /// Seed for generated corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryPolicy {
    Strict,
    Warn,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smooth a family: C ↦ C*, with smoothness verdicts for both.
    Smooth { input: PathBuf },
    /// Build the partial order inside a reflexive relation and verify it.
    Pouzet { input: PathBuf },
    /// Compute Q_x; with --y also check the sublemma and the bad array.
    Reduce {
        code: PathBuf,
        x: PathBuf,
        #[arg(long)]
        y: Option<PathBuf>,
        /// Answer R_x between carrier indices, written as `i,j`.
        #[arg(long = "query", value_parser = parse_pair)]
        queries: Vec<(usize, usize)>,
    },
    /// Block verdict for a family, plus array checks when given.
    Check {
        family: PathBuf,
        /// Array on the family (index or sequence valued).
        #[arg(long)]
        array: Option<PathBuf>,
        /// Relation for an index-valued array.
        #[arg(long)]
        relation: Option<PathBuf>,
        /// Codomain family for a sequence-valued array.
        #[arg(long)]
        codomain: Option<PathBuf>,
    },
    /// Run the randomized property corpus from --seed.
    Selftest {
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected `i,j`, got `{text}`"))?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(a)?, parse(b)?))
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub window_n: Option<u32>,
    pub window_l: Option<usize>,
    pub boundary_policy: BoundaryPolicy,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// The input's window with any command-line overrides applied.
    pub fn window(&self, from_input: Window) -> Result<Window, CliError> {
        if self.window_n.is_none() && self.window_l.is_none() {
            return Ok(from_input);
        }
        let w = Window::new(
            self.window_n.unwrap_or(from_input.n),
            self.window_l.unwrap_or(from_input.l),
        );
        if w.l < 1 || (w.n as usize) < w.l {
            return Err(CliError::Config(format!(
                "window needs N >= L >= 1, got N={} L={}",
                w.n, w.l
            )));
        }
        Ok(w)
    }
}

fn main() {
    let cli = Cli::parse();
    let config = RunConfig {
        window_n: cli.window_n,
        window_l: cli.window_l,
        boundary_policy: cli.boundary_policy,
        seed: cli.seed,
        out: cli.out,
    };
    let result = match cli.command {
        Command::Smooth { input } => cmd::smooth(&config, &input),
        Command::Pouzet { input } => cmd::pouzet(&config, &input),
        Command::Reduce {
            code,
            x,
            y,
            queries,
        } => cmd::reduce(&config, &code, &x, y.as_deref(), &queries),
        Command::Check {
            family,
            array,
            relation,
            codomain,
        } => cmd::check(
            &config,
            &family,
            array.as_deref(),
            relation.as_deref(),
            codomain.as_deref(),
        ),
        Command::Selftest { cases } => cmd::selftest(&config, cases),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
