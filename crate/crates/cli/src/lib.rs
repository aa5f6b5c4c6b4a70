//! Command-line front end for `invseq`.

pub mod checks;
pub mod commands;
pub mod guard;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invseq::Pattern;

pub use report::{Format, RunReport};

#[derive(Debug, Parser)]
#[command(name = "invseq", version, about = "Pattern avoidance in inversion sequences")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format of the result table.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, env = "INVSEQ_THREADS", global = true)]
    pub threads: Option<usize>,

    /// Run even when the estimated search size is large.
    #[arg(long, global = true)]
    pub allow_long: bool,

    /// Enumeration order. Only lexicographic order is supported.
    #[arg(long, default_value = "lex", global = true)]
    pub seed_order: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count avoiders of a pattern in I_n or I_S.
    Count {
        #[arg(long)]
        pattern: Pattern,
        /// Length of the inversion sequences.
        #[arg(long, conflicts_with = "set", required_unless_present = "set")]
        n: Option<usize>,
        /// Bound set S as comma-separated increasing positive integers.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<u32>>,
        /// Emit |I_m(p)| for every m = 1..n.
        #[arg(long, requires = "n")]
        vector: bool,
    },
    /// Group all canonical patterns of a length by their count vectors.
    Classify {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Run a named verification suite; `check list` shows them all.
    Check {
        name: String,
        /// Size parameter of the suite (see `check list` for defaults).
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Apply the 3210 -> 3201 map (or its inverse) to one sequence.
    Bijection {
        /// Inversion sequence, comma-separated or as a digit string.
        #[arg(long)]
        seq: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Count increasing trees with bounded branching.
    Trees {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nmax: usize,
        /// Leave the root's branching unbounded.
        #[arg(long)]
        root_unbounded: bool,
        /// Also count by brute force up to this many vertices.
        #[arg(long, default_value_t = 7)]
        exhaustive_max: usize,
    },
    /// Coefficients of T_k, R_k = exp(T_k - 1), or c_(m,k).
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Compare a computed sequence with a local OEIS b-file.
    OeisCompare {
        /// `inv-<pattern>` (n = 1, 2, ...), `trees-<k>` or `rtrees-<k>` (n = 0, 1, ...).
        #[arg(long)]
        seq: String,
        #[arg(long)]
        bfile: std::path::PathBuf,
        /// b-file index of the first computed term (default: its n).
        #[arg(long, allow_negative_numbers = true)]
        offset: Option<i64>,
        /// Number of terms to compute.
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// T_k: increasing trees with at most k children per vertex.
    T,
    /// R_k = exp(T_k - 1).
    R,
    /// The coefficients c_(m,k).
    C,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] invseq::Error),
}

impl From<String> for CliError {
    fn from(s: String) -> Self {
        CliError::Usage(s)
    }
}

pub fn run(cli: &Cli, command_line: String) -> Result<RunReport, CliError> {
    if !matches!(cli.global.seed_order.as_str(), "lex" | "lexicographic") {
        return Err(CliError::Usage(format!(
            "unsupported --seed-order {:?}: enumeration is lexicographic only",
            cli.global.seed_order
        )));
    }
    let start = std::time::Instant::now();
    let mut report = commands::dispatch(&cli.command, cli.global.allow_long)?;
    report.command = command_line;
    if let Some(t) = cli.global.threads {
        report.param("threads", t);
    }
    report.duration = start.elapsed();
    Ok(report)
}
