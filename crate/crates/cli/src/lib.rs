//! Command-line front end: bound evaluation, constructions, predicate checks,
//! searches and grid verification, with plain or JSON output.

pub mod grid;

mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use hemibundle::bounds::Params;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hemibundle::Error),
    #[error(transparent)]
    Grid(#[from] grid::GridError),
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
    #[error("encoding JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use hemibundle::Error as E;
        match self {
            CliError::Core(E::Infeasible(_) | E::IsoLimit { .. }) => EXIT_INFEASIBLE,
            CliError::Core(E::Timeout { .. }) => EXIT_TIMEOUT,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hemibundle", version, about = "Exact bounds, constructions and search oracles for cross-intersecting families")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Leave timing fields out so identical runs print identical output.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Search worker threads.
    #[arg(long, global = true, env = "HEMIBUNDLE_THREADS", default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<i64>,
}

impl ParamArgs {
    pub fn params(&self) -> Params {
        Params { n: self.n, k: self.k, t: self.t, r: self.r, s: self.s, l: self.l, d: self.d }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a closed-form bound.
    Bound {
        /// One of ekr, hm, ft, ft_nontrivial, f16, w23, main1, f24, f24_i,
        /// f24_ii, main3, main3_i, main3_ii, diversity, katona_even,
        /// katona_odd, main5_even, main5_odd, nonkatona_even, nonkatona_odd.
        which: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Evaluate the formula even outside the theorem's parameter range.
        #[arg(long)]
        unchecked: bool,
    },
    /// Build an extremal family and write it in the family file format.
    Construct {
        tag: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Distinguished element of the odd Katona family.
        #[arg(long)]
        y: Option<i64>,
        /// Family file to write; standard output when absent.
        #[arg(long)]
        out: Option<String>,
        /// File for the partner family of a pair construction.
        #[arg(long)]
        partner_out: Option<String>,
    },
    /// Evaluate a predicate on a family file; exit 1 when it fails.
    Check {
        /// intersecting, t-intersecting, s-union, shifted, diversity, cross or layers.
        #[arg(long)]
        pred: String,
        #[arg(long)]
        family: String,
        /// Second family for `cross`.
        #[arg(long)]
        other: Option<String>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Solve an optimization problem exactly and compare with its bound.
    Search {
        /// hemibundled, cross_pair, capped, diversity, s_union or conditioned.
        kind: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Cancel the search after this many seconds (exit 4).
        #[arg(long)]
        max_seconds: Option<u64>,
        /// List every maximizer, not only class representatives.
        #[arg(long)]
        show_maximizers: bool,
    },
    /// Sweep a parameter grid, searching each point and comparing with the theorem.
    Verify {
        /// f16, w23, main1, f24, main3, diversity, katona or main5.
        theorem: String,
        /// Grid such as `k=2;t=0,1;n=2k+t..2k+t+2`.
        #[arg(long)]
        grid: String,
        #[arg(long, default_value = "auto")]
        engine: String,
        /// Per-row time budget in seconds.
        #[arg(long)]
        max_seconds: Option<u64>,
    },
}

/// Output sinks and the global flags every command sees.
pub struct Ctx<'a> {
    pub out: &'a mut dyn Write,
    pub json: bool,
    pub timing: bool,
    pub threads: usize,
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { out, json: cli.json, timing: !cli.no_timing, threads: cli.threads.max(1) };
    match commands::dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
