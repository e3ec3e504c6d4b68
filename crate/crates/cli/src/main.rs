//! `slee`: command-line front end for the SLEE toolkit.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! parse errors.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "slee", version, about = "Signless Laplacian Estrada index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// graph6 file, inline graph6 string, or `-` for stdin (the default)
    #[arg(short = 'i', long)]
    input: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// EE, LEE, SLEE, the series SLEE and the Q spectrum of each input graph
    Compute {
        #[command(flatten)]
        io: InputArgs,
        /// Jacobi off-diagonal threshold
        #[arg(long)]
        tol: Option<f64>,
        /// truncation bound for the moment series
        #[arg(long)]
        series_tol: Option<f64>,
    },
    /// Exact spectral moments T_0..T_kmax
    Moments {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
    },
    /// Semi-edge walk counts, optionally between two vertices
    Walks {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, requires = "y")]
        x: Option<usize>,
        #[arg(long, requires = "x")]
        y: Option<usize>,
        /// list the walks themselves (needs --x and --y)
        #[arg(long, requires = "x")]
        list: bool,
    },
    /// Generate extremal family members as graph6
    Family {
        #[arg(value_enum)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
    /// Exhaustive SLEE maximisation over a class of connected graphs
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "connected")]
        filter: FilterKind,
        /// diameter or cut-vertex count for the filter
        #[arg(long)]
        value: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        /// graph6 of the expected maximiser
        #[arg(long)]
        predicted: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check one of the extremal results or supporting lemmas
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        params: VerifyParams,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    H,
    H1,
    G,
    Path,
    Complete,
    CompleteMinusEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterKind {
    Connected,
    Diameter,
    Cut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    TheoremDiameter,
    TheoremCut,
    LemmaEdgeAdd,
    LemmaShift,
    LemmaRelocate,
    DominancePreserve,
    HDescent,
    NeighborBound,
    MomentWalk,
}

#[derive(Debug, Args)]
struct VerifyParams {
    /// graph6 file, inline graph6 string, or `-` for stdin
    #[arg(short = 'i', long)]
    input: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// comma-separated vertices receiving the shifted edges
    #[arg(long, value_delimiter = ',')]
    w: Vec<usize>,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unparsable input.
    Usage(String),
    /// A check ran and did not hold; the report is already on stdout.
    Verification,
    Runtime(String),
}

impl From<slee_core::Error> for Failure {
    fn from(e: slee_core::Error) -> Self {
        match e {
            slee_core::Error::NoConvergence { .. } => Failure::Runtime(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("slee: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("slee: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("slee: {msg}");
            ExitCode::from(2)
        }
    }
}
