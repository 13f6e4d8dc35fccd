//! `dqspec`: spectra, cospectral mates, enumeration and the verification
//! suite from the command line.

mod commands;
mod error;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "dqspec",
    version,
    about = "Exact spectral characterization of small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for enumeration-backed commands (1 = sequential).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Exhaustive enumeration cap (also DQSPEC_ENUM_CAP).
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    /// Cap on graphs built from family expressions (also DQSPEC_BUILD_CAP).
    #[arg(long, global = true)]
    pub build_cap: Option<usize>,

    /// Cap on searches that compute a spectrum per graph (also DQSPEC_SPECTRAL_CAP).
    #[arg(long, global = true)]
    pub spectral_cap: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Graph6,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certified spectrum of each graph (arguments, or graph6 lines on stdin).
    Spectrum {
        graphs: Vec<String>,
        #[arg(long, default_value = "Q")]
        kind: String,
    },
    /// Exact characteristic polynomial.
    Charpoly {
        graph: String,
        #[arg(long, default_value = "Q")]
        kind: String,
    },
    /// Cospectral mates among graphs of the same order and size.
    Mates {
        graphs: Vec<String>,
        #[arg(long, default_value = "Q")]
        kind: String,
    },
    /// Every isomorphism class passing the filter, in canonical order.
    Enumerate(FilterArgs),
    /// Number of isomorphism classes passing the filter.
    Count(FilterArgs),
    /// Run verifiers and print their reports.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Convert between graph6, sparse6 and adjacency lists.
    Convert {
        /// Input graph; read from stdin when absent.
        input: Option<String>,
        #[arg(long, value_enum, default_value = "adjacency")]
        to: Target,
        /// Relabel each graph by a random permutation drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Graph6,
    Sparse6,
    Adjacency,
}

#[derive(Args, Debug, Clone)]
pub struct FilterArgs {
    /// Order.
    #[arg(short = 'n', long)]
    pub order: usize,
    /// Exact size.
    #[arg(short = 'm', long, conflicts_with_all = ["min_size", "max_size"])]
    pub size: Option<usize>,
    #[arg(long)]
    pub min_size: Option<usize>,
    #[arg(long)]
    pub max_size: Option<usize>,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub bipartite: bool,
    #[arg(long)]
    pub tree: bool,
    #[arg(long)]
    pub unicyclic: bool,
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// Degree sequence, e.g. `3,2,2,1`.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<usize>>,
    /// Spectral predicates such as `gamma1 > 32/5` or `multQ(3) >= 2`.
    #[arg(long)]
    pub spectral: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyTarget {
    /// A closed-form id such as `DoubleStarQ(3,2)`, a family name for its grid, or `all`.
    ClosedForm { id: String },
    /// A lemma id or alias, or `all`.
    Lemma {
        id: String,
        #[arg(long)]
        max_order: Option<usize>,
    },
    Theorem {
        #[command(subcommand)]
        which: Theorem,
    },
    /// Search for the pair refuting the unconditional union claim.
    Counterexample,
    /// Every verifier of the suite.
    All {
        #[arg(long)]
        max_order: Option<usize>,
        /// Run only the named verifiers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Theorem {
    /// `(K_{n-a} - e) v aK1` for every admissible `a`.
    Join {
        #[arg(long)]
        n: usize,
    },
    /// Shapes of the Q-class of `G + K2 + rK1` over dense connected `G`.
    Structure {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// `K_n + K2 + rK1`.
    KnK2 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
    /// Double star and odd unicyclic unions.
    Unions {
        #[arg(long, default_value_t = 9)]
        max_order: usize,
    },
    Counterexample,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
