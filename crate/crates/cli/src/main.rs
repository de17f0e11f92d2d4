//! `hyperqueens` — inspect the d-dimensional queens model from the shell.
//!
//! Exit codes: 0 success, 1 negative decision (no witness / predicate
//! false), 2 invalid arguments, 3 resource cap or node budget exhausted
//! before optimality. The report goes to stdout; diagnostics to stderr.

mod report;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use hyperqueens::{BoardSpec, Error, Position, DEFAULT_CELL_CAP};

use report::Format;

#[derive(Parser)]
#[command(name = "hyperqueens", version, about = "Queens on d-dimensional boards: geometry, domination, independence")]
struct Cli {
    /// Refuse boards with more than this many cells
    #[arg(long, global = true, default_value_t = DEFAULT_CELL_CAP)]
    max_cells: u64,

    /// Report format on stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count attack lines per dimension
    Lines {
        #[command(flatten)]
        dims: DimSelect,
    },
    /// Test whether one cell attacks another, or list a cell's attacked set
    Attack {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        dim: u32,
        /// Cell coordinates "c1,c2,...,cd"; once for the attacked set of
        /// that cell, twice for the pairwise predicate
        #[arg(long = "pos", required = true)]
        pos: Vec<Position>,
    },
    /// Tabulate the analytic bounds and line counts over ranges
    Bound {
        #[command(flatten)]
        sizes: SizeSelect,
        #[command(flatten)]
        dims: DimSelect,
    },
    /// Exact minimum number of dominating queens
    Dominate {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        dim: u32,
        /// Stop after this many branching-node expansions
        #[arg(long)]
        node_budget: Option<u64>,
        /// Memoize exhausted states up to board symmetry
        #[arg(long)]
        symmetry: bool,
    },
    /// Find or count pairwise non-attacking placements
    Independent {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        dim: u32,
        /// Number of queens to place
        #[arg(long)]
        queens: u64,
        /// Count all placements instead of finding one witness
        #[arg(long)]
        count: bool,
    },
    /// Insufficiency threshold: when n^k queens provably cannot dominate
    Insufficiency {
        #[arg(long)]
        dim: u32,
        /// The exponent k in "n^k queens"
        #[arg(long)]
        exponent: u32,
        /// Check this specific board size; omit to find the smallest
        /// insufficient size
        #[arg(long)]
        size: Option<u64>,
    },
    /// Solve a range of boards and compare gamma against the analytic
    /// bounds
    Audit {
        #[command(flatten)]
        sizes: SizeSelect,
        #[command(flatten)]
        dims: DimSelect,
        /// Per-instance cap on branching-node expansions
        #[arg(long)]
        node_budget: Option<u64>,
        /// Memoize exhausted states up to board symmetry
        #[arg(long)]
        symmetry: bool,
    },
}

/// `--dim D` or `--dim-range A..B` (inclusive).
#[derive(Args)]
#[group(required = true, multiple = false)]
struct DimSelect {
    #[arg(long)]
    dim: Option<u32>,
    #[arg(long, value_name = "A..B")]
    dim_range: Option<InclusiveRange>,
}

/// `--size N` or `--size-range A..B` (inclusive).
#[derive(Args)]
#[group(required = true, multiple = false)]
struct SizeSelect {
    #[arg(long)]
    size: Option<u32>,
    #[arg(long, value_name = "A..B")]
    size_range: Option<InclusiveRange>,
}

#[derive(Debug, Clone, Copy)]
struct InclusiveRange {
    lo: u32,
    hi: u32,
}

impl InclusiveRange {
    fn iter(self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

impl FromStr for InclusiveRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
        let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?} (start exceeds end)"));
        }
        Ok(InclusiveRange { lo, hi })
    }
}

impl DimSelect {
    fn range(&self) -> InclusiveRange {
        match (self.dim, self.dim_range) {
            (Some(d), None) => InclusiveRange { lo: d, hi: d },
            (None, Some(r)) => r,
            _ => unreachable!("clap group enforces exactly one"),
        }
    }
}

impl SizeSelect {
    fn range(&self) -> InclusiveRange {
        match (self.size, self.size_range) {
            (Some(n), None) => InclusiveRange { lo: n, hi: n },
            (None, Some(r)) => r,
            _ => unreachable!("clap group enforces exactly one"),
        }
    }
}

/// A command failure carrying the exit code to report.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) => 2,
            // Width and cap limits are both resource limits.
            Error::Overflow(_) | Error::CellCapExceeded { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Report text (already newline-terminated) plus the process exit code.
type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let max_cells = cli.max_cells;

    let outcome = match cli.command {
        Command::Lines { dims } => report::lines(dims.range().iter(), format),
        Command::Attack { size, dim, pos } => {
            report::attack(board(dim, size, max_cells), &pos, format)
        }
        Command::Bound { sizes, dims } => {
            report::bound_table(sizes.range().iter(), dims.range().iter(), format)
        }
        Command::Dominate {
            size,
            dim,
            node_budget,
            symmetry,
        } => report::dominate(board(dim, size, max_cells), node_budget, symmetry, format),
        Command::Independent {
            size,
            dim,
            queens,
            count,
        } => report::independent(board(dim, size, max_cells), queens, count, format),
        Command::Insufficiency {
            dim,
            exponent,
            size,
        } => report::insufficiency(dim, exponent, size, format),
        Command::Audit {
            sizes,
            dims,
            node_budget,
            symmetry,
        } => report::audit(
            sizes.range().iter(),
            dims.range().iter(),
            node_budget,
            symmetry,
            max_cells,
            format,
        ),
    };

    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}

fn board(dim: u32, size: u32, max_cells: u64) -> Result<BoardSpec, Failure> {
    Ok(BoardSpec::with_cell_cap(dim, size, max_cells)?)
}
