use clap::{Args, Parser, Subcommand, ValueEnum};
use std::ops::RangeInclusive;
use std::path::PathBuf;

const ABOUT: &str = "Census, excluded-minor and boundary-ratio tools for sparse paving matroids \
with at most k circuit-hyperplanes (P_k) and minors of spikes with at most k balanced \
Hamiltonian cycles (S_k).";

const GAMMA_NOTE: &str = "Excluded-minor counts (x) for both P_k and S_k come from restricted \
searches and are lower bounds: P_k counts only sparse paving excluded minors, S_k counts only \
the constructed spikes. Member counts for S_k are strata upper bounds. Every row carries its \
mode flags (exact, m-upper, x-lower); the tables say nothing about limits.";

#[derive(Parser)]
#[command(name = "fractal", version, about = ABOUT)]
#[command(
    after_help = "Worker threads: set FRACTAL_THREADS to a positive integer (default: all cores). \
Output is byte-identical for every thread count."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Basic operations on matroids given as JSON bases.
    #[command(subcommand)]
    Matroid(MatroidCmd),
    /// Sparse paving matroids with at most k circuit-hyperplanes.
    #[command(subcommand)]
    Sp(SpCmd),
    /// Spikes given by their balanced Hamiltonian cycles.
    #[command(subcommand)]
    Spike(SpikeCmd),
    /// Minors of spikes with at most k balanced Hamiltonian cycles.
    #[command(subcommand)]
    Sk(SkCmd),
    /// Boundary-ratio tables gamma = x / (m + x).
    #[command(subcommand, after_help = GAMMA_NOTE)]
    Gamma(GammaCmd),
    /// Least-squares log-log slope of a count series.
    Slope(SlopeArgs),
}

#[derive(Args)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum MatroidCmd {
    /// Check the basis axioms; prints n and rank.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
    /// Decide isomorphism; prints a witnessing map when one exists.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Delete and contract disjoint element sets (comma-separated, 0-based).
    Minor {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
        #[command(flatten)]
        output: Output,
    },
    Dual {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
pub enum SpCmd {
    /// Isomorphism classes per number of circuit-hyperplanes (CSV n,k,m,count).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Sparse paving excluded minors on n elements, one JSON family per line.
    Exminors {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
pub struct SpikeInput {
    /// Spike JSON file.
    #[arg(long, conflicts_with_all = ["t", "picks"])]
    pub file: Option<PathBuf>,
    /// Number of pairs.
    #[arg(long, requires = "picks")]
    pub t: Option<usize>,
    /// Balanced cycles as 0/1 strings, comma-separated; character i is 1 for b_i.
    #[arg(long, value_delimiter = ',', requires = "t")]
    pub picks: Option<Vec<String>>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Mode {
    /// Full when the spike has at most 14 elements, structural otherwise.
    Auto,
    Full,
    Structural,
}

#[derive(Subcommand)]
pub enum SpikeCmd {
    /// Print the spike's matroid as JSON bases.
    Build {
        #[command(flatten)]
        input: SpikeInput,
        #[command(flatten)]
        output: Output,
    },
    /// Exit 0 when the spike is an excluded minor for S_k, 1 otherwise.
    Verify {
        #[command(flatten)]
        input: SpikeInput,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
    },
}

#[derive(Subcommand)]
pub enum SkCmd {
    /// Exact class count (n <= 12), or per-stratum counts with --strata (even n).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        strata: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Constructed excluded minors on 2t elements, one per class, as spike JSON lines.
    Exminors {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
pub enum GammaCmd {
    /// Rows for P_k over a range of sizes, e.g. --n 6..14.
    Pk {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Rows for S_k on 2t elements over a range of t, e.g. --t 6..10.
    Sk {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_range)]
        t: RangeInclusive<usize>,
        /// Also emit the odd size 2t + 1 after each row.
        #[arg(long)]
        odd: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Series {
    /// Solution counts of the sparse paving cell equation for bound k, by n.
    Collar,
    /// Solution counts of the spike cell equation for bound k, by t.
    Bottom,
}

#[derive(Args)]
pub struct SlopeArgs {
    /// CSV with header `size,count`.
    #[arg(long, conflicts_with = "series", required_unless_present = "series")]
    pub file: Option<PathBuf>,
    /// Built-in series instead of a file.
    #[arg(long, value_enum, requires = "k")]
    pub series: Option<Series>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Sizes to fit, e.g. 60..300.
    #[arg(long, value_parser = parse_range)]
    pub window: RangeInclusive<usize>,
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected a range like 6..14, got {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (
            a.parse().map_err(|_| bad())?,
            b.trim_start_matches('=').parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}
