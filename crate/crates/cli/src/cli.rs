use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gsm_core::measurement::DEFAULT_TOLERANCE;

#[derive(Parser, Debug)]
#[command(
    name = "gsm",
    version,
    about = "Construct, verify and apply generalized symmetric measurements"
)]
pub struct Cli {
    /// Tolerance for every numerical check.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a measurement from a partitioned operator basis.
    Construct(ConstructArgs),
    /// Check the symmetry conditions, completeness and class of a measurement file.
    Verify(FileArgs),
    /// Certify the conical 2-design property.
    Certify(FileArgs),
    /// Coincidence and entropic bounds, optionally evaluated on states.
    Bounds(BoundsArgs),
    /// Screen bipartite states with the correlation-matrix criteria.
    Detect(DetectArgs),
}

#[derive(Args, Debug)]
#[command(group(
    ArgGroup::new("strength")
        .required(true)
        .args(["t", "x", "t_max", "t_min", "t_star", "r", "projective"])
))]
pub struct ConstructArgs {
    /// Hilbert-space dimension.
    #[arg(short = 'd', long = "dim")]
    pub d: usize,

    /// POVM sizes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub blocks: Vec<usize>,

    /// `unprimed` or `primed`, optionally with `:+` or `:-`. One value for
    /// all blocks or one per block.
    #[arg(long, value_delimiter = ',')]
    pub variant: Vec<String>,

    /// Strength per block (or one for all); the sign selects the family.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub t: Vec<f64>,

    /// Purity `Tr E²` per block (or one for all); needs a signed variant.
    #[arg(long, value_delimiter = ',')]
    pub x: Vec<f64>,

    /// Largest positive admissible t.
    #[arg(long)]
    pub t_max: bool,

    /// Most negative admissible t.
    #[arg(long)]
    pub t_min: bool,

    /// `±t*`, the smaller of the two range ends in magnitude.
    #[arg(long)]
    pub t_star: bool,

    /// Common `r = x − y` for every block.
    #[arg(long)]
    pub r: Option<f64>,

    /// Largest admissible purity on every block, choosing the variant.
    #[arg(long, conflicts_with = "variant")]
    pub projective: bool,

    /// Rotate the Gell-Mann basis by a random orthogonal matrix.
    #[arg(long, conflicts_with = "basis")]
    pub seed: Option<u64>,

    /// Basis file; operators are taken in order.
    #[arg(long)]
    pub basis: Option<PathBuf>,

    /// Output path (default stdout).
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FileArgs {
    /// Measurement file, or `-` for stdin.
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Measurement file, or `-` for stdin.
    pub file: PathBuf,

    /// States to evaluate (JSON array, single object or one per line).
    #[arg(long)]
    pub states: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SampleKind {
    /// The maximally entangled state, repeated.
    Bell,
    /// Mixtures of up to ten Haar-random product states.
    Separable,
    /// Random mixed states of random rank.
    Random,
}

#[derive(Args, Debug)]
pub struct DetectArgs {
    /// Measurement on the first subsystem.
    #[arg(long = "a")]
    pub a: PathBuf,

    /// Measurement on the second subsystem.
    #[arg(long = "b")]
    pub b: PathBuf,

    /// State batch, or `-` for stdin.
    #[arg(long, conflicts_with = "sample", required_unless_present = "sample")]
    pub states: Option<PathBuf>,

    /// Number of states to sample instead of reading a batch.
    #[arg(long, requires = "kind")]
    pub sample: Option<usize>,

    #[arg(long, value_enum, requires = "sample")]
    pub kind: Option<SampleKind>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
