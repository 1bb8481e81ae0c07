use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "tenjoin", version, about = "Tensor joins of weighted hypergraphs and their spectra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a standard hypergraph in hgr form.
    Build(BuildArgs),
    /// Spectrum and characteristic polynomial of one matrix.
    Spectrum(SpectrumArgs),
    /// Tensor join of hgr inputs through one edge family.
    Join(JoinArgs),
    /// Join over a backbone hypergraph on the constituents.
    BackboneJoin(BackboneJoinArgs),
    /// Compare the A, L and normalized L characteristic polynomials of two inputs.
    Verify(VerifyArgs),
    /// Enumerate small hypergraphs and certify cospectral join families.
    Cospectral(CospectralArgs),
    /// Split a hypergraph into constituents and cross edges over a partition.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(subcommand)]
    pub shape: Shape,
}

#[derive(Debug, Subcommand)]
pub enum Shape {
    /// All subsets of size 2..=n, or all m-subsets with --uniform.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        uniform: Option<usize>,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// The graph cycle on n vertices.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Edgeless {
        #[arg(long)]
        n: usize,
    },
    /// Strong complete partite hypergraph on the given class sizes.
    Partite {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        uniform: Option<usize>,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Lexicographic product H[H2].
    Lexicographic {
        outer: PathBuf,
        inner: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Complement within the cardinalities present, or over all sizes with --total.
    Complement {
        input: PathBuf,
        #[arg(long)]
        total: bool,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Two copies g1(H), g2(H) joined by a positional family.
    TwoCopy {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "base")]
        g1: CopyArg,
        #[arg(long, value_enum, default_value = "base")]
        g2: CopyArg,
        /// aligned:R, identity, full, full-minus-aligned:R or full-minus-identity.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// k copies joined by mirror:L:R, join:L or vc:L:R.
    KCopy {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        op: String,
        #[command(flatten)]
        weights: WeightArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CopyArg {
    Base,
    Complement,
    Complete,
    Empty,
    TotalComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    Adj,
    Lap,
    Nlap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Full,
    Bspan,
    Uniform,
    Aligned,
    Identity,
    Backbone,
    Explicit,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    /// Join weights as c=w or default=w, comma separated or repeated.
    #[arg(long = "wc", value_delimiter = ',')]
    pub wc: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Cardinalities for bspan.
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<usize>,
    /// Edge size for uniform.
    #[arg(long)]
    pub m: Option<usize>,
    /// Block size for aligned.
    #[arg(long)]
    pub r: Option<usize>,
    /// Position hypergraph for the backbone family.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    /// Members for explicit, as "1,4;2,5" over the joined vertex ids.
    #[arg(long)]
    pub members: Option<String>,
    /// Lift the family size guard.
    #[arg(long)]
    pub allow_huge: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "adj")]
    pub matrix: MatrixArg,
    #[arg(long, value_enum, default_value = "direct")]
    pub method: MethodArg,
    /// Tolerance of the eigensolver and of the agreement check.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Class sizes of consecutive vertices for the closed form (singletons when absent).
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct JoinArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Class sizes; must match the inputs when given.
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<usize>,
    #[command(flatten)]
    pub weights: WeightArgs,
}

#[derive(Debug, Args)]
pub struct BackboneJoinArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Backbone hypergraph on the constituents 1..=k.
    #[arg(long)]
    pub backbone: PathBuf,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CospectralArgs {
    /// Vertex count (largest vertex count with --search).
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub uniform: Option<usize>,
    /// Edge sizes when not uniform.
    #[arg(long, value_delimiter = ',')]
    pub cards: Vec<usize>,
    /// Keep regular hypergraphs only (every degree unless --degree is given).
    #[arg(long)]
    pub regular: bool,
    #[arg(long)]
    pub degree: Option<usize>,
    /// Search n = m, m+1, ... up to --n and stop at the first scale with pairs.
    #[arg(long)]
    pub search: bool,
    /// Labeled hypergraphs visited per scale before giving up on it.
    #[arg(long, default_value_t = tenjoin::cospectral::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Directory for certificate files; certificates go to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    pub max_certificates: usize,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub input: PathBuf,
    /// Class sizes of consecutive vertices.
    #[arg(long, value_delimiter = ',', conflicts_with = "partition")]
    pub classes: Vec<usize>,
    /// Explicit partition as "1,2,3;4,5".
    #[arg(long)]
    pub partition: Option<String>,
}
