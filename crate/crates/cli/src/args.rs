use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdl_core::Rational;

#[derive(Parser, Debug)]
#[command(
    name = "qdl",
    version,
    about = "Exact t-norm algebra and finite quantale-enriched category checks"
)]
pub struct Cli {
    /// Print flattened `path = value` lines instead of JSON.
    #[arg(long, global = true)]
    pub plain: bool,

    /// Cap on enumerated candidates (weights, subsets, maps).
    #[arg(long, global = true, env = "QDL_CAP")]
    pub cap: Option<usize>,

    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Continuous t-norms given as ordinal sums.
    #[command(subcommand)]
    Tnorm(TnormCmd),
    /// The continuity equation on ([0,1], d_L).
    #[command(subcommand)]
    Interval(IntervalCmd),
    /// Finite quantales.
    #[command(subcommand)]
    Quantale(QuantaleCmd),
    /// Finite Q-categories.
    #[command(subcommand)]
    Qcat(QcatCmd),
    /// Structural checks on a Q-category. Exit 0 if true, 1 if false, 2 on error.
    Check(CheckArgs),
    /// Run every case of a corpus manifest.
    Corpus { path: PathBuf },
}

#[derive(Args, Debug)]
pub struct SpecArg {
    /// t-norm JSON file.
    #[arg(long)]
    pub spec: PathBuf,
}

#[derive(Args, Debug)]
pub struct XyArgs {
    #[command(flatten)]
    pub spec: SpecArg,
    #[arg(long)]
    pub x: Rational,
    #[arg(long)]
    pub y: Rational,
}

#[derive(Subcommand, Debug)]
pub enum TnormCmd {
    Eval(XyArgs),
    Residuum(XyArgs),
    Classify(SpecArg),
    /// Discontinuity witness for an offending summand (the first one by default).
    Witness {
        #[command(flatten)]
        spec: SpecArg,
        /// Lower bound of the summand to use.
        #[arg(long)]
        lo: Option<Rational>,
    },
    Scan {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value = "1/64")]
        step: Rational,
        #[arg(long, default_value = "1/8")]
        tol: Rational,
    },
    Idempotents(SpecArg),
}

#[derive(Args, Debug)]
pub struct CxArgs {
    #[command(flatten)]
    pub spec: SpecArg,
    #[arg(long)]
    pub c: Rational,
    #[arg(long)]
    pub x: Rational,
}

#[derive(Subcommand, Debug)]
pub enum IntervalCmd {
    /// Value of the weight ⋁_{r<c} y(r) at x.
    Phi(CxArgs),
    /// x → sup φ_c against ⋀_{y≪x} φ_c(y). Exit 1 on a strict gap.
    Check(CxArgs),
    /// Evaluate the equation on every summand with positive lower bound. Exit 1 on a gap.
    Counterexample {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
}

#[derive(Args, Debug)]
pub struct QuantaleFile {
    /// Quantale JSON file.
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum StandardKind {
    Boolean,
    GodelChain,
    LukasiewiczChain,
}

#[derive(Subcommand, Debug)]
pub enum QuantaleCmd {
    /// List violated axioms. Exit 1 if there are any.
    Validate(QuantaleFile),
    Residuum {
        #[command(flatten)]
        file: QuantaleFile,
        #[arg(long)]
        p: String,
        #[arg(long)]
        r: String,
    },
    /// Close a set of points under a t-norm and print the quantale.
    FromTnorm {
        #[command(flatten)]
        spec: SpecArg,
        /// Comma-separated rationals, including 0 and 1.
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<Rational>,
        #[arg(long, default_value_t = qdl_core::quantale::DEFAULT_CLOSURE_CAP)]
        closure_cap: usize,
    },
    Standard {
        #[arg(value_enum)]
        kind: StandardKind,
        /// Number of chain points.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct CatFile {
    /// Q-category JSON file.
    #[arg(long)]
    pub cat: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum QcatCmd {
    /// Check the category laws and report the underlying order. Exit 1 on a violation.
    Validate(CatFile),
    /// Print PA (or P†A with --co) as a Q-category file.
    Presheaf {
        #[command(flatten)]
        cat: CatFile,
        #[arg(long)]
        co: bool,
    },
    /// Supremum of a weight (infimum of a coweight with --co).
    Sup {
        #[command(flatten)]
        cat: CatFile,
        /// Comma-separated quantale labels, one per object.
        #[arg(long, value_delimiter = ',', required = true)]
        weight: Vec<String>,
        #[arg(long)]
        co: bool,
    },
    /// Tensor p ⊗ x (cotensor p ⊸ x with --co).
    Tensor {
        #[command(flatten)]
        cat: CatFile,
        #[arg(long)]
        p: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        co: bool,
    },
    /// Check f ⊣ g, or search a left adjoint of g when --f is omitted.
    Adjoint {
        /// Category A.
        #[command(flatten)]
        cat: CatFile,
        /// Category B (defaults to A).
        #[arg(long)]
        target: Option<PathBuf>,
        /// Images of A's objects in B, comma-separated.
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<String>>,
        /// Images of B's objects in A, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        g: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Cocomplete,
    Complete,
    Cd,
    Cocd,
    Continuous,
    LambdaGamma,
    Inclusion,
    CotensorScott,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub which: CheckKind,
    #[command(flatten)]
    pub cat: CatFile,
    /// Also run the brute-force arm and require agreement.
    #[arg(long)]
    pub oracle: bool,
}
