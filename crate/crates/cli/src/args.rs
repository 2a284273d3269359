use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Deterministic number/phase toolkit: arithmetic functions, thermal
/// expectation values, operator algebra checks, locking dynamics, and
/// 1/f-type spectra, emitted as CSV/JSON data files.
///
/// Identical invocations produce byte-identical outputs. CSV files carry a
/// `#`-prefixed metadata header; floats are printed with 17 significant
/// digits. The default output directory is `$CYCLO_OUT_DIR` (falling back
/// to the working directory).
#[derive(Debug, Parser)]
#[command(name = "cyclo", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a single arithmetic function and print JSON.
    Numfun(NumfunArgs),
    /// Carmichael cumulative-sum series, its periodogram, and the fitted
    /// log-log slope (two CSV files plus one JSON file).
    CarmichaelSpectrum(CarmichaelSpectrumArgs),
    /// Thermal expectation values on a (q, beta) grid as CSV.
    KmsSurface(KmsSurfaceArgs),
    /// Cross-check closed-form expectation values against the
    /// Dirichlet-series oracle and the temperature asymptotes (JSON).
    KmsCheck(KmsCheckArgs),
    /// Winding numbers over an Omega grid with plateau labels (CSV).
    Staircase(StaircaseArgs),
    /// Integrate the phase equation; trajectory CSV plus a JSON summary.
    Adler(AdlerArgs),
    /// Run the operator-algebra suite, or dump one operator/state as CSV.
    OperatorsVerify(OperatorsVerifyArgs),
    /// Circle map with Mangoldt-modulated coupling: beat series CSV,
    /// optional beat periodogram, and a JSON winding summary.
    MangoldtMap(MangoldtMapArgs),
    /// Run a verification suite and print a JSON report; exits nonzero if
    /// any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NumFn {
    Totient,
    Carmichael,
    Moebius,
    Mangoldt,
    Factorize,
    MultOrder,
    PrimitiveRoot,
    Ramanujan,
    All,
}

#[derive(Debug, Args)]
pub struct NumfunArgs {
    /// Which function to evaluate.
    #[arg(long = "fn", value_enum)]
    pub function: NumFn,
    /// Main argument (the modulus for mult-order/primitive-root).
    #[arg(long)]
    pub n: u64,
    /// Base residue for mult-order and primitive-root.
    #[arg(long)]
    pub a: Option<u64>,
    /// Denominator q for ramanujan (c_q(n)).
    #[arg(long)]
    pub q: Option<u64>,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CarmichaelSpectrumArgs {
    /// Series length.
    #[arg(long, default_value_t = 16_384)]
    pub t_max: u64,
    /// Normalization exponent for the cumulative sum.
    #[arg(long, default_value_t = 1.90)]
    pub sigma: f64,
    /// Lower edge of the slope-fit band (cycles/sample).
    #[arg(long, default_value_t = 0.0)]
    pub f_lo: f64,
    /// Upper edge of the slope-fit band (cycles/sample).
    #[arg(long, default_value_t = 0.5)]
    pub f_hi: f64,
    /// Directory for the three output files.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KmsSurfaceArgs {
    #[arg(long, default_value_t = 40)]
    pub q_max: u64,
    #[arg(long, default_value_t = 0.5)]
    pub beta_min: f64,
    #[arg(long, default_value_t = 1.5)]
    pub beta_max: f64,
    #[arg(long, default_value_t = 41)]
    pub beta_steps: usize,
    /// Blank-line-separated blocks per q (gnuplot splot layout).
    #[arg(long)]
    pub gnuplot: bool,
    /// Output CSV path (default: kms_surface.csv in the output directory).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KmsCheckArgs {
    #[arg(long, default_value_t = 12)]
    pub q_max: u64,
    /// Series length for the Dirichlet oracle.
    #[arg(long, default_value_t = 1_000_000)]
    pub n_terms: u64,
    /// Write JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StaircaseArgs {
    /// Coupling coefficient (homeomorphism regime c < 1).
    #[arg(long, default_value_t = 0.8)]
    pub c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub omega_lo: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega_hi: f64,
    #[arg(long, default_value_t = 1001)]
    pub points: usize,
    #[arg(long, default_value_t = 4_000)]
    pub n_iter: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AdlerArgs {
    /// Interaction strength K (rad/s).
    #[arg(long)]
    pub coupling: f64,
    /// Detuning (rad/s).
    #[arg(long)]
    pub detuning: f64,
    #[arg(long, default_value_t = 0.1)]
    pub phi0: f64,
    #[arg(long, default_value_t = 500.0)]
    pub t_end: f64,
    #[arg(long, default_value_t = 0.002)]
    pub dt: f64,
    /// Trajectory CSV path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpTarget {
    Number,
    Lowering,
    PhaseOperator,
    PhaseState,
    Mu,
    Clock,
    OrderState,
    Galois,
    MultShift,
    PositiveClock,
}

#[derive(Debug, Args)]
pub struct OperatorsVerifyArgs {
    /// Dump this operator/state as CSV (row, col, re, im) instead of
    /// running the suite.
    #[arg(long, value_enum)]
    pub dump: Option<DumpTarget>,
    /// Modulus / space dimension for modular operators.
    #[arg(long, default_value_t = 8)]
    pub q: u64,
    /// Multiplier residue (mu, order-state, mult-shift).
    #[arg(long, default_value_t = 3)]
    pub a: u64,
    /// Clock/phase index.
    #[arg(long, default_value_t = 1)]
    pub p: i64,
    /// Eigenstate index for order-state.
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    /// Galois group element index.
    #[arg(long, default_value_t = 1)]
    pub t: u64,
    /// Reference angle for phase states/operators.
    #[arg(long, default_value_t = 0.0)]
    pub theta0: f64,
    /// Dimension for non-modular operators.
    #[arg(long, default_value_t = 16)]
    pub dim: usize,
    /// Output path (CSV dump or JSON report).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MangoldtMapArgs {
    #[arg(long, default_value_t = 0.5)]
    pub omega: f64,
    /// Baseline coupling coefficient.
    #[arg(long, default_value_t = 0.5)]
    pub c: f64,
    /// Modulation depth; 0 reproduces the unmodulated map bit-exactly.
    #[arg(long, default_value_t = 0.5)]
    pub kappa: f64,
    #[arg(long, default_value_t = 16_384)]
    pub n_iter: u64,
    /// Beat-series CSV path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the beat-series periodogram to this CSV path.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Operators,
    Kms,
    Dynamics,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
