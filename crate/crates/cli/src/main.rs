mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use braidtwist::BraidError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::Output;

#[derive(Parser, Debug)]
#[command(name = "braidtwist", version, about = "Braid group computations with exact output")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Writhe, permutation, closure components and Garside data of a word.
    Eval(WordArgs),
    /// Dehornoy comparison of two words: LT, EQ or GT.
    Compare(CompareArgs),
    /// Dehornoy floor: the m with Δ^{2m} ⪯ β ≺ Δ^{2m+2}.
    Floor(WordArgs),
    /// Certified interval for the fractional Dehn twist coefficient.
    Fdtc(FdtcArgs),
    /// Intervals for k = 1..kmax.
    Convergence(ConvergenceArgs),
    /// Full-twist decomposition of a Dehornoy positive braid.
    Decompose(WordArgs),
    /// Search random pairs for a large defect gap.
    Defect(DefectArgs),
    /// Slice-Bennequin checks on a quasipositive factorization.
    Qp(QpArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add wall-clock time to the report (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct WordArgs {
    /// Strand count.
    #[arg(long)]
    pub n: usize,
    /// Word as whitespace-separated signed generator indices, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long, allow_hyphen_values = true)]
    pub word2: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct FdtcArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Power to evaluate the floor at.
    #[arg(long, default_value_t = 32, conflicts_with = "tol")]
    pub k: u64,
    /// Target interval width as a rational "p/q"; overrides --k.
    #[arg(long)]
    pub tol: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ConvergenceArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[arg(long)]
    pub kmax: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct DefectArgs {
    #[arg(long)]
    pub n: usize,
    /// Number of random pairs.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Maximum length of each random word.
    #[arg(long, default_value_t = 16)]
    pub len: usize,
    #[arg(long, default_value_t = 32)]
    pub k: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct QpArgs {
    #[arg(long)]
    pub n: usize,
    /// Factors `w:i` separated by ';', each standing for w a_i w^{-1}.
    #[arg(long, allow_hyphen_values = true)]
    pub factors: String,
    #[arg(long, default_value_t = 32)]
    pub k: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug)]
pub enum CliError {
    Braid(BraidError),
    Usage(String),
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        CliError::Braid(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Braid(e) => match e {
                BraidError::MalformedToken(_) => "malformed_token",
                BraidError::IndexOutOfRange { .. } => "index_out_of_range",
                BraidError::StrandMismatch { .. } => "strand_mismatch",
                BraidError::WordTooLong { .. } => "word_too_long",
                BraidError::StepBudgetExceeded { .. } => "step_budget_exceeded",
                BraidError::NotSigma1Positive => "not_sigma1_positive",
                BraidError::NotSigma1PositiveWord => "not_sigma1_positive_word",
                BraidError::BadStrandCount { .. } => "bad_strand_count",
                BraidError::EmptyFactorization => "empty_factorization",
                BraidError::MalformedFactorization(_) => "malformed_factorization",
                BraidError::InvalidArgument(_) => "invalid_argument",
                BraidError::Overflow(_) => "overflow",
                BraidError::Inconsistent(_) => "inconsistent",
            },
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Braid(
                BraidError::WordTooLong { .. }
                | BraidError::StepBudgetExceeded { .. }
                | BraidError::Overflow(_)
                | BraidError::Inconsistent(_),
            ) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Braid(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
        }
    }
}

fn report_error(err: &CliError) -> ExitCode {
    let body = json!({
        "error": {
            "kind": err.kind(),
            "message": err.message(),
            "exit_code": err.exit_code(),
        }
    });
    eprintln!("{body}");
    ExitCode::from(err.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report_error(&CliError::Usage(e.to_string().trim().to_string())),
    };
    let start = Instant::now();
    let common = commands::common(&cli.command).clone();
    let output = match commands::run(&cli.command) {
        Ok(out) => out,
        Err(e) => return report_error(&e),
    };
    let elapsed = common.timing.then(|| start.elapsed().as_millis());
    match write_output(&output, common.format, elapsed) {
        Ok(()) => ExitCode::from(output.exit_code),
        Err(e) => report_error(&e),
    }
}

fn write_output(output: &Output, format: Format, elapsed_ms: Option<u128>) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Usage(format!("write failed: {e}"));
    let mut stdout = std::io::stdout().lock();
    match format {
        Format::Json => {
            let mut report = output.report.clone();
            if let Some(ms) = elapsed_ms {
                report["elapsed_ms"] = json!(ms);
            }
            let text = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Usage(format!("serialization failed: {e}")))?;
            writeln!(stdout, "{text}").map_err(io)
        }
        Format::Csv => {
            let rows = output.csv_rows.as_ref().ok_or_else(|| {
                CliError::Usage("csv output is only available for fdtc and convergence".into())
            })?;
            let mut w = csv::Writer::from_writer(stdout);
            w.write_record(["k", "floor", "lo", "hi"])
                .map_err(|e| CliError::Usage(e.to_string()))?;
            for row in rows {
                w.write_record(row).map_err(|e| CliError::Usage(e.to_string()))?;
            }
            w.flush().map_err(io)
        }
    }
}
