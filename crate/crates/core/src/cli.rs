//! Command-line front end. The `triangles` binary is a thin wrapper around
//! [`run`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::bench::{count_ops, time_compare};
use crate::error::Error;
use crate::family::FamilySpec;
use crate::render;
use crate::series::rational_series;
use crate::triangle::{extract_rectangle, fill_rectangle_fast};
use crate::verify::{explore_general, verify_family, LeadingPolicy};

pub const EXIT_OK: i32 = 0;
/// The command ran but its check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Bad flags or inputs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "triangles", version, about = "Triangles embedded in Taylor-series families of recursive sequences")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the terms of one family member.
    Gen(GenArgs),
    /// Print the rectangle of the order-k(r) member.
    Rect(RectArgs),
    /// Check every theorem clause for members r = 1..r-max.
    Verify(VerifyArgs),
    /// Compare the G and T recursions.
    Bench(BenchArgs),
    /// Lay out the rectangle of an arbitrary truncated Taylor series.
    Explore(ExploreArgs),
}

#[derive(Debug, Args)]
pub struct SpecSource {
    /// Family parameter q.
    #[arg(long, required_unless_present = "spec", conflicts_with = "spec")]
    pub q: Option<i64>,

    /// Coefficients a_2..a_q, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "q")]
    pub a: Vec<i64>,

    /// JSON file of the form {"q": 3, "a": [1, 25]}.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

impl SpecSource {
    fn load(&self) -> Result<FamilySpec, String> {
        match (&self.q, &self.spec) {
            (Some(q), None) => FamilySpec::new(*q, self.a.clone()).map_err(|e| e.to_string()),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                FamilySpec::from_json(&text).map_err(|e| e.to_string())
            }
            _ => Err("exactly one of --q or --spec is required".to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub source: SpecSource,
    /// Order of the member.
    #[arg(long, conflicts_with = "r", required_unless_present = "r")]
    pub k: Option<usize>,
    /// Use the member of order k(r).
    #[arg(long)]
    pub r: Option<usize>,
    /// Last index; defaults to k(r) + r c(r) with --r.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "bfile")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Run the order-k recursion and cut the rectangle out.
    Sequence,
    /// Fill rows with the T recursion.
    Fast,
}

#[derive(Debug, Args)]
pub struct RectArgs {
    #[command(flatten)]
    pub source: SpecSource,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value = "sequence")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SpecSource,
    #[arg(long)]
    pub r_max: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub source: SpecSource,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Report multiplication counts without timing.
    #[arg(long)]
    pub counts_only: bool,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Leading {
    Strict,
    Convention,
}

#[derive(Debug, Args)]
pub struct ExploreArgs {
    /// Taylor coefficients t_0, t_1, ..., comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "num", conflicts_with_all = ["num", "den"])]
    pub coeffs: Vec<BigInt>,
    /// Numerator of a rational series, low degree first.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "den")]
    pub num: Vec<BigInt>,
    /// Denominator of a rational series, low degree first.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "num")]
    pub den: Vec<BigInt>,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub rows: usize,
    #[arg(long)]
    pub cols: usize,
    /// How to treat the degree-k coefficient.
    #[arg(long, value_enum, default_value = "strict")]
    pub leading: Leading,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

fn reject_format(command: &str, format: Format) -> Outcome {
    Outcome::usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn usage_err(e: Error) -> Outcome {
    Outcome::usage(e.to_string())
}

fn gen(args: &GenArgs) -> Result<Outcome, Outcome> {
    let spec = args.source.load().map_err(Outcome::usage)?;
    let (k, default_n) = match (args.k, args.r) {
        (Some(k), None) => (k, None),
        (None, Some(r)) => {
            let k = spec.k_of_r(r).map_err(usage_err)?;
            (k, Some(k + r * spec.c_of_r(r).map_err(usage_err)?))
        }
        _ => return Err(Outcome::usage("exactly one of --k or --r is required")),
    };
    let n_max = args
        .n_max
        .or(default_n)
        .ok_or_else(|| Outcome::usage("--n-max is required with --k"))?;
    let window = spec.generate_sequence(k, n_max).map_err(usage_err)?;
    Ok(Outcome::ok(match args.format {
        Format::Bfile => render::bfile(&window),
        Format::Csv => render::window_csv(&window),
        Format::Json => window.to_json() + "\n",
        Format::Table => render::window_table(&window),
    }))
}

fn rect(args: &RectArgs) -> Result<Outcome, Outcome> {
    let spec = args.source.load().map_err(Outcome::usage)?;
    let rect = match args.method {
        Method::Sequence => {
            let k = spec.k_of_r(args.r).map_err(usage_err)?;
            let c = spec.c_of_r(args.r).map_err(usage_err)?;
            let window = spec.generate_sequence(k, k + args.r * c).map_err(usage_err)?;
            extract_rectangle(&window, &spec, args.r).map_err(usage_err)?
        }
        Method::Fast => fill_rectangle_fast(&spec, args.r).map_err(usage_err)?,
    };
    Ok(Outcome::ok(match args.format {
        Format::Table => render::rectangle_table(&rect),
        Format::Csv => render::rectangle_csv(&rect),
        Format::Json => rect.to_json() + "\n",
        Format::Bfile => return Err(reject_format("rect", args.format)),
    }))
}

fn verify(args: &VerifyArgs) -> Result<Outcome, Outcome> {
    let spec = args.source.load().map_err(Outcome::usage)?;
    let report = verify_family(&spec, args.r_max).map_err(usage_err)?;
    let json = report.to_json() + "\n";
    let stdout = match args.format {
        Format::Table => render::report_table(&report),
        Format::Json => json.clone(),
        Format::Csv | Format::Bfile => return Err(reject_format("verify", args.format)),
    };
    if report.pass {
        Ok(Outcome::ok(stdout))
    } else {
        Ok(Outcome {
            code: EXIT_CHECK_FAILED,
            stdout,
            stderr: json,
        })
    }
}

fn bench(args: &BenchArgs) -> Result<Outcome, Outcome> {
    let spec = args.source.load().map_err(Outcome::usage)?;
    let report = if args.counts_only {
        count_ops(&spec, args.r)
    } else {
        time_compare(&spec, args.r, args.reps)
    };
    let report = match report {
        Ok(report) => report,
        Err(e @ Error::SchemeMismatch { .. }) => {
            return Err(Outcome {
                code: EXIT_CHECK_FAILED,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            })
        }
        Err(e) => return Err(usage_err(e)),
    };
    Ok(Outcome::ok(match args.format {
        Format::Table => render::cost_table(&report),
        Format::Json => report.to_json() + "\n",
        Format::Csv | Format::Bfile => return Err(reject_format("bench", args.format)),
    }))
}

fn explore(args: &ExploreArgs) -> Result<Outcome, Outcome> {
    let coeffs = if args.coeffs.is_empty() {
        rational_series(&args.num, &args.den, args.k).map_err(usage_err)?
    } else {
        args.coeffs.clone()
    };
    let policy = match args.leading {
        Leading::Strict => LeadingPolicy::Strict,
        Leading::Convention => LeadingPolicy::Convention,
    };
    let exploration = explore_general(&coeffs, args.k, args.rows, args.cols, policy).map_err(usage_err)?;
    Ok(Outcome::ok(match args.format {
        Format::Table => render::exploration_table(&exploration),
        Format::Csv => render::rectangle_csv(&exploration.rectangle),
        Format::Json => exploration.to_json() + "\n",
        Format::Bfile => return Err(reject_format("explore", args.format)),
    }))
}

/// Executes a parsed command. Output goes to `config.output` when set.
pub fn run(config: &CliConfig) -> Outcome {
    let result = match &config.command {
        Command::Gen(args) => gen(args),
        Command::Rect(args) => rect(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
        Command::Explore(args) => explore(args),
    };
    let mut outcome = result.unwrap_or_else(|failure| failure);
    if let Some(path) = &config.output {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            return Outcome::usage(format!("{}: {e}", path.display()));
        }
        outcome.stdout.clear();
    }
    outcome
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}
