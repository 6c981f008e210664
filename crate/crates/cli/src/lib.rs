//! Command-line front end: argument parsing, dispatch, and output
//! formatting. `run` is the whole program minus process exit.

mod commands;
mod record;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isocant_core::exactnum::{parse_rational, Rational, Surd};
use isocant_core::Error;

pub use record::OutputRecord;

pub const DEFAULT_SEED: u64 = 0x5EED_1500_CA57;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
pub const SAMPLES_ENV: &str = "ISOCANT_MC_SAMPLES";

pub mod exit {
    pub const OK: i32 = 0;
    pub const DOMAIN: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const VERIFICATION: i32 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "isocant", version, about = "Exact volumes of isocanted cubes, their polar duals, and the Mahler volume product")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    A,
    D,
}

#[derive(Args, Debug, Clone)]
pub struct Primal {
    #[arg(long)]
    d: usize,
    /// Edge length of the bounding cube.
    #[arg(long, value_parser = rational)]
    ell: Rational,
    /// Cant depth, 0 ≤ a < ℓ.
    #[arg(long, value_parser = rational)]
    a: Rational,
}

#[derive(Args, Debug, Clone)]
pub struct DualArgs {
    #[arg(long)]
    d: usize,
    #[arg(long, value_parser = rational, requires = "a", conflicts_with_all = ["b", "c"])]
    ell: Option<Rational>,
    #[arg(long, value_parser = rational, requires = "ell")]
    a: Option<Rational>,
    #[arg(long, value_parser = rational, requires = "c")]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, requires = "b")]
    c: Option<Rational>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Volume of the isocanted cube I_d(ℓ, a).
    Volume {
        #[command(flatten)]
        p: Primal,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Volume of the polar dual, from (ℓ, a) or directly from (b, c).
    DualVolume {
        #[command(flatten)]
        p: DualArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Vertices of I_d(ℓ, a), or of its dual with --dual.
    Vertices {
        #[command(flatten)]
        p: Primal,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// f-vector of the dual body (the primal one reversed).
    Fvector {
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Facet hyperplanes of the dual body.
    Facets {
        #[command(flatten)]
        p: DualArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Volume of a roof; lengths accept forms like 3/2, sqrt(2), 1/3*sqrt(6).
    Roof {
        #[arg(long = "C")]
        c: usize,
        #[arg(long = "V")]
        v: usize,
        #[arg(long, value_parser = surd)]
        ell1: Surd,
        #[arg(long, value_parser = surd)]
        ell2: Surd,
        #[arg(long, value_parser = surd)]
        h: Surd,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Mahler polynomial p_d and its positivity certificate.
    Mahler {
        #[arg(long)]
        d: usize,
        /// Include the full certificate.
        #[arg(long)]
        certificate: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Chance that d people, each waiting `wait` in a unit interval, all meet.
    Probability {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = rational)]
        wait: Rational,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Four-point condition for the metric behind the dual body.
    MetricCheck {
        #[command(flatten)]
        p: Primal,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check the closed forms against every applicable oracle.
    Verify {
        #[command(flatten)]
        p: Primal,
        /// Monte Carlo samples (default: $ISOCANT_MC_SAMPLES or 1000000).
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, value_parser = seed, default_value = "0x5EED1500CA57")]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sweep a or d and emit one row per point.
    Table {
        #[arg(long, value_enum)]
        sweep: Sweep,
        /// Fixed dimension when sweeping a.
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, value_parser = rational, default_value = "1")]
        ell: Rational,
        /// Fixed cant when sweeping d.
        #[arg(long, value_parser = rational, default_value = "1/2")]
        a: Rational,
        /// Number of equal steps of a over [0, ℓ).
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, default_value_t = 2)]
        d_min: usize,
        #[arg(long, default_value_t = 10)]
        d_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn surd(s: &str) -> Result<Surd, String> {
    Surd::parse(s).map_err(|e| e.to_string())
}

fn seed(s: &str) -> Result<u64, String> {
    let cleaned = s.replace('_', "");
    match cleaned.strip_prefix("0x").or_else(|| cleaned.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => cleaned.parse(),
    }
    .map_err(|e| format!("bad seed {s:?}: {e}"))
}

/// What a command produced before formatting.
pub(crate) enum Output {
    Record(OutputRecord, Format),
    /// Verification table; `passed == false` maps to exit code 3.
    Verified {
        record: OutputRecord,
        format: Format,
        passed: bool,
        /// One human-readable line per check, for text output.
        lines: Vec<String>,
    },
    Table(String),
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                exit::USAGE
            } else {
                let _ = write!(out, "{text}");
                exit::OK
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(Output::Record(record, format)) => {
            emit(out, &record, format);
            exit::OK
        }
        Ok(Output::Verified { record, format, passed, lines }) => {
            match format {
                Format::Json => emit(out, &record, format),
                Format::Text => {
                    let params: Vec<String> = record.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(out, "verify: {} ({})", record.exact, params.join(", "));
                    for line in &lines {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
            if passed {
                exit::OK
            } else {
                let _ = writeln!(err, "error: verification failed");
                exit::VERIFICATION
            }
        }
        Ok(Output::Table(text)) => {
            let _ = write!(out, "{text}");
            exit::OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CertificateFailure { .. } => exit::VERIFICATION,
                _ => exit::DOMAIN,
            }
        }
    }
}

fn emit(out: &mut dyn Write, record: &OutputRecord, format: Format) {
    let _ = match format {
        Format::Json => writeln!(out, "{}", record.to_json_line()),
        Format::Text => write!(out, "{}", record.to_text()),
    };
}
