//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a deviation above the
//! tolerance, 2 for usage, validation and I/O errors. Errors are written to
//! stderr as `{"error": <code>, "message": <text>}`.

pub mod figure;
pub mod format;
pub mod range;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::closed_form::{MeasurementAngles, MinusSecondOutcome};
use crate::minimizer::correlation_report;
use crate::scs_states::{CoherentParams, Parity};
use figure::FigureId;
use format::round12;
use range::RangeSpec;
use sweep::{OutputFormat, SweepSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "scs-discord", version, about = "Quantum discord and entanglement of quasi-Werner cat states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All correlation measures at one parameter point, as JSON.
    Point(PointArgs),
    /// Grid of parameter points written as CSV or JSON.
    Sweep(SweepArgs),
    /// Surface data for one figure, one CSV per sub-panel.
    Figure(FigureArgs),
    /// Compare the closed forms with the matrix oracle on random points.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long)]
    pub parity: Parity,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_sq: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta_sq: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    /// Measurement angle; minimized over when omitted.
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub parity: Parity,
    /// `value` or `start:stop:step`.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha_sq: RangeSpec,
    #[arg(long, allow_negative_numbers = true)]
    pub beta_sq: RangeSpec,
    #[arg(long, allow_negative_numbers = true)]
    pub a: RangeSpec,
    /// Omit to report every row at the minimizing angle.
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<RangeSpec>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Worker threads; the output does not depend on this.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    /// One of fig1..fig6.
    pub id: FigureId,
    /// Output directory.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Points per axis.
    #[arg(long, default_value_t = figure::DEFAULT_GRID as u32, value_parser = clap::value_parser!(u32).range(2..))]
    pub grid: u32,
    /// Mean photon number of each sub-panel.
    #[arg(long, value_delimiter = ',', default_values_t = figure::DEFAULT_PHOTON_SETTINGS)]
    pub photon_settings: Vec<f64>,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Gate on the misprinted minus-parity outcome probability instead of the corrected one.
    #[arg(long)]
    pub use_printed_eq23: bool,
}

#[derive(Debug, Serialize)]
struct PointReport {
    parity: &'static str,
    alpha_sq: f64,
    beta_sq: f64,
    a: f64,
    theta: f64,
    phi: f64,
    mutual_info: f64,
    classical_corr: f64,
    discord: f64,
    delta: f64,
    theta_opt: f64,
    concurrence: f64,
    eof: f64,
    delta_minus_eof: f64,
}

#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Self { code: e.code(), message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self { code: "IoError", message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: "ParseError", message: message.into() }
}

fn cmd_point(args: &PointArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let params = CoherentParams::new(args.alpha_sq, args.beta_sq)?;
    let phi = args.phi.unwrap_or(0.0);
    if let Some(theta) = args.theta {
        MeasurementAngles::new(theta, phi)?;
    } else if !phi.is_finite() {
        return Err(crate::Error::InvalidAngles { theta: 0.0, phi }.into());
    }
    let r = correlation_report(&params, args.parity, args.a, args.theta)?;
    let report = PointReport {
        parity: args.parity.as_str(),
        alpha_sq: round12(args.alpha_sq),
        beta_sq: round12(args.beta_sq),
        a: round12(args.a),
        theta: round12(args.theta.unwrap_or(r.theta_opt)),
        phi: round12(phi),
        mutual_info: round12(r.mutual_info),
        classical_corr: round12(r.classical_corr),
        discord: round12(r.discord),
        delta: round12(r.delta),
        theta_opt: round12(r.theta_opt),
        concurrence: round12(r.concurrence),
        eof: round12(r.eof),
        delta_minus_eof: round12(r.delta_minus_eof),
    };
    serde_json::to_writer_pretty(&mut *stdout, &report).map_err(std::io::Error::from)?;
    writeln!(stdout)?;
    Ok(EXIT_OK)
}

fn with_threads<T: Send>(threads: Option<u16>, job: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match threads {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.into())
                .build()
                .map_err(|e| Failure { code: "IoError", message: e.to_string() })?;
            Ok(pool.install(job))
        }
    }
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let spec = SweepSpec {
        parity: args.parity,
        a: args.a,
        alpha_sq: args.alpha_sq,
        beta_sq: args.beta_sq,
        theta: args.theta,
        format: args.format,
    };
    let rows = with_threads(args.threads, || sweep::compute(&spec))?;
    let mut buf = Vec::new();
    sweep::write(&rows, spec.format, &mut buf)?;
    match &args.out {
        Some(path) => std::fs::write(path, buf)?,
        None => stdout.write_all(&buf)?,
    }
    Ok(EXIT_OK)
}

fn cmd_figure(args: &FigureArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.photon_settings.is_empty() || args.photon_settings.len() > 26 {
        return Err(usage("--photon-settings takes between 1 and 26 values"));
    }
    if let Some(bad) = args.photon_settings.iter().find(|s| !s.is_finite() || **s < 0.0) {
        return Err(usage(format!("photon setting {bad} must be finite and nonnegative")));
    }
    let written = with_threads(args.threads, || {
        figure::generate(args.id, &args.photon_settings, args.grid as usize, &args.out)
    })??;
    for path in written {
        writeln!(stdout, "{}", path.display())?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    if args.tol.is_nan() || args.tol < 0.0 {
        return Err(usage("--tol must be nonnegative"));
    }
    let config = verify::VerifyConfig {
        samples: args.samples as usize,
        seed: args.seed,
        tol: args.tol,
        form: if args.use_printed_eq23 {
            MinusSecondOutcome::NPlus
        } else {
            MinusSecondOutcome::NMinus
        },
    };
    let report = verify::run(config)?;
    report.write(stdout)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn write_failure(f: &Failure, stderr: &mut dyn Write) {
    let obj = serde_json::json!({ "error": f.code, "message": f.message });
    let _ = writeln!(stderr, "{obj}");
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or_default().trim_start_matches("error: ");
            write_failure(&usage(first), stderr);
            return EXIT_USAGE;
        }
    };
    let outcome = match &cli.command {
        Command::Point(args) => cmd_point(args, stdout),
        Command::Sweep(args) => cmd_sweep(args, stdout),
        Command::Figure(args) => cmd_figure(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            write_failure(&f, stderr);
            EXIT_USAGE
        }
    }
}
