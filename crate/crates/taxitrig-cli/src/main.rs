//! Command-line front end for the taxitrig library.
//!
//! Subcommands: `eval`, `deriv`, `table`, `plot`, `verify`. Exit codes:
//! 0 success, 1 verification failure, 2 usage or parse error, 3 I/O error.
//! The `TAXITRIG_MODE` environment variable (`exact` or `float`) selects
//! the default numeric backend; `--exact` / `--float` override it per
//! invocation, and without either the default is exact.

mod output;
mod svg;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use taxitrig::scalar::{Backend, Scalar};
use taxitrig::series::Series;
use taxitrig::verify::{
    run_derivative_sweep, run_equivalence_sweep, run_identity_suite, GridSpec, Tolerances,
};
use taxitrig::{Angle, DerivForm, TrigFunction};

#[derive(Parser)]
#[command(
    name = "taxitrig",
    version,
    about = "Taxicab trigonometry in t-radians: evaluate, differentiate, tabulate, plot, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModeArgs {
    /// Use exact rational arithmetic (the default)
    #[arg(long, conflicts_with = "float")]
    exact: bool,
    /// Use f64 arithmetic
    #[arg(long)]
    float: bool,
}

impl ModeArgs {
    fn backend(&self) -> Result<Backend, CliError> {
        if self.exact {
            return Ok(Backend::Exact);
        }
        if self.float {
            return Ok(Backend::Float);
        }
        match std::env::var("TAXITRIG_MODE") {
            Ok(v) if v == "exact" => Ok(Backend::Exact),
            Ok(v) if v == "float" => Ok(Backend::Float),
            Ok(v) => Err(CliError::Usage(format!(
                "TAXITRIG_MODE must be \"exact\" or \"float\", got {v:?}"
            ))),
            Err(_) => Ok(Backend::Exact),
        }
    }
}

fn parse_function(s: &str) -> Result<TrigFunction, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at a t-radian angle
    Eval {
        #[arg(value_parser = parse_function)]
        function: TrigFunction,
        /// Angle in t-radians: decimal or p/q
        #[arg(allow_negative_numbers = true)]
        theta: String,
        /// Sine/cosine representation: piecewise, literal, or pseudo
        #[arg(long, default_value = "piecewise")]
        repr: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Differentiate a function at a t-radian angle
    Deriv {
        #[arg(value_parser = parse_function)]
        function: TrigFunction,
        /// Angle in t-radians: decimal or p/q
        #[arg(allow_negative_numbers = true)]
        theta: String,
        /// Derivative form: direct, product, squared, or quotient
        #[arg(long, default_value = "direct")]
        form: String,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Print a value table over the half-open grid [from, to)
    Table {
        #[arg(value_parser = parse_function)]
        function: TrigFunction,
        #[arg(allow_negative_numbers = true)]
        from: String,
        #[arg(allow_negative_numbers = true)]
        to: String,
        step: String,
        /// Output format: csv or json
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Render one or more functions to an SVG figure
    Plot {
        #[arg(required = true, value_parser = parse_function)]
        functions: Vec<TrigFunction>,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        /// Uniform sample count (breakpoints are always added exactly)
        #[arg(long, default_value_t = 512)]
        samples: usize,
        /// Output SVG path
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the equivalence, derivative, and identity sweeps
    Verify {
        /// Grid range as start:end
        #[arg(long, default_value = "-16:16", allow_hyphen_values = true)]
        range: String,
        /// Grid step (rational)
        #[arg(long, default_value = "1/128")]
        step: String,
        /// Float-oracle tolerance, applied as both absolute and relative
        #[arg(long)]
        tol: Option<f64>,
        /// Central-difference step size
        #[arg(long)]
        h: Option<f64>,
        /// Breakpoint exclusion radius for oracle comparisons
        #[arg(long)]
        exclusion: Option<f64>,
    },
}

enum CliError {
    Usage(String),
    Io(String),
    VerificationFailed,
}

impl CliError {
    fn io(context: &str, err: std::io::Error) -> CliError {
        CliError::Io(format!("{context}: {err}"))
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_scalar(input: &str, backend: Backend) -> Result<Scalar, CliError> {
    Scalar::parse(input, backend).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_angle(input: &str, backend: Backend) -> Result<Angle, CliError> {
    let theta = parse_scalar(input, backend)?;
    Angle::reduce(theta).map_err(|e| CliError::Usage(e.to_string()))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Eval { function, theta, repr, mode } => {
            let angle = parse_angle(&theta, mode.backend()?)?;
            let form = taxitrig::sin_cos_form(&repr).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown representation {repr:?} (expected piecewise, literal, or pseudo)"
                ))
            })?;
            println!("{}", output::format_eval(&function.eval_via(form, &angle)));
            Ok(())
        }
        Command::Deriv { function, theta, form, mode } => {
            let angle = parse_angle(&theta, mode.backend()?)?;
            let form: DerivForm = form.parse().map_err(CliError::Usage)?;
            let result = taxitrig::derivative(function, &angle, form)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            println!("{}", output::format_deriv(&result));
            Ok(())
        }
        Command::Table { function, from, to, step, format, out, mode } => {
            let backend = mode.backend()?;
            let from = parse_scalar(&from, backend)?;
            let to = parse_scalar(&to, backend)?;
            let step = parse_scalar(&step, backend)?;
            if from >= to {
                return Err(CliError::Usage("table start must be below its end".to_string()));
            }
            if step.is_zero() || step.is_negative() {
                return Err(CliError::Usage("table step must be positive".to_string()));
            }
            let series = Series::sample_grid(function, &from, &to, &step);
            let mut sink: Box<dyn Write> = match &out {
                Some(path) => Box::new(
                    fs::File::create(path)
                        .map_err(|e| CliError::io(&format!("cannot create {}", path.display()), e))?,
                ),
                None => Box::new(std::io::stdout().lock()),
            };
            let written = match format.as_str() {
                "csv" => output::write_csv(&mut sink, &series),
                "json" => output::write_json(&mut sink, &series),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown format {other:?} (expected csv or json)"
                    )))
                }
            };
            written.map_err(|e| CliError::io("cannot write table", e))
        }
        Command::Plot { functions, from, to, samples, out } => {
            if !from.is_finite() || !to.is_finite() || from >= to {
                return Err(CliError::Usage("plot range must be finite with from < to".to_string()));
            }
            let figure = svg::render_plot(&functions, from, to, samples);
            fs::write(&out, figure)
                .map_err(|e| CliError::io(&format!("cannot write {}", out.display()), e))
        }
        Command::Verify { range, step, tol, h, exclusion } => {
            let (start, end) = range
                .split_once(':')
                .ok_or_else(|| CliError::Usage("range must look like start:end".to_string()))?;
            let start = parse_scalar(start, Backend::Exact)?;
            let end = parse_scalar(end, Backend::Exact)?;
            let step = parse_scalar(&step, Backend::Exact)?;
            let mut grid =
                GridSpec::new(start, end, step).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(radius) = exclusion {
                grid = grid.with_exclusion_radius(radius);
            }
            let mut tolerances = Tolerances::default();
            if let Some(t) = tol {
                tolerances.abs_tol = t;
                tolerances.rel_tol = t;
            }
            if let Some(step_size) = h {
                tolerances.h = step_size;
            }

            let reports = [
                run_equivalence_sweep(&grid),
                run_derivative_sweep(&grid, &tolerances),
                run_identity_suite(&grid),
            ];
            let mut all_passed = true;
            for report in &reports {
                println!("{report}");
                for failure in report.failures.iter().take(5) {
                    println!(
                        "  {} {} at theta = {}: expected {}, got {}",
                        failure.function, failure.check, failure.theta, failure.expected, failure.actual
                    );
                }
                if report.failures.len() > 5 {
                    println!("  ... and {} more failures", report.failures.len() - 5);
                }
                all_passed &= report.passed();
            }
            if all_passed {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
    }
}
