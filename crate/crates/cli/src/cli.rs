//! Command-line surface. `run_args` is the whole program minus process I/O.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use orchard_core::adapters::{points_to_signfn, tournament_to_signfn};
use orchard_core::combinatorics::checked_binomial;
use orchard_core::operators::{augment, reduce};
use orchard_core::{Error as CoreError, OrchardRelation, SignFunction, SubsetCode};

use crate::formats::{self, FormatError};
use crate::plot::render_svg;
use crate::verify::{self, Proposition, SweepSpec, MAX_SUBSETS};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "orchard",
    version,
    about = "Orchard relations of generic sign functions"
)]
pub struct Cli {
    /// Input file format
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    /// Base seed for verification sweeps
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Trials per configuration
    #[arg(long, global = true, default_value_t = 200)]
    pub trials: u32,
    /// Include per-pair separation counts
    #[arg(long, global = true)]
    pub verbose: bool,
    /// Lift the desk-scale size limits
    #[arg(long = "unsafe", global = true)]
    pub unsafe_sizes: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Signfn,
    Tournament,
    Points,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the orchard partition of an input file
    Classify { input: PathBuf },
    /// Check a proposition over a seeded sweep
    Verify {
        #[arg(value_enum)]
        proposition: Proposition,
        /// Ground-set sizes, `a..b` (inclusive) or a single value
        #[arg(long, default_value = "4..8", value_parser = parse_range)]
        n: RangeInclusive<u32>,
        /// Values of d = arity - 1, `a..b` (inclusive) or a single value
        #[arg(long, default_value = "1..3", value_parser = parse_range)]
        d: RangeInclusive<u32>,
    },
    /// Apply flip, reduce, augment or product to a sign function file
    Transform {
        input: PathBuf,
        /// Output file; standard output when absent
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(subcommand)]
        op: TransformOp,
    },
    /// Draw a planar point configuration colored by class
    Plot {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum TransformOp {
    /// Negate the value on one subset, given as comma-separated elements
    Flip {
        #[arg(value_delimiter = ',', required = true)]
        set: Vec<u32>,
    },
    Reduce,
    Augment,
    /// Pointwise product with a second sign function file
    Product {
        other: PathBuf,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = |e: std::num::ParseIntError| format!("`{s}`: {e}");
    let range = match s.split_once("..") {
        Some((lo, hi)) => lo.trim().parse().map_err(bad)?..=hi.trim().parse().map_err(bad)?,
        None => {
            let v = s.trim().parse().map_err(bad)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("`{s}` is an empty range"));
    }
    Ok(range)
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_PASS,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CmdError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

fn read(path: &Path) -> Result<String, CmdError> {
    fs::read_to_string(path).map_err(|source| CmdError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<(), CmdError> {
    fs::write(path, contents).map_err(|source| CmdError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn in_file<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CmdError> {
    r.map_err(|source| CmdError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn guard(n: u32, arity: u32, unsafe_sizes: bool) -> Result<(), CmdError> {
    if unsafe_sizes {
        return Ok(());
    }
    match checked_binomial(n.into(), arity.into()) {
        Some(c) if c <= MAX_SUBSETS => Ok(()),
        _ => Err(CmdError::Usage(format!(
            "C({n}, {arity}) exceeds {MAX_SUBSETS} subsets (use --unsafe to override)"
        ))),
    }
}

pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Classify { input } => classify(cli, input),
        Command::Verify { proposition, n, d } => return verify(cli, *proposition, n, d),
        Command::Transform { input, output, op } => transform(cli, input, output.as_deref(), op),
        Command::Plot { input, output } => plot(cli, input, output),
    };
    result.unwrap_or_else(Outcome::usage)
}

fn load_function(cli: &Cli, path: &Path) -> Result<SignFunction, CmdError> {
    let format = cli
        .format
        .ok_or_else(|| CmdError::Usage("--format {signfn|tournament|points} is required".into()))?;
    let text = read(path)?;
    match format {
        InputFormat::Signfn => {
            let f = in_file(path, formats::parse_signfn(&text))?;
            guard(f.n(), f.arity(), cli.unsafe_sizes)?;
            Ok(f)
        }
        InputFormat::Tournament => {
            let t = in_file(path, formats::parse_tournament(&text))?;
            Ok(tournament_to_signfn(&t)?)
        }
        InputFormat::Points => {
            let config = in_file(path, formats::parse_points(&text))?;
            guard(
                config.len() as u32,
                config.dim() as u32 + 1,
                cli.unsafe_sizes,
            )?;
            Ok(points_to_signfn(&config)?)
        }
    }
}

fn classify(cli: &Cli, input: &Path) -> Result<Outcome, CmdError> {
    let f = load_function(cli, input)?;
    let relation = OrchardRelation::new(&f)?;
    let partition = relation.partition()?;
    let profile = cli.verbose.then(|| relation.profile());
    Ok(Outcome::ok(formats::write_partition(&partition, profile)))
}

fn verify(
    cli: &Cli,
    proposition: Proposition,
    n: &RangeInclusive<u32>,
    d: &RangeInclusive<u32>,
) -> Outcome {
    let spec = SweepSpec {
        proposition,
        n: n.clone(),
        d: d.clone(),
        trials: cli.trials,
        seed: cli.seed,
        unsafe_sizes: cli.unsafe_sizes,
    };
    let start = Instant::now();
    let report = match verify::run(&spec) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    // Timing goes to stderr so the report itself stays reproducible.
    let mut stderr = String::new();
    let _ = writeln!(
        stderr,
        "{proposition}: {} ({} failures, {:.3}s)",
        if report.passed() { "pass" } else { "FAIL" },
        report.failures.len(),
        start.elapsed().as_secs_f64()
    );
    Outcome {
        code: if report.passed() {
            EXIT_PASS
        } else {
            EXIT_FALSIFIED
        },
        stdout: report.to_json(),
        stderr,
    }
}

fn transform(
    cli: &Cli,
    input: &Path,
    output: Option<&Path>,
    op: &TransformOp,
) -> Result<Outcome, CmdError> {
    let f = in_file(input, formats::parse_signfn(&read(input)?))?;
    guard(f.n(), f.arity(), cli.unsafe_sizes)?;
    let result = match op {
        TransformOp::Flip { set } => {
            let flipset = SubsetCode::from_unsorted(f.n(), set.clone())?;
            f.flip(&flipset)?
        }
        TransformOp::Reduce => {
            if f.arity() < 2 {
                return Err(CmdError::Usage(format!(
                    "cannot reduce a function of arity {}",
                    f.arity()
                )));
            }
            reduce(&f)?
        }
        TransformOp::Augment => {
            if f.arity() >= f.n() {
                return Err(CmdError::Usage(format!(
                    "cannot augment a function of arity {} on {} elements",
                    f.arity(),
                    f.n()
                )));
            }
            guard(f.n(), f.arity() + 1, cli.unsafe_sizes)?;
            augment(&f)?
        }
        TransformOp::Product { other } => {
            let g = in_file(other, formats::parse_signfn(&read(other)?))?;
            f.product(&g)?
        }
    };
    let text = formats::write_signfn(&result);
    let kind_line = format!("kind: {}\n", result.kind());
    Ok(match output {
        Some(path) => {
            write(path, &text)?;
            Outcome::ok(kind_line)
        }
        None => Outcome {
            code: EXIT_PASS,
            stdout: text,
            stderr: kind_line,
        },
    })
}

fn plot(cli: &Cli, input: &Path, output: &Path) -> Result<Outcome, CmdError> {
    if !matches!(cli.format, None | Some(InputFormat::Points)) {
        return Err(CmdError::Usage("plot reads points files only".into()));
    }
    let config = in_file(input, formats::parse_points(&read(input)?))?;
    if config.dim() != 2 {
        return Err(CmdError::Usage(format!(
            "plot needs dim=2, found dim={}",
            config.dim()
        )));
    }
    guard(config.len() as u32, 3, cli.unsafe_sizes)?;
    let f = points_to_signfn(&config)?;
    let partition = match OrchardRelation::new(&f) {
        Ok(rel) => Some(rel.partition()?),
        Err(CoreError::Unsupported { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    write(output, &render_svg(&config, partition.as_ref()))?;
    Ok(Outcome::ok(String::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok(4..=8));
        assert_eq!(parse_range("3"), Ok(3..=3));
        assert!(parse_range("8..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(["orchard", "verify", "nonsense"]).code, EXIT_USAGE);
        assert_eq!(
            run_args(["orchard", "classify", "/nonexistent", "--format", "signfn"]).code,
            EXIT_USAGE
        );
        let o = run_args(["orchard", "classify", "/nonexistent"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("--format"), "{}", o.stderr);
        assert_eq!(run_args(["orchard", "--help"]).code, EXIT_PASS);
    }
}
