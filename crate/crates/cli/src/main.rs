//! `hst`: enumerate triangulations of cyclic polytopes, compare the two
//! higher Stasheff–Tamari orders, list green sequences, run the
//! cross-checks, and export JSON or DOT dumps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or I/O error,
//! 3 resource guard exceeded.

mod render;
mod verify;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hst_core::io::{green_dot, green_json, poset_dot, poset_json, triangulations_json};
use hst_core::orders::enumerate_triangulations;
use hst_core::reptheory::green::GreenSystem;
use hst_core::{Error, Limits, PolytopeSpec, TriangulationPoset};

#[derive(Parser, Debug)]
#[command(
    name = "hst",
    version,
    about = "Higher Stasheff-Tamari orders on cyclic polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest number of triangulations any enumeration may produce.
    #[arg(long, global = true, default_value_t = Limits::default().max_triangulations)]
    max_triangulations: usize,
    /// Largest number of maximal chains any green-sequence enumeration may produce.
    #[arg(long, global = true, default_value_t = Limits::default().max_chains)]
    max_chains: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count and list the triangulations of C(m, delta).
    Enumerate(PolytopeArgs),
    /// Both orders on the triangulations of C(m, delta).
    Orders(PolytopeArgs),
    /// Maximal green sequences and their classes for (d, n).
    Green(AlgebraArgs),
    /// Run every cross-check that applies to the parameters.
    Verify(EitherArgs),
    /// Write the JSON or DOT dump for the parameters.
    Export(EitherArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PolytopeArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    delta: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct EitherArgs {
    /// Use the algebra parameters --d/--n and green sequences.
    #[arg(long, conflicts_with_all = ["m", "delta"], requires_all = ["d", "n"])]
    green: bool,
    #[arg(long, requires = "delta")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    delta: Option<usize>,
    #[arg(long, requires = "green")]
    d: Option<usize>,
    #[arg(long, requires = "green")]
    n: Option<usize>,
    #[command(flatten)]
    out: Output,
}

enum Params {
    Polytope(PolytopeSpec),
    Algebra { d: usize, n: usize },
}

impl EitherArgs {
    fn params(&self) -> Result<Params, Failure> {
        match (self.green, self.m, self.delta, self.d, self.n) {
            (true, None, None, Some(d), Some(n)) => {
                hst_core::reptheory::tilting::Framework::ClusterTilting.polytope(d, n)?;
                Ok(Params::Algebra { d, n })
            }
            (false, Some(m), Some(delta), None, None) => {
                Ok(Params::Polytope(PolytopeSpec::new(m, delta)?))
            }
            _ => Err(Failure::Usage(
                "pass either --m and --delta, or --green with --d and --n".into(),
            )),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Resource(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource { .. } => Failure::Resource(e.to_string()),
            Error::Contract(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::Integrity(_) => Failure::Verification(e.to_string()),
        }
    }
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Usage(format!("cannot write to standard output: {e}")))
        }
    }
}

fn format_of(out: &Output, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let format = out.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(Failure::Usage(format!(
            "--format {} is not available for this command",
            format
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits {
        max_triangulations: cli.max_triangulations,
        max_chains: cli.max_chains,
    };
    match cli.command {
        Command::Enumerate(args) => {
            let format = format_of(&args.out, Format::Text, &[Format::Text, Format::Json])?;
            let spec = PolytopeSpec::new(args.m, args.delta)?;
            let all = enumerate_triangulations(spec, limits)?;
            let text = match format {
                Format::Json => triangulations_json(&all),
                _ => render::triangulations(&all),
            };
            emit(&args.out, &text)
        }
        Command::Orders(args) => {
            let spec = PolytopeSpec::new(args.m, args.delta)?;
            let format = format_of(
                &args.out,
                Format::Text,
                &[Format::Text, Format::Json, Format::Dot],
            )?;
            let poset = TriangulationPoset::build(spec, limits)?;
            let text = match format {
                Format::Json => poset_json(&poset),
                Format::Dot => poset_dot(&poset)?,
                Format::Text => render::orders(&poset)?,
            };
            emit(&args.out, &text)
        }
        Command::Green(args) => {
            let format = format_of(
                &args.out,
                Format::Text,
                &[Format::Text, Format::Json, Format::Dot],
            )?;
            let system = GreenSystem::build(args.d, args.n, limits)?;
            let text = match format {
                Format::Json => green_json(&system),
                Format::Dot => green_dot(&system)?,
                Format::Text => render::green(&system),
            };
            emit(&args.out, &text)
        }
        Command::Verify(args) => {
            let format = format_of(&args.out, Format::Text, &[Format::Text, Format::Json])?;
            let report = match args.params()? {
                Params::Polytope(spec) => verify::polytope(spec, limits)?,
                Params::Algebra { d, n } => verify::algebra(d, n, limits)?,
            };
            let text = match format {
                Format::Json => report.to_json(),
                _ => report.to_text(),
            };
            emit(&args.out, &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{} required check(s) failed",
                    report.failures()
                )))
            }
        }
        Command::Export(args) => {
            let format = format_of(&args.out, Format::Json, &[Format::Json, Format::Dot])?;
            let text = match (args.params()?, format) {
                (Params::Polytope(spec), Format::Dot) => {
                    poset_dot(&TriangulationPoset::build(spec, limits)?)?
                }
                (Params::Polytope(spec), _) => {
                    poset_json(&TriangulationPoset::build(spec, limits)?)
                }
                (Params::Algebra { d, n }, Format::Dot) => {
                    green_dot(&GreenSystem::build(d, n, limits)?)?
                }
                (Params::Algebra { d, n }, _) => green_json(&GreenSystem::build(d, n, limits)?),
            };
            emit(&args.out, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("hst: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
