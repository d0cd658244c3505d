use std::io::{self, Read, Write};
use std::process::ExitCode;

use bisolve_core::emit::{emit, Format};
use bisolve_core::parse::{parse_rational, parse_width};
use bisolve_core::{parse_system, solve, Error, QueryBox, SolveOptions, SystemSpec};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

#[derive(Parser)]
#[command(name = "bisolve", version, about = "Certified real solutions of bivariate polynomial systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isolate the real solutions of f = g = 0.
    Solve(SolveArgs),
}

#[derive(clap::Args)]
struct SolveArgs {
    /// System file, or `-` for standard input.
    file: String,

    /// Only report solutions in [A, B] x [C, D].
    #[arg(long = "box", num_args = 4, value_names = ["A", "B", "C", "D"], allow_hyphen_values = true)]
    query: Option<Vec<String>>,

    /// Target box width, e.g. `2^-40`.
    #[arg(long, default_value = "2^-32")]
    width: String,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// Add candidate tallies and phase timings to the output.
    #[arg(long)]
    diagnostics: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

fn read_input(file: &str) -> io::Result<String> {
    if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file)
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("bisolve: {msg}");
    ExitCode::from(code)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::ZeroPolynomial | Error::DegenerateElimination { .. } | Error::NotZeroDimensional { .. } => {
            EXIT_DEGENERATE
        }
        Error::BudgetExceeded { .. } => EXIT_FAILURE,
    }
}

fn run_solve(args: SolveArgs) -> ExitCode {
    let text = match read_input(&args.file) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_FAILURE, format!("{}: {e}", args.file)),
    };
    let (f, g) = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => return fail(exit_code(&e), e),
    };
    let width = match parse_width(&args.width) {
        Ok(w) => w,
        Err(_) => return fail(EXIT_PARSE, format!("invalid --width '{}'", args.width)),
    };
    let mut spec = SystemSpec::new(f, g).with_target_width(width);
    if let Some(sides) = &args.query {
        let mut q = Vec::with_capacity(4);
        for s in sides {
            match parse_rational(s) {
                Ok(v) => q.push(v),
                Err(_) => return fail(EXIT_PARSE, format!("invalid --box value '{s}'")),
            }
        }
        let [a, b, c, d]: [_; 4] = q.try_into().expect("four values");
        if a > b || c > d {
            return fail(EXIT_PARSE, "empty --box");
        }
        spec = spec.with_query(QueryBox::new(a, b, c, d));
    }
    if args.threads == Some(0) {
        return fail(EXIT_PARSE, "--threads must be positive");
    }
    let opts = SolveOptions {
        threads: args.threads,
        timings: args.diagnostics,
        ..SolveOptions::default()
    };
    let result = match solve(&spec, &opts) {
        Ok(r) => r,
        Err(e) => return fail(exit_code(&e), e),
    };
    let format = match args.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    let out = emit(&result, format, args.diagnostics);
    if io::stdout().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Solve(args) => run_solve(args),
    }
}
