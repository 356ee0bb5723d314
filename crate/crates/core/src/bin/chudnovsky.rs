use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use chudnovsky::engine::compile;
use chudnovsky::tools::{self, bundled, format_element, parse_element};
use chudnovsky::{CompiledInstance, InstanceSpec, OpReport};

/// Multiplication in F_{q^n} by interpolation on algebraic curves.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every consistency check on an instance.
    Verify { instance: String },
    /// Multiply two elements given as comma-separated coordinates.
    Mul {
        instance: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Compare the engine against schoolbook multiplication on random pairs.
    Selftest {
        instance: String,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Time the engine and print its operation counts.
    Bench {
        instance: String,
        #[arg(long, default_value_t = 1000)]
        reps: usize,
    },
    /// Print the operation counts of one multiplication.
    Counts { instance: String },
    /// Search for irreducible polynomials whose place splits completely.
    SplitSearch {
        instance: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// Failure kinds mapped to exit codes 1 and 2.
enum Failure {
    Check(String),
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

/// An existing file path, or the name of a bundled instance.
fn load(instance: &str) -> Result<InstanceSpec> {
    if !Path::new(instance).exists() {
        if let Some(text) = bundled::json(instance) {
            return Ok(tools::parse_instance(text, instance)?);
        }
    }
    tools::load_instance(instance).with_context(|| format!("loading instance {instance}"))
}

fn load_compiled(instance: &str) -> Result<CompiledInstance> {
    let spec = load(instance)?;
    compile(spec).context("setting up instance")
}

fn print_report(r: &OpReport) {
    println!("step1_scalar {}", r.step1_scalar);
    println!("step2_bilinear {}", r.step2_bilinear);
    println!("step3_scalar {}", r.step3_scalar);
    println!("step5_scalar {}", r.step5_scalar);
    println!("total {}", r.total());
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { instance } => {
            let report = tools::verify(&load(&instance)?);
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Check("verification failed".into()));
            }
        }
        Command::Mul { instance, x, y } => {
            let ci = load_compiled(&instance)?;
            let x = parse_element(ci.base(), ci.n(), &x).context("parsing --x")?;
            let y = parse_element(ci.base(), ci.n(), &y).context("parsing --y")?;
            let (z, _) = ci.multiply(&x, &y).map_err(anyhow::Error::from)?;
            println!("{}", format_element(&z));
        }
        Command::Selftest { instance, trials, seed } => {
            let ci = load_compiled(&instance)?;
            let r = tools::selftest(&ci, trials, seed).map_err(anyhow::Error::from)?;
            match &r.first_mismatch {
                None => println!("PASS {} trials (seed {seed})", r.trials),
                Some(m) => {
                    println!("FAIL at trial {}: {m}", r.trials);
                    return Err(Failure::Check("selftest mismatch".into()));
                }
            }
            print_report(&r.report);
        }
        Command::Bench { instance, reps } => {
            let ci = load_compiled(&instance)?;
            let r = tools::bench(&ci, reps).map_err(anyhow::Error::from)?;
            println!("reps {}", r.reps);
            println!("median_ns {}", r.median.as_nanos());
            println!("reference_median_ns {}", r.reference_median.as_nanos());
            print_report(&r.report);
        }
        Command::Counts { instance } => {
            let ci = load_compiled(&instance)?;
            print_report(&tools::counts(&ci).map_err(anyhow::Error::from)?);
            println!("bound {}", ci.aggregate_bound());
        }
        Command::SplitSearch { instance, degree, trials, seed } => {
            let spec = load(&instance)?;
            for p in tools::split_search(&spec.curve, degree, trials, seed) {
                println!("{}", format_element(p.coeffs()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
