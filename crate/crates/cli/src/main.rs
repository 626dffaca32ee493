mod expr;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use gacode_core::algorithms::shor15;
use gacode_core::gates::vacuum;
use gacode_core::{apply_circuit, dsl, mvtx, render, verify, Algebra};

#[derive(Parser)]
#[command(name = "gacode", version, about = "Geometric-product coding of bit strings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a circuit to the vacuum or to a given state.
    Run {
        circuit: PathBuf,
        /// Initial state (MVTX); defaults to c_{0...0}.
        #[arg(long)]
        state: Option<PathBuf>,
        /// Write the final state here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the number of primitive operations.
        #[arg(long)]
        count_ops: bool,
    },
    /// Render an MVTX multivector as an SVG bag of shapes.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the differential suites against the reference oracles.
    Verify {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Period finding for a^x mod 15 by blade selection.
    Shor15 {
        #[arg(long, default_value_t = 2)]
        base: u64,
    },
    /// Evaluate an expression of combs, e.g. "c10011 * c01011".
    Eval { expr: String },
}

enum Failure {
    Invalid(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Invalid(e)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn run(circuit: &Path, state: Option<&Path>, out: Option<&Path>, count_ops: bool) -> Result<()> {
    let parsed = dsl::parse_circuit(&read(circuit)?).map_err(|e| anyhow!("{}:{e}", circuit.display()))?;
    let initial = match state {
        Some(path) => mvtx::parse(&read(path)?).with_context(|| path.display().to_string())?,
        None => vacuum(Algebra::new(parsed.width, parsed.complex, false)?),
    };
    let (result, counter) = apply_circuit(&initial, &parsed)?;
    let text = mvtx::write(&result);
    match out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    if count_ops {
        println!("ops={}", counter.count());
    }
    Ok(())
}

fn render_file(input: &Path, out: &Path) -> Result<()> {
    let m = mvtx::parse(&read(input)?).with_context(|| input.display().to_string())?;
    let scene = render::layout(&m)?;
    write(out, &render::emit_svg(&scene))
}

fn run_verify(n: usize, trials: u64, seed: u64) -> Result<bool, Failure> {
    let reports = verify::run_all(n, trials, seed).map_err(anyhow::Error::from)?;
    for r in &reports {
        println!("{r}");
    }
    Ok(reports.iter().all(verify::SuiteReport::passed))
}

fn run_shor(base: u64) -> Result<()> {
    let outcome = shor15(base)?;
    println!("pre-selection ({} terms):", outcome.pre_selection.len());
    print!("{}", expr::format_terms(&outcome.pre_selection));
    println!("post-selection ({} terms):", outcome.post_selection.len());
    print!("{}", expr::format_terms(&outcome.post_selection));
    let xs: Vec<String> = outcome.selected_x.iter().map(u64::to_string).collect();
    println!("selected x: {}", xs.join(" "));
    let factors = match outcome.factors {
        Some((p, q)) => format!("{p},{q}"),
        None => "none".to_owned(),
    };
    println!("period={} factors={factors}", outcome.period);
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Run { circuit, state, out, count_ops } => run(&circuit, state.as_deref(), out.as_deref(), count_ops)?,
        Command::Render { input, out } => render_file(&input, &out)?,
        Command::Verify { n, trials, seed } => {
            if !run_verify(n, trials, seed)? {
                return Err(Failure::Verification);
            }
        }
        Command::Shor15 { base } => run_shor(base)?,
        Command::Eval { expr } => print!("{}", expr::format_terms(&expr::evaluate(&expr)?)),
    }
    Ok(())
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(2)
        }
    }
}
