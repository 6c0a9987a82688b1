use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nakayama::report::{to_json, AnalysisReport, ModuleReport, RetractReport, Survey};
use nakayama::{parse_sequence, Error, Indec};

/// Homological invariants of connected Nakayama algebras.
///
/// Sequences are written as comma-separated Kupisch series, e.g. `5,6,6`.
/// Modules are written `j:l` for the uniserial module with top S_j and
/// length l.
#[derive(Parser)]
#[command(name = "nakayama", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one algebra.
    Analyze {
        seq: String,
        #[arg(long)]
        json: bool,
    },
    /// Left retraction sequence down to a self-injective algebra.
    Retract {
        seq: String,
        /// Show only the first k steps.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Homological data of one indecomposable module.
    Module {
        seq: String,
        module: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify every algebra with n simples and Loewy length at most m.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_loewy: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit<T: serde::Serialize>(value: &T, json: bool, text: impl FnOnce(&T) -> String) {
    let out = if json {
        to_json(value) + "\n"
    } else {
        text(value)
    };
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> nakayama::Result<()> {
    match cli.command {
        Command::Analyze { seq, json } => {
            let a = parse_sequence(&seq)?;
            emit(&AnalysisReport::build(&a)?, json, AnalysisReport::to_text);
        }
        Command::Retract { seq, steps, json } => {
            let a = parse_sequence(&seq)?;
            emit(
                &RetractReport::build(&a, steps)?,
                json,
                RetractReport::to_text,
            );
        }
        Command::Module { seq, module, json } => {
            let a = parse_sequence(&seq)?;
            let x: Indec = module.parse()?;
            emit(&ModuleReport::build(&a, x)?, json, ModuleReport::to_text);
        }
        Command::Survey { n, max_loewy, json } => {
            emit(&Survey::build(n, max_loewy)?, json, Survey::to_text);
        }
    }
    Ok(())
}

/// 2 for bad input, 3 when two independent computations disagree.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
