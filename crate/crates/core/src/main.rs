use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use koszulkit::cli::{parse_job, run_job, RunOptions};

/// Run a koszulkit job script.
#[derive(Parser)]
#[command(name = "koszulkit", version)]
struct Args {
    /// Job script to run.
    #[arg(long)]
    job: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for `verify fuzz`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let source = match std::fs::read_to_string(&args.job) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.job.display());
            return ExitCode::from(2);
        }
    };
    let job = match parse_job(&source) {
        Ok(job) => job,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = run_job(&job, RunOptions { seed: args.seed });
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.exit_code as u8)
}
