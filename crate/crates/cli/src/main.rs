use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wedgeops_cli::config::{parse_tolerance, RunConfig};
use wedgeops_cli::{examples, poc, suite, CliError};

#[derive(Parser)]
#[command(
    name = "wedgeops",
    version,
    about = "Checks for pointwise wedge products and creation operators on vector-valued Hardy spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Format {
    /// JSON output (the default)
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Human-readable output
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in worked examples.
    PaperExamples {
        #[arg(long, env = "WEDGEOPS_SEED", default_value_t = 0)]
        seed: u64,
        /// Override one check's tolerance, as CHECK_ID=VALUE. Repeatable.
        #[arg(long = "tol", value_name = "ID=VALUE", value_parser = tol_arg)]
        tol: Vec<(String, f64)>,
        #[command(flatten)]
        format: Format,
    },
    /// Run the seeded property suite.
    Suite {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        grade: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, env = "WEDGEOPS_SEED", default_value_t = 0)]
        seed: u64,
        /// Override one check's tolerance, as CHECK_ID=VALUE. Repeatable.
        #[arg(long = "tol", value_name = "ID=VALUE", value_parser = tol_arg)]
        tol: Vec<(String, f64)>,
        /// Extra analytic symbol to check, in the JSON series format. Repeatable.
        #[arg(long = "xi", value_name = "FILE")]
        xi: Vec<PathBuf>,
        #[command(flatten)]
        format: Format,
    },
    /// Print an orthonormal basis of the pointwise orthogonal complement.
    Poc {
        /// Analytic symbol in the JSON series format. Repeatable.
        #[arg(long = "xi", value_name = "FILE")]
        xi: Vec<PathBuf>,
        /// Coefficient dimension; required when no --xi is given.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 6)]
        degree: usize,
        /// Relative singular value threshold for the nullspace.
        #[arg(long, default_value_t = wedgeops::operators::NULLSPACE_RTOL)]
        tol: f64,
        #[command(flatten)]
        format: Format,
    },
}

fn tol_arg(s: &str) -> Result<(String, f64), String> {
    parse_tolerance(s).map_err(|e| e.to_string())
}

fn emit(text: bool, as_text: impl FnOnce() -> String, as_json: impl FnOnce() -> String) {
    let body = if text { as_text() } else { as_json() + "\n" };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::PaperExamples { seed, tol, format } => {
            let report = examples::paper_examples(seed, &tol.into_iter().collect())?;
            emit(format.text, || report.to_text(), || report.to_json());
            Ok(report.exit_code())
        }
        Command::Suite {
            dim,
            degree,
            grade,
            trials,
            seed,
            tol,
            xi,
            format,
        } => {
            let cfg = RunConfig {
                dim,
                degree,
                grade,
                trials,
                seed,
                tolerances: tol.into_iter().collect(),
                xi_files: xi,
            };
            let report = suite::property_suite(&cfg)?;
            emit(format.text, || report.to_text(), || report.to_json());
            Ok(report.exit_code())
        }
        Command::Poc {
            xi,
            dim,
            degree,
            tol,
            format,
        } => {
            let out = poc::cmd_poc(&xi, dim, degree, tol)?;
            emit(format.text, || out.to_text(), || out.to_json());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
