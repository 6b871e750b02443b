use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use recgf_cli::commands;

/// Exact solver and rational generating functions for multidimensional
/// constant-coefficient difference equations with Cauchy data.
#[derive(Parser)]
#[command(name = "recgf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Assemble the closed-form generating function of the solution
    Genfunc {
        /// Problem file (JSON)
        problem: PathBuf,
        /// Output path; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated variable names, e.g. `z,w` (default z1..zn)
        #[arg(long)]
        vars: Option<String>,
    },
    /// Solve the Cauchy problem on a box by exact dynamic programming
    Solve {
        problem: PathBuf,
        /// Box upper corner, comma-separated integers, e.g. `12,8`
        #[arg(long = "box")]
        box_spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Green's-function generating function for point-mass data
    Green {
        problem: PathBuf,
        /// Data point τ₀ in X₀, comma-separated integers
        #[arg(long)]
        tau: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        vars: Option<String>,
    },
    /// Expand a generating-function file into exact coefficients
    Expand {
        gf: PathBuf,
        /// Highest solution index per axis
        #[arg(long)]
        order: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-verify solver and generating function; exit 0 iff all checks pass
    Verify {
        problem: PathBuf,
        #[arg(long = "box")]
        box_spec: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1, // usage problems are input errors
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Genfunc { problem, out, vars } => {
            commands::cmd_genfunc(problem, out.as_deref(), vars.as_deref())
        }
        Command::Solve {
            problem,
            box_spec,
            out,
        } => commands::cmd_solve(problem, box_spec, out.as_deref()),
        Command::Green {
            problem,
            tau,
            out,
            vars,
        } => commands::cmd_green(problem, tau, out.as_deref(), vars.as_deref()),
        Command::Expand { gf, order, out } => commands::cmd_expand(gf, *order, out.as_deref()),
        Command::Verify { problem, box_spec } => commands::cmd_verify(problem, box_spec),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
