//! `hopf-gadget`: prepare, project, sample and decompose qubit states from the
//! command line. Every command prints one JSON object on stdout.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on a usage
//! error.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopf_gadget::{Complex64, Tolerances};

use commands::{CommandResult, UsageError};

#[derive(Debug, Parser)]
#[command(name = "hopf-gadget", version, about = "Qubit preparation via the Hopf fibration and a four-plate gadget")]
struct Cli {
    /// Read angle arguments in degrees instead of radians.
    #[arg(long, global = true)]
    degrees: bool,

    /// Multiply every numerical tolerance by this factor.
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    tolerance_scale: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve for the gadget setting that prepares the Bloch target (θ, φ).
    Prepare {
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long, allow_negative_numbers = true)]
        phi: f64,
    },
    /// Hopf-project the state a|0⟩ + b|1⟩.
    Project {
        #[arg(long, allow_negative_numbers = true)]
        a_re: f64,
        #[arg(long, allow_negative_numbers = true)]
        a_im: f64,
        #[arg(long, allow_negative_numbers = true)]
        b_re: f64,
        #[arg(long, allow_negative_numbers = true)]
        b_im: f64,
    },
    /// Sample n points of the fiber over a point of the unit 2-sphere.
    Fiber {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
        #[arg(long)]
        n: usize,
        /// Write the CSV here instead of embedding it in the JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Plate angles for the Euler rotation (ξ, η, ζ).
    Decompose {
        #[arg(long, allow_negative_numbers = true)]
        xi: f64,
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        #[arg(long, allow_negative_numbers = true)]
        zeta: f64,
    },
    /// Run the randomized self-check suite.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
}

fn run(cli: Cli) -> Result<CommandResult, UsageError> {
    if !(cli.tolerance_scale.is_finite() && cli.tolerance_scale > 0.0) {
        return Err(UsageError(format!(
            "--tolerance-scale must be a positive finite number, got {}",
            cli.tolerance_scale
        )));
    }
    let tol = Tolerances::scaled(cli.tolerance_scale);
    let angle = |v: f64| if cli.degrees { commands::degrees_to_radians(v) } else { v };

    match cli.command {
        Command::Prepare { theta, phi } => commands::cmd_prepare(angle(theta), angle(phi), &tol),
        Command::Project { a_re, a_im, b_re, b_im } => {
            commands::cmd_project(Complex64::new(a_re, a_im), Complex64::new(b_re, b_im), &tol)
        }
        Command::Fiber { x, y, z, n, out } => commands::cmd_fiber(x, y, z, n, out.as_deref(), &tol),
        Command::Decompose { xi, eta, zeta } => commands::cmd_decompose(angle(xi), angle(eta), angle(zeta), &tol),
        Command::Verify { seed, samples } => {
            let (result, report) = commands::cmd_verify(seed, samples, cli.tolerance_scale)?;
            for line in commands::summary_lines(&report) {
                eprintln!("{line}");
            }
            Ok(result)
        }
    }
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
        Ok(result) => {
            let json = serde_json::to_string_pretty(&result).expect("command results serialize");
            // A closed pipe is not an error worth a panic.
            let _ = writeln!(std::io::stdout().lock(), "{json}");
            if result.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
