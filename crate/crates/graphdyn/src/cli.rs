use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphdyn_core::simulate::Method;

use crate::commands::{self, Outcome, SimulateOptions};
use crate::inputs::SystemArgs;
use crate::{json, repro, CliError};

pub const EXIT_USER: u8 = 1;
pub const EXIT_INTERNAL: u8 = 2;
pub const EXIT_REPRO_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "graphdyn", version, about = "Boundary polynomials of graphs and the planar systems built from them")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the JSON document instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Write the JSON document to this file (a directory for `simulate`)
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest number of seeds `simulate` accepts
    #[arg(long, global = true, default_value_t = 64)]
    seed_cap: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Rk4,
    Rkf45,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Boundary polynomial of a graph
    Poly {
        graph: String,
        /// Parity-weighted polynomial; needs --k and --u
        #[arg(long)]
        weighted: bool,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// Print the diagonal B(x, x)
        #[arg(long)]
        diag: bool,
    },
    /// Number of subsets with boundary size i and size j
    Coeff { graph: String, i: usize, j: usize },
    /// Linear classification of an equilibrium
    Classify {
        #[command(flatten)]
        system: SystemArgs,
        /// Point x,y; defaults to the equilibrium the system is built around
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Liapunov number of the weak focus built from two graphs
    Lyapunov {
        g1: String,
        g2: String,
        /// Linear part a1,a2,a3,a4 for the generalized number
        #[arg(long, allow_hyphen_values = true)]
        general: Option<String>,
        /// Evaluate the formula even if a graph has isolated vertices
        #[arg(long)]
        allow_isolated: bool,
    },
    /// Radius polynomial and its roots, or the inverse fit
    Radii {
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// Target radii r1,r2,... (rationals or sqrt(q))
        #[arg(long)]
        fit: Option<String>,
        /// Target squared radii rho1,rho2,...
        #[arg(long)]
        fit_squared: Option<String>,
    },
    /// Integrate a system and look for limit cycles
    Simulate {
        #[command(flatten)]
        system: SystemArgs,
        /// Seed radii on the positive x-axis
        #[arg(long)]
        seeds: String,
        #[arg(long, value_enum, default_value = "rk4")]
        method: MethodArg,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Bound on a single return to the section
        #[arg(long, default_value_t = 100.0)]
        max_time: f64,
        /// Length of the written trajectories
        #[arg(long, default_value_t = 20.0)]
        duration: f64,
        /// Integrate in reverse time
        #[arg(long)]
        backward: bool,
    },
    /// Re-run every checked claim and report pass or fail
    Repro {
        /// Run only entries whose name contains this text
        #[arg(long)]
        only: Option<String>,
        /// Also write the JSON report here
        report: Option<PathBuf>,
    },
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Poly { graph, weighted, k, u, diag } => {
            commands::poly(graph, *weighted, k.as_deref(), u.as_deref(), *diag)
        }
        Command::Coeff { graph, i, j } => commands::coeff(graph, *i, *j),
        Command::Classify { system, at } => commands::classify(system, at.as_deref()),
        Command::Lyapunov { g1, g2, general, allow_isolated } => {
            commands::lyapunov(g1, g2, general.as_deref(), *allow_isolated)
        }
        Command::Radii { g1, k, u, fit, fit_squared } => {
            commands::radii(g1, k.as_deref(), u.as_deref(), fit.as_deref(), fit_squared.as_deref())
        }
        Command::Simulate { system, seeds, method, step, tol, max_time, duration, backward } => {
            let opts = SimulateOptions {
                seeds,
                method: match method {
                    MethodArg::Rk4 => Method::Rk4Fixed,
                    MethodArg::Rkf45 => Method::Rkf45Adaptive,
                },
                step: *step,
                tolerance: *tol,
                max_time: *max_time,
                duration: *duration,
                backward: *backward,
                seed_cap: cli.seed_cap,
            };
            commands::simulate(system, &opts, cli.out.as_deref())
        }
        Command::Repro { only, report } => {
            let r = repro::run(only.as_deref());
            let doc = json::stamp(serde_json::to_value(&r).map_err(|e| CliError::Internal(e.to_string()))?);
            if let Some(path) = report {
                commands::write(path, &commands::pretty(&doc))?;
            }
            Ok(Outcome {
                text: r.table(),
                json: doc,
                failed: r.summary.fail > 0,
            })
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    let simulate = matches!(cli.command, Command::Simulate { .. });
    if let (Some(path), false) = (&cli.out, simulate) {
        commands::write(path, &commands::pretty(&outcome.json))?;
    }
    if cli.json {
        print!("{}", commands::pretty(&outcome.json));
    } else {
        println!("{}", outcome.text);
    }
    Ok(())
}

/// Parses `args`, runs the command and maps the result to an exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USER) } else { ExitCode::SUCCESS };
        }
    };
    let result = std::panic::catch_unwind(|| dispatch(&cli).and_then(|o| emit(&cli, &o).map(|_| o.failed)));
    match result {
        Ok(Ok(false)) => ExitCode::SUCCESS,
        Ok(Ok(true)) => ExitCode::from(EXIT_REPRO_FAILED),
        Ok(Err(CliError::User(m))) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USER)
        }
        Ok(Err(CliError::Internal(m))) => {
            eprintln!("internal error: {m}");
            ExitCode::from(EXIT_INTERNAL)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL),
    }
}
