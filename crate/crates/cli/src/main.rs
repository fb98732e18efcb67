//! `scattime`: temporal functions, dispersion checks and barrier sweeps from the shell.

mod commands;
mod error;
mod format;
mod io;
mod model_file;
mod report;
mod tolerances;

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use scatter_time::dispersion::TailModel;
use scatter_time::{ExtractionOptions, StencilOrder};

use crate::commands::Output;
use crate::error::CliResult;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Stencil {
    #[value(name = "2")]
    Second,
    #[value(name = "4")]
    Fourth,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Tail {
    None,
    W1,
    W2,
}

impl From<Tail> for TailModel {
    fn from(t: Tail) -> Self {
        match t {
            Tail::None => TailModel::None,
            Tail::W1 => TailModel::OneOverOmega,
            Tail::W2 => TailModel::OneOverOmegaSquared,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "scattime", version, about = "Delay and formation times of sampled spectra")]
struct Cli {
    /// Finite-difference stencil order.
    #[arg(long, global = true, value_enum, default_value = "2")]
    stencil: Stencil,
    /// Tail continuation for Hilbert transforms.
    #[arg(long, global = true, value_enum, default_value = "w1")]
    tail: Tail,
    /// Also write a gnuplot script next to each table.
    #[arg(long, global = true)]
    gnuplot: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectrum table to temporal table.
    Extract {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Largest accepted phase step between neighbouring nodes.
        #[arg(long, default_value_t = PI)]
        unwrap_tol: f64,
    },
    /// Sample a model file; writes PREFIX.spectrum.csv and PREFIX.tau.csv.
    #[command(allow_negative_numbers = true)]
    Model {
        model: PathBuf,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        points: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Kramers-Kronig residual of a spectrum or temporal table.
    Kk { input: PathBuf },
    /// Frequency sum rule from a spectrum and its temporal table.
    Sumrule { spectrum: PathBuf, tau: PathBuf },
    /// Winding number of a pole-zero model around a rectangle.
    #[command(allow_negative_numbers = true)]
    Winding {
        model: PathBuf,
        #[arg(long, num_args = 4, value_names = ["X0", "X1", "Y0", "Y1"])]
        rect: Vec<f64>,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Transmission, phase and temporal functions across an energy range.
    #[command(allow_negative_numbers = true)]
    Barrier {
        model: PathBuf,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        points: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// JSON summary of spectrum, temporal and model files.
    Report {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn print_or_write(text: &str, output: Option<&PathBuf>) -> CliResult<()> {
    match output {
        Some(path) => io::write_text(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| error::CliError::Io(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let stencil = match cli.stencil {
        Stencil::Second => StencilOrder::Second,
        Stencil::Fourth => StencilOrder::Fourth,
    };
    let options = ExtractionOptions { stencil, ..ExtractionOptions::default() };
    let tail = TailModel::from(cli.tail);
    match cli.command {
        Command::Extract { input, output, unwrap_tol } => {
            let options = ExtractionOptions { unwrap_tolerance: unwrap_tol, ..options };
            commands::extract(&input, &options, &Output { path: output, gnuplot: cli.gnuplot })
        }
        Command::Model { model, from, to, points, output } => {
            commands::model(&model, from, to, points, &output, cli.gnuplot)
        }
        Command::Kk { input } => print_or_write(&commands::kk(&input, tail)?, None),
        Command::Sumrule { spectrum, tau } => print_or_write(&commands::sumrule(&spectrum, &tau)?, None),
        Command::Winding { model, rect, samples } => {
            print_or_write(&commands::winding(&model, &rect, samples)?, None)
        }
        Command::Barrier { model, from, to, points, output } => {
            let table = commands::barrier(&model, from, to, points)?;
            print_or_write(&table, output.as_ref())?;
            match output {
                Some(path) if cli.gnuplot => io::write_gnuplot(&path, &commands::BARRIER_HEADER),
                _ => Ok(()),
            }
        }
        Command::Report { inputs, output } => {
            print_or_write(&report::report(&inputs, &options, tail)?, output.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("scattime: {e}");
            ExitCode::from(e.code())
        }
    }
}
