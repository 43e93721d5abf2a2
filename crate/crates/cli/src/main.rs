//! `efimov`: tables and figure data for the Efimov spectrum of the cut-off
//! inverse-square potential.

mod commands;
mod table;

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::table::Table;

#[derive(Parser, Debug)]
#[command(name = "efimov", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues ln(x_c)_n (exact and WKB) and 1/C_n.
    Table1(ListArgs),
    /// Mean squared radii <x²> of exact and uniform WKB states.
    Table2(ListArgs),
    /// Samples of one wavefunction for plotting.
    Wavefunction(WaveArgs),
    /// Truncated, smoothed trace formula against the smooth density.
    Trace(TraceArgs),
    /// Exact and WKB levels next to the geometric spectrum.
    Spectrum(ListArgs),
    /// Inverse-Abel reconstruction of the potential from the smooth density.
    Abel(AbelArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Channel constant s0 (default π/ln 22.694 ≈ 1.00624).
    #[arg(long, default_value_t = efimov_core::S0_BOSONS)]
    pub s0: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the artifact here; a rounded view goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Wavefunction grid density (samples per unit x) for table2 and
    /// wavefunction; number of samples for trace and abel.
    #[arg(long = "grid-points")]
    pub grid_points: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[command(flatten)]
    pub common: Common,
    /// State indices, comma separated.
    #[arg(long = "n-list", visible_alias = "n", value_delimiter = ',')]
    pub n_list: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
pub struct WaveArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = WaveMethod::Qm)]
    pub method: WaveMethod,
}

#[derive(Args, Debug)]
pub struct TraceArgs {
    #[command(flatten)]
    pub common: Common,
    /// Number of harmonics; 0 keeps only the smooth part.
    #[arg(long, default_value_t = 200)]
    pub kmax: usize,
    /// Gaussian width in ln|E|.
    #[arg(long, default_value_t = 0.01)]
    pub smoothing: f64,
    /// Levels covered below E_0.
    #[arg(long, default_value_t = 5)]
    pub levels: usize,
}

#[derive(Args, Debug)]
pub struct AbelArgs {
    #[command(flatten)]
    pub common: Common,
    /// Smallest |V/E_0| sampled.
    #[arg(long, default_value_t = 1e-8)]
    pub v_min: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum WaveMethod {
    Qm,
    #[value(name = "wkb_raw", alias = "wkb-raw")]
    WkbRaw,
    #[value(name = "wkb_uniform", alias = "wkb-uniform")]
    WkbUniform,
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}

/// A closed pipe (e.g. `| head`) is not an error.
fn to_stdout(text: &str) -> Result<(), String> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(format!("cannot write to stdout: {e}")),
        _ => Ok(()),
    }
}

fn emit(table: &Table, common: &Common) -> Result<(), String> {
    let body = render(table, common.format);
    match &common.out {
        Some(path) => {
            fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            to_stdout(&table.to_human())
        }
        None => to_stdout(&body),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table1(a) => commands::table1(a).map(|t| (t, &a.common)),
        Command::Table2(a) => commands::table2(a).map(|t| (t, &a.common)),
        Command::Wavefunction(a) => commands::wavefunction(a).map(|t| (t, &a.common)),
        Command::Trace(a) => commands::trace(a).map(|t| (t, &a.common)),
        Command::Spectrum(a) => commands::spectrum(a).map(|t| (t, &a.common)),
        Command::Abel(a) => commands::abel(a).map(|t| (t, &a.common)),
    }
    .and_then(|(t, common)| emit(&t, common));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("efimov: {msg}");
            ExitCode::FAILURE
        }
    }
}
