use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

mod commands;

use commands::{CliError, Report};

/// Exact sizing of rectangle tilings and their resistor networks.
///
/// Exit status: 0 on success, 1 when a mathematical check fails, 2 on
/// usage or input errors.
#[derive(Parser)]
#[command(name = "squaring", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the exact rectangles tile the big rectangle.
    Validate { file: PathBuf },
    /// Solve for exact sizes with the big vertical side 1.
    Solve {
        file: PathBuf,
        /// Write the sized dissection here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether a sized tiling by squares has a rational side ratio.
    DehnCheck { file: PathBuf },
    /// Emit the resistor network of a tiling.
    ToCircuit {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Total resistance of a netlist.
    Resistance {
        file: PathBuf,
        /// Read values as rational functions of t.
        #[arg(long)]
        symbolic: bool,
    },
    /// Compare a tiling's sizes with its network's currents.
    EquivCheck { file: PathBuf },
    /// Integer polynomial vanishing at R for a square tiled by R and 1/R.
    Theorem1 {
        file: PathBuf,
        /// R itself; inferred from the aspects when omitted.
        #[arg(long)]
        r: Option<String>,
    },
    /// Checks around similar-rectangle tilings of a square.
    Lfs {
        #[command(subcommand)]
        command: LfsCommand,
    },
    /// Draw a tiling as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum LfsCommand {
    /// Whether every conjugate has positive real part.
    #[command(group(ArgGroup::new("input").required(true).args(["elem", "poly"])))]
    Cond3 {
        /// Element of Q(sqrt d), e.g. "3/2 + 1/2*sqrt(3)".
        #[arg(long)]
        elem: Option<String>,
        /// Radicand for --elem.
        #[arg(long, requires = "elem")]
        d: Option<u64>,
        /// Integer polynomial in x, e.g. "2x^2-6x+3".
        #[arg(long)]
        poly: Option<String>,
    },
    /// Value of a ladder's continued fraction.
    EvalCf { file: PathBuf },
    /// Build the ladder tiling of the unit square.
    Build {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Validate { file } => commands::validate(file),
        Command::Solve { file, out } => commands::solve(file, out.as_deref()),
        Command::DehnCheck { file } => commands::dehn(file),
        Command::ToCircuit { file, out } => commands::to_circuit(file, out.as_deref()),
        Command::Resistance { file, symbolic } => commands::resistance_cmd(file, *symbolic),
        Command::EquivCheck { file } => commands::equiv(file),
        Command::Theorem1 { file, r } => commands::theorem1(file, r.as_deref()),
        Command::Lfs { command } => match command {
            LfsCommand::Cond3 { elem, d, poly } => {
                commands::cond3(elem.as_deref(), *d, poly.as_deref())
            }
            LfsCommand::EvalCf { file } => commands::eval_cf(file),
            LfsCommand::Build { file, out } => commands::build(file, out),
        },
        Command::Render { file, out } => commands::render(file, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("json values serialize")
            } else {
                report.text
            };
            // a closed pipe (e.g. `| head`) is not worth a panic
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
