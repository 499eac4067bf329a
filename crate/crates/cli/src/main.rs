use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use d2bound::catalog::RankFilter;

mod run;

use run::{Failure, RunConfig};

/// Spacetime-diffusion figure of merit for precision force experiments.
#[derive(Parser)]
#[command(name = "d2bound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the experiment table and the bounds summary (table.csv, bounds.txt).
    Compute(RunArgs),
    /// Render the FOM versus mass figure (figure.svg, figure.dat).
    Figure(RunArgs),
    /// Write bounds.txt and print it.
    Bounds(RunArgs),
    /// Validate a record file and constants without writing anything.
    Validate(RunArgs),
    /// Show the parsed terms, molar mass and nuclei count of a formula.
    Formula { text: String },
}

#[derive(Args)]
struct RunArgs {
    /// Record CSV; the embedded reference table when omitted.
    #[arg(long, value_name = "PATH")]
    records: Option<PathBuf>,
    /// Constants overrides, `name value` per line.
    #[arg(long, value_name = "PATH")]
    constants: Option<PathBuf>,
    /// Experiments shown per category in the figure.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    #[arg(long, default_value = "all", value_parser = parse_filter)]
    filter: RankFilter,
    /// Output directory.
    #[arg(long, value_name = "DIR", default_value = ".")]
    out: PathBuf,
}

fn parse_filter(s: &str) -> Result<RankFilter, String> {
    s.parse()
}

impl From<RunArgs> for RunConfig {
    fn from(a: RunArgs) -> Self {
        RunConfig {
            records_path: a.records,
            constants_path: a.constants,
            k_per_category: a.k as usize,
            filter: a.filter,
            output_dir: a.out,
        }
    }
}

fn main() -> ExitCode {
    // Usage errors are invalid input and share exit code 1; 2 is kept for I/O.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Compute(args) => run::cmd_compute(&args.into()),
        Command::Figure(args) => run::cmd_figure(&args.into()),
        Command::Bounds(args) => run::cmd_bounds(&args.into()),
        Command::Validate(args) => run::cmd_validate(&args.into()),
        Command::Formula { text } => run::cmd_formula(&text),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(lines)) => {
            for line in lines {
                eprintln!("{line}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
