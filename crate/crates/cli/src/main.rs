use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use exlat_core::eigen::eigenvalues;
use exlat_core::report::{BoundMode, InputSpec, MatrixSpec, Options, ResultReport, Status, Verbosity};
use exlat_core::Error;

/// Exponent lattices of nonzero algebraic numbers.
#[derive(Parser)]
#[command(name = "exlat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of the multiplicative relations among the numbers in a JSON file.
    Basis {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Same, for the distinct eigenvalues of a diagonalizable rational matrix.
    Eigenlattice {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum)]
    bound_mode: Option<Mode>,
    #[arg(long)]
    max_box: Option<u64>,
    #[arg(long, value_enum)]
    verbosity: Option<Level>,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Certified,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quiet,
    Normal,
    Verbose,
}

impl Common {
    fn apply(&self, o: &mut Options) {
        if let Some(m) = self.bound_mode {
            o.bound_mode = match m {
                Mode::Certified => BoundMode::Certified,
                Mode::Heuristic => BoundMode::Heuristic,
            };
        }
        if let Some(b) = self.max_box {
            o.max_box = b;
        }
        if let Some(v) = self.verbosity {
            o.verbosity = match v {
                Level::Quiet => Verbosity::Quiet,
                Level::Normal => Verbosity::Normal,
                Level::Verbose => Verbosity::Verbose,
            };
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {}", path.display(), e)))
}

fn run(cli: &Cli) -> Result<(ResultReport, Options, &Common), Error> {
    match &cli.command {
        Command::Basis { file, common } => {
            let mut spec = InputSpec::from_json(&read(file)?)?;
            common.apply(&mut spec.options);
            let xs = spec.numbers()?;
            Ok((ResultReport::compute(&xs, spec.options.strategy())?, spec.options, common))
        }
        Command::Eigenlattice { file, common } => {
            let mut spec = MatrixSpec::from_json(&read(file)?)?;
            common.apply(&mut spec.options);
            let xs = eigenvalues(&spec.matrix()?)?;
            Ok((ResultReport::compute(&xs, spec.options.strategy())?, spec.options, common))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, options, common) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(1);
        }
    };
    if let Err(e) = report.verify() {
        eprintln!("error: {}", e);
        return ExitCode::from(1);
    }
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    match &common.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("error: {}: {}", path.display(), e);
                return ExitCode::from(1);
            }
        }
        None => println!("{}", json),
    }
    if options.verbosity != Verbosity::Quiet {
        eprintln!(
            "{:?}: rank {}, {} box searches, {} certificates",
            report.status,
            report.basis.len(),
            report.box_searches,
            report.certificates
        );
    }
    if options.verbosity == Verbosity::Verbose {
        for (k, n) in report.numbers.iter().enumerate() {
            eprintln!("  x{} ~ {} + {}i  minpoly {:?}", k + 1, n.approx[0], n.approx[1], n.minpoly);
        }
    }
    match report.status {
        Status::Complete => ExitCode::SUCCESS,
        Status::Inconclusive => ExitCode::from(2),
    }
}
