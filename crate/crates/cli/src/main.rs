mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "eulerspline",
    version,
    about = "Eulerian numbers, B-spline bridges and their Gaussian asymptotics"
)]
struct Cli {
    /// Worker threads for scans and suites (default: all cores). Output does
    /// not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact table of one number family.
    Table(TableArgs),
    /// Run identity suites; exit 1 on the first failing entry.
    Verify(VerifyArgs),
    /// Sup-error scan of an asymptotic approximation with a log-log fit.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFamily {
    Eulerian,
    Refined,
    Descent,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: TableFamily,
    #[arg(long)]
    d: u32,
    /// Index modulus, descent tables only.
    #[arg(long)]
    n: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Bridges,
    Oracle,
    Recurrences,
    Hermite,
    Sincbound,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest order checked (oracle <= 9, bridges and recurrences <= 25).
    #[arg(long)]
    d_max: Option<u32>,
    /// Corrupt one Eulerian recurrence entry to exercise the failure path.
    #[arg(long, hide = true)]
    inject_fault: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanFamilyArg {
    Eulerian,
    Descent,
    Refined,
    Bspline,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Lattice,
    Floor,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OffsetArg {
    Literal,
    Rescaled,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: ScanFamilyArg,
    /// Comma-separated, strictly increasing orders.
    #[arg(long, value_delimiter = ',')]
    d_list: Option<Vec<u32>>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    j: Option<u32>,
    /// Derivative order for the B-spline family.
    #[arg(long, default_value_t = 0)]
    deriv: u32,
    /// Half-width of the standardized window.
    #[arg(long, default_value_t = 3.0)]
    window: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Lattice)]
    mode: ModeArg,
    /// Placement of the descent and refined offsets.
    #[arg(long, value_enum, default_value_t = OffsetArg::Literal)]
    offset: OffsetArg,
    /// Exit 1 when the fitted slope is outside its band.
    #[arg(long)]
    enforce: bool,
    #[command(flatten)]
    output: OutputArgs,
}

/// Failure classes mapped to exit codes.
pub enum Failure {
    /// Bad parameters: exit 2.
    Usage(String),
    /// Check or enforced band failed, or I/O broke: exit 1.
    Run(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Run(format!("{e:#}"))
    }
}

impl From<eulerspline_core::Error> for Failure {
    fn from(e: eulerspline_core::Error) -> Self {
        match e {
            eulerspline_core::Error::Domain(m) => Failure::Usage(m),
            eulerspline_core::Error::Verification(m) => Failure::Run(m),
        }
    }
}

fn emit(doc: &report::ReportDocument, output: &OutputArgs) -> Result<(), Failure> {
    let text = match output.format {
        Format::Csv => doc.to_csv()?,
        Format::Json => doc.to_json()?,
    };
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Run(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Failure::Run(e.to_string()))?;
    }
    match cli.command {
        Command::Table(a) => {
            let doc = commands::table(a.family, a.d, a.n)?;
            emit(&doc, &a.output)?;
            Ok(true)
        }
        Command::Verify(a) => {
            let (doc, passed) = commands::verify(a.suite, a.d_max, a.inject_fault)?;
            emit(&doc, &a.output)?;
            Ok(passed)
        }
        Command::Scan(a) => {
            let params = commands::ScanParams {
                family: a.family,
                d_list: a.d_list,
                n: a.n,
                j: a.j,
                deriv: a.deriv,
                window: a.window,
                mode: a.mode,
                offset: a.offset,
            };
            let (doc, in_band) = commands::scan(&params)?;
            emit(&doc, &a.output)?;
            Ok(in_band || !a.enforce)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            eprintln!("run `eulerspline --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
