//! `espalier`: counts of espaliers, pyramids and related polycubes.
//!
//! `--dim` is always the ambient dimension. Internally the counts are
//! coefficients of `d`-th convolution powers with `d = dim - 1`.

mod compute;
mod explore;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use espalier_core::{Error, Family, Partition};

#[derive(Parser)]
#[command(name = "espalier", version, about = "Espalier and pyramid polycube enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts by volume for volumes 1..=MAX_VOLUME.
    Sequence {
        family: SeqFamily,
        max_volume: u32,
        /// Ambient dimension (the algebra uses dim - 1).
        #[arg(long)]
        dim: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Counts at one volume, broken down by height, multivolume or top
    /// plateau dimensions.
    Table {
        family: SeqFamily,
        volume: u32,
        #[arg(long, value_enum)]
        group_by: GroupBy,
        /// Include every volume from 1 to VOLUME.
        #[arg(long)]
        up_to: bool,
        /// Ambient dimension (the algebra uses dim - 1).
        #[arg(long)]
        dim: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify { suite: Suite },
    /// Möbius value of the projection order between (1,…,1) and TOP.
    Mobius {
        /// Height of TOP.
        #[arg(long = "h")]
        height: usize,
        /// Comma-separated weakly decreasing parts, e.g. 6,2.
        top: String,
        /// Tabulate the height-2 patterns instead.
        #[arg(long)]
        explore: bool,
        /// Range used by --explore.
        #[arg(long, default_value_t = 30)]
        max: u32,
    },
    /// Print every cell set of the given volume found by the brute-force
    /// enumerator, as "x y z" lines separated by blank lines.
    Dump { family: OracleFamily, volume: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqFamily {
    Espalier,
    Pyramid,
    QuasiEspalier,
    QuasiPyramidLimit,
    PlateauDirected,
    Plateau,
    HcvPolyomino,
}

impl SeqFamily {
    pub fn name(self) -> &'static str {
        match self {
            SeqFamily::Espalier => "espalier",
            SeqFamily::Pyramid => "pyramid",
            SeqFamily::QuasiEspalier => "quasi-espalier",
            SeqFamily::QuasiPyramidLimit => "quasi-pyramid-limit",
            SeqFamily::PlateauDirected => "plateau-directed",
            SeqFamily::Plateau => "plateau",
            SeqFamily::HcvPolyomino => "hcv-polyomino",
        }
    }

    pub fn stacked(self) -> Option<Family> {
        match self {
            SeqFamily::Espalier => Some(Family::Espalier),
            SeqFamily::Pyramid => Some(Family::Pyramid),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleFamily {
    Espalier,
    Pyramid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupBy {
    Height,
    Multivolume,
    PlateauDims,
}

impl GroupBy {
    pub fn name(self) -> &'static str {
        match self {
            GroupBy::Height => "height",
            GroupBy::Multivolume => "multivolume",
            GroupBy::PlateauDims => "plateau-dims",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    PaperSequences,
    Oracle,
    Algebra,
    Poset,
    Genfunc,
    Degree,
    All,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Overflow(String),
    Failed(usize),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow(_) | Error::NonUnitConstant(_) => CliError::Overflow(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Overflow(_) => 3,
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Sequence { family, max_volume, dim, format } => {
            let dim = compute::resolve_dim(family, dim)?;
            let counts = compute::sequence(family, max_volume, dim)?;
            output::sequence(out, family, dim, max_volume, &counts, format)
        }
        Command::Table { family, volume, group_by, up_to, dim, format } => {
            let dim = compute::resolve_dim(family, dim)?;
            let rows = compute::table(family, volume, group_by, up_to, dim)?;
            output::table(out, family, dim, volume, group_by, up_to, &rows, format)
        }
        Command::Verify { suite } => verify::run(out, suite),
        Command::Mobius { height, top, explore, max } => {
            let top = Partition::parse(&top)?;
            if top.height() != height {
                return Err(CliError::Usage(format!(
                    "--h {height} does not match the height of {top}"
                )));
            }
            if explore {
                explore::run(out, height, max)
            } else {
                let bottom = Partition::ones(height)?;
                let value = espalier_core::divorder::mobius(&bottom, &top)?;
                writeln!(out, "{value}").map_err(io_error)
            }
        }
        Command::Dump { family, volume } => {
            let family = match family {
                OracleFamily::Espalier => Family::Espalier,
                OracleFamily::Pyramid => Family::Pyramid,
            };
            let sets = espalier_core::oracle::enumerate(family, volume)?;
            write!(out, "{}", espalier_core::oracle::dump(&sets)).map_err(io_error)
        }
    }
}

pub fn io_error(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("output error: {e}"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Overflow(msg) => eprintln!("overflow: {msg}"),
                CliError::Failed(n) => eprintln!("{n} check(s) failed"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
