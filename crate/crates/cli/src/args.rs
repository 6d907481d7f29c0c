use std::path::PathBuf;

use bodies::BodySpec;
use clap::{Args, Parser, Subcommand, ValueEnum};
use entire::{SeriesSpec, TrendMode};
use rootloc::Mode;
use weyl::WeylIndex;

#[derive(Debug, Parser)]
#[command(name = "tubepoly", version, about = "Minkowski and Weyl polynomials of convex bodies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Working precision of the root finder, in bits.
    #[arg(long, global = true, default_value_t = 256)]
    pub precision: usize,
    /// Half-plane and axis tolerance, relative to |z| + 1.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Write the artifact here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Format of the --out artifact.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A body given inline (`ball:3`, `adjoint:ball:2,q=1`) or as a measure list.
#[derive(Debug, Clone, Args)]
pub struct BodyArg {
    #[arg(long, value_parser = parse_body)]
    pub body: BodySpec,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact Minkowski polynomial and cross-sectional measures.
    Minkowski(BodyArg),
    /// Weyl polynomial of the boundary surface.
    Weyl {
        #[command(flatten)]
        body: BodyArg,
        #[arg(long, default_value = "1", value_parser = parse_index)]
        index: WeylIndex,
        /// Also list the roots.
        #[arg(long)]
        roots: bool,
    },
    /// Root location with a determinant certificate.
    Classify {
        #[command(flatten)]
        body: BodyArg,
        /// Classify the Weyl polynomial of this index instead of M.
        #[arg(long, value_parser = parse_index)]
        index: Option<WeylIndex>,
        /// Defaults to dissipative for M and conservative for W.
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Jensen polynomial of a series.
    Jensen {
        #[arg(long, value_parser = parse_series)]
        series: SeriesSpec,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        roots: bool,
    },
    /// Root counts of Jensen truncations over a range of degrees.
    SeriesScan {
        #[arg(long, value_parser = parse_series)]
        series: SeriesSpec,
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',', default_value = "10,20,40,80")]
        degrees: Vec<u32>,
        #[arg(long, default_value = "off-axis", value_parser = parse_trend_mode)]
        mode: TrendMode,
    },
    /// Alexandrov-Fenchel chains of the cross-sectional measures.
    AfCheck(BodyArg),
    /// Closed-form small-dimension inequalities.
    Lowdim {
        #[command(flatten)]
        body: BodyArg,
        /// Defaults to the number of measures minus one.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Search for a log-concave sequence with a negative Hurwitz minor.
    Counterexample {
        #[arg(long, default_value_t = 30)]
        n: u32,
        /// Maximum number of families to try.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Monte Carlo tube volumes against the polynomial.
    McVolume {
        #[command(flatten)]
        body: BodyArg,
        /// Comma-separated radii.
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.25,0.5")]
        t: Vec<f64>,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Index shift for the surface of B x 0^q.
    Reduce {
        #[command(flatten)]
        body: BodyArg,
        #[arg(long, default_value_t = 1)]
        index: u32,
        #[arg(long)]
        q: u32,
    },
}

fn parse_body(s: &str) -> Result<BodySpec, String> {
    s.parse().map_err(|e: bodies::BodyError| e.to_string())
}

fn parse_index(s: &str) -> Result<WeylIndex, String> {
    s.parse().map_err(|e: weyl::WeylError| e.to_string())
}

fn parse_series(s: &str) -> Result<SeriesSpec, String> {
    s.parse().map_err(|e: entire::EntireError| e.to_string())
}

fn parse_trend_mode(s: &str) -> Result<TrendMode, String> {
    s.parse().map_err(|e: entire::EntireError| e.to_string())
}
