use std::io::Write;

use clap::{Parser, Subcommand};

use crate::error::{CliError, Result};
use crate::report;
use crate::trace::{Curve, Format, TraceSpec};

#[derive(Debug, Parser)]
#[command(name = "curvecell", version, about = "Space-filling curves and 64-bit sphere cell ids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the vertices of a curve iteration as CSV or SVG.
    Trace {
        /// hilbert, lebesgue or morton
        #[arg(long, value_parser = parse_curve)]
        curve: Curve,
        /// Iteration k; the trace has 4^k points
        #[arg(long)]
        generation: u32,
        /// csv or svg
        #[arg(long, value_parser = parse_format, default_value = "csv")]
        format: Format,
    },
    /// Print the cell id containing a latitude/longitude at a level.
    #[command(allow_negative_numbers = true)]
    Encode {
        /// Latitude in degrees, -90 to 90
        lat: f64,
        /// Longitude in degrees, -180 to 180
        lng: f64,
        /// Cell level, 0 to 30
        level: u32,
    },
    /// Describe a cell id given as 16 hex digits.
    Decode { cell: String },
    /// Compare curve-position gaps of adjacent cells under Hilbert and
    /// row-major orderings.
    BenchLocality {
        /// Cell level, at most 10
        #[arg(long, default_value_t = 8)]
        level: u32,
        /// Number of random adjacent pairs
        #[arg(long, default_value_t = report::DEFAULT_BENCH_SAMPLES)]
        samples: usize,
        /// Seed for the ChaCha8 sampler
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Min, mean and max cell area at a level, with level-30 extrapolation.
    AreaStats {
        /// Cell level, at most 8
        #[arg(long)]
        level: u32,
    },
}

fn parse_curve(s: &str) -> Result<Curve, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

pub fn execute<W: Write>(command: &Command, out: &mut W) -> Result<()> {
    match *command {
        Command::Trace { curve, generation, format } => {
            TraceSpec::new(curve, generation, format)?.write(out)?;
        }
        Command::Encode { lat, lng, level } => out.write_all(report::encode(lat, lng, level)?.as_bytes())?,
        Command::Decode { ref cell } => out.write_all(report::decode(cell)?.as_bytes())?,
        Command::BenchLocality { level, samples, seed } => {
            out.write_all(report::bench_locality(level, samples, seed)?.render().as_bytes())?
        }
        Command::AreaStats { level } => out.write_all(report::area_stats(level)?.render().as_bytes())?,
    }
    out.flush()?;
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status: 0 on success, 2 on usage or range errors.
pub fn run<I, T, O, E>(args: I, out: &mut O, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "curvecell: {e}");
            e.exit_code()
        }
    }
}
