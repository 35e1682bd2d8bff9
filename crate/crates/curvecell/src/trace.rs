//! Curve traces rendered as header-less CSV or a single-path SVG.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use curvecell_core::hilbert::{self, MAX_TRACE_GENERATION};
use curvecell_core::lebesgue::{lebesgue_extended, DEFAULT_PRECISION};
use curvecell_core::{morton, UnitPoint};
use num_rational::Ratio;

use crate::error::{CliError, Result};

/// Side of the SVG view box.
pub const SVG_SIZE: f64 = 1024.0;

/// Lebesgue traces sample at most `4^10 = 2^20` parameters.
pub const MAX_LEBESGUE_GENERATION: u32 = 10;

/// Morton traces use at most 16 bits per axis.
pub const MAX_MORTON_GENERATION: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    Hilbert,
    Lebesgue,
    Morton,
}

impl Curve {
    pub fn max_generation(self) -> u32 {
        match self {
            Curve::Hilbert => MAX_TRACE_GENERATION,
            Curve::Lebesgue => MAX_LEBESGUE_GENERATION,
            Curve::Morton => MAX_MORTON_GENERATION,
        }
    }
}

impl FromStr for Curve {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hilbert" => Ok(Curve::Hilbert),
            "lebesgue" => Ok(Curve::Lebesgue),
            "morton" => Ok(Curve::Morton),
            other => Err(CliError::Usage(format!("unknown curve `{other}`"))),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Curve::Hilbert => "hilbert",
            Curve::Lebesgue => "lebesgue",
            Curve::Morton => "morton",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(CliError::Usage(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceSpec {
    pub curve: Curve,
    pub generation: u32,
    pub format: Format,
}

impl TraceSpec {
    pub fn new(curve: Curve, generation: u32, format: Format) -> Result<Self> {
        if generation > curve.max_generation() {
            return Err(CliError::Usage(format!(
                "{curve} traces support generations up to {}, got {generation}",
                curve.max_generation()
            )));
        }
        Ok(Self { curve, generation, format })
    }

    /// The vertices of the trace in curve order.
    pub fn points(&self) -> Result<Box<dyn Iterator<Item = UnitPoint>>> {
        let k = self.generation;
        let count = 1u64 << (2 * k);
        Ok(match self.curve {
            Curve::Hilbert => Box::new(hilbert::trace_iter(k)?),
            Curve::Lebesgue => {
                let denom = 3u64.pow(2 * k);
                Box::new((0..count).map(move |m| {
                    // Ternary digits are twice the binary digits of m.
                    let numer = (0..2 * k).rev().fold(0u64, |acc, j| acc * 3 + 2 * ((m >> j) & 1));
                    lebesgue_extended(Ratio::new(numer, denom), DEFAULT_PRECISION)
                        .expect("Cantor grid parameter lies in [0, 1]")
                }))
            }
            Curve::Morton => {
                let side = (1u64 << k) as f64;
                Box::new((0..count).map(move |code| {
                    let c = morton::decode(code, 2, k).expect("code fits the layout");
                    UnitPoint { x: (c[0] as f64 + 0.5) / side, y: (c[1] as f64 + 0.5) / side }
                }))
            }
        })
    }

    pub fn write<W: Write>(&self, out: &mut W) -> Result<()> {
        let points = self.points()?;
        match self.format {
            Format::Csv => write_csv(points, out),
            Format::Svg => write_svg(points, out),
        }
    }
}

pub fn write_csv<W: Write>(points: impl Iterator<Item = UnitPoint>, out: &mut W) -> Result<()> {
    for p in points {
        writeln!(out, "{},{}", p.x, p.y)?;
    }
    Ok(())
}

/// One `<path>` through every point; `y` is flipped so the unit square's
/// bottom edge is at the bottom of the picture.
pub fn write_svg<W: Write>(points: impl Iterator<Item = UnitPoint>, out: &mut W) -> Result<()> {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1024 1024" width="1024" height="1024">"#
    )?;
    write!(out, r#"<path fill="none" stroke="black" stroke-width="1" d=""#)?;
    for (i, p) in points.enumerate() {
        let cmd = if i == 0 { "M" } else { " L" };
        write!(out, "{cmd}{} {}", p.x * SVG_SIZE, (1.0 - p.y) * SVG_SIZE)?;
    }
    writeln!(out, r#""/>"#)?;
    writeln!(out, "</svg>")?;
    Ok(())
}
