//! Text reports for the `encode`, `decode`, `bench-locality` and
//! `area-stats` subcommands.

use std::f64::consts::PI;
use std::fmt::Write as _;

use curvecell_core::dyadic::cell_count;
use curvecell_core::geocell::{CellId, LatLng, EARTH_RADIUS_CM, MAX_LEVEL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, Result};

pub const MAX_BENCH_LEVEL: u32 = 10;
pub const MAX_AREA_LEVEL: u32 = 8;
pub const DEFAULT_BENCH_SAMPLES: usize = 1_000_000;

/// Steradians to square centimetres on the earth sphere.
pub fn steradians_to_cm2(area: f64) -> f64 {
    area * EARTH_RADIUS_CM * EARTH_RADIUS_CM
}

pub fn encode(lat: f64, lng: f64, level: u32) -> Result<String> {
    let cell = CellId::from_latlng(&LatLng::new(lat, lng)?, level)?;
    Ok(format!(
        "{cell}\nface={} level={} pos={}\n",
        cell.face(),
        cell.level(),
        cell.pos()
    ))
}

pub fn decode(text: &str) -> Result<String> {
    let cell: CellId = text.trim().parse()?;
    let center = cell.center().to_latlng();
    Ok(format!(
        "cell={cell}\nface={} level={} pos={}\ncenter={:.9},{:.9}\narea_cm2={:.6}\n",
        cell.face(),
        cell.level(),
        cell.pos(),
        center.lat(),
        center.lng(),
        steradians_to_cm2(cell.area_steradians()),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distribution {
    pub min: u64,
    pub median: u64,
    pub p99: u64,
    pub max: u64,
}

impl Distribution {
    /// Nearest-rank statistics. `values` must be non-empty.
    fn of(mut values: Vec<u64>) -> Self {
        values.sort_unstable();
        let rank = |q: f64| {
            let r = (q * values.len() as f64).ceil() as usize;
            values[r.clamp(1, values.len()) - 1]
        };
        Self { min: values[0], median: rank(0.5), p99: rank(0.99), max: values[values.len() - 1] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityReport {
    pub level: u32,
    pub samples: usize,
    pub seed: u64,
    pub hilbert: Distribution,
    pub row_major: Distribution,
}

fn row_major_position(cell: CellId) -> u64 {
    let square = cell.square();
    u64::from(cell.face()) * cell_count(cell.level())
        + u64::from(square.y()) * square.side()
        + u64::from(square.x())
}

/// Samples random pairs of edge-adjacent cells (including pairs straddling
/// a face edge) and compares how far apart they land along the Hilbert
/// curve and along a per-face row-major scan.
pub fn bench_locality(level: u32, samples: usize, seed: u64) -> Result<LocalityReport> {
    if level > MAX_BENCH_LEVEL {
        return Err(CliError::Usage(format!("level must be at most {MAX_BENCH_LEVEL}, got {level}")));
    }
    if samples == 0 {
        return Err(CliError::Usage("samples must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = 6 * cell_count(level);
    let mut hilbert = Vec::with_capacity(samples);
    let mut row_major = Vec::with_capacity(samples);
    for _ in 0..samples {
        let cell = CellId::from_curve_position(rng.random_range(0..total), level)?;
        let neighbor = cell.edge_neighbors()[rng.random_range(0..4)];
        hilbert.push(cell.curve_position().abs_diff(neighbor.curve_position()));
        row_major.push(row_major_position(cell).abs_diff(row_major_position(neighbor)));
    }
    Ok(LocalityReport {
        level,
        samples,
        seed,
        hilbert: Distribution::of(hilbert),
        row_major: Distribution::of(row_major),
    })
}

impl LocalityReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let verdict = |a: u64, b: u64| if a < b { "yes" } else { "no" };
        writeln!(out, "level={} samples={} seed={}", self.level, self.samples, self.seed).unwrap();
        writeln!(out, "position difference between edge-adjacent cells").unwrap();
        writeln!(out, "{:<10} {:>12} {:>12} {:>12} {:>12}", "ordering", "min", "median", "p99", "max").unwrap();
        for (name, d) in [("hilbert", &self.hilbert), ("row-major", &self.row_major)] {
            writeln!(out, "{:<10} {:>12} {:>12} {:>12} {:>12}", name, d.min, d.median, d.p99, d.max).unwrap();
        }
        writeln!(
            out,
            "hilbert median < row-major median: {}",
            verdict(self.hilbert.median, self.row_major.median)
        )
        .unwrap();
        writeln!(out, "hilbert p99 < row-major p99: {}", verdict(self.hilbert.p99, self.row_major.p99)).unwrap();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AreaStats {
    pub level: u32,
    pub cells: u64,
    pub min_sr: f64,
    pub mean_sr: f64,
    pub max_sr: f64,
}

impl AreaStats {
    /// Scale factor from this level's cell areas to level-30 areas.
    fn leaf_scale(&self) -> f64 {
        0.25f64.powi((MAX_LEVEL - self.level) as i32)
    }

    /// Level-30 areas in cm², extrapolated: cell shapes are fixed by their
    /// `(s, t)` position, so the extreme cells shrink by `4` per level.
    pub fn leaf_cm2(&self) -> (f64, f64, f64) {
        let scale = self.leaf_scale();
        (
            steradians_to_cm2(self.min_sr * scale),
            steradians_to_cm2(self.mean_sr * scale),
            steradians_to_cm2(self.max_sr * scale),
        )
    }

    pub fn render(&self) -> String {
        let (min, mean, max) = self.leaf_cm2();
        let mut out = String::new();
        writeln!(out, "level={} cells={}", self.level, self.cells).unwrap();
        writeln!(
            out,
            "min_sr={:.6e} mean_sr={:.6e} max_sr={:.6e}",
            self.min_sr, self.mean_sr, self.max_sr
        )
        .unwrap();
        writeln!(out, "level30_min_cm2={min:.6} extrapolated").unwrap();
        writeln!(out, "level30_mean_cm2={mean:.6} extrapolated").unwrap();
        writeln!(out, "level30_max_cm2={max:.6} extrapolated").unwrap();
        writeln!(out, "sphere_radius_km=6371 uv_to_st=quadratic").unwrap();
        writeln!(
            out,
            "note: the min/max spread depends on the quadratic uv-to-st transform; plain central projection gives a much wider spread"
        )
        .unwrap();
        out
    }
}

/// Exhaustive min, mean and max cell area at `level`.
pub fn area_stats(level: u32) -> Result<AreaStats> {
    if level > MAX_AREA_LEVEL {
        return Err(CliError::Usage(format!("level must be at most {MAX_AREA_LEVEL}, got {level}")));
    }
    let cells = 6 * cell_count(level);
    let (mut min, mut max, mut sum) = (f64::MAX, 0.0f64, 0.0);
    for position in 0..cells {
        let area = CellId::from_curve_position(position, level)?.area_steradians();
        min = min.min(area);
        max = max.max(area);
        sum += area;
    }
    // Equal-area bookkeeping: the cells tile the sphere.
    debug_assert!((sum / (4.0 * PI) - 1.0).abs() < 1e-6);
    Ok(AreaStats { level, cells, min_sr: min, mean_sr: sum / cells as f64, max_sr: max })
}
