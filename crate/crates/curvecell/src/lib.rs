//! Command-line front end for `curvecell-core`: curve traces as CSV or SVG,
//! cell id encoding and decoding, and locality and area diagnostics.

pub mod cli;
pub mod error;
pub mod report;
pub mod trace;

pub use error::{CliError, Result};
