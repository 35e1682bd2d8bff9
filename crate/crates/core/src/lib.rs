//! Space-filling curves over the unit interval and a 64-bit cell index for
//! the sphere.
//!
//! - [`dyadic`]: quartic intervals of `[0,1]` and dyadic squares of `[0,1]²`,
//!   the integer grids every curve here is built on.
//! - [`hilbert`]: the Hilbert correspondence between intervals and squares,
//!   its finite-resolution curve and locality estimators.
//! - [`lebesgue`]: Cantor-set digit arithmetic, the Cantor-Lebesgue function
//!   and Lebesgue's curve.
//! - [`morton`]: n-dimensional Z-order codes.
//! - [`geocell`]: sphere to cube projection and 64-bit [`CellId`]s ordered
//!   along one Hilbert curve threaded through all six cube faces.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dyadic;
pub mod error;
pub mod geocell;
pub mod hilbert;
pub mod lebesgue;
pub mod morton;

pub use dyadic::{DyadicSquare, QuarticInterval, UnitPoint, MAX_GENERATION};
pub use error::{Error, Result};
pub use geocell::{CellId, FaceUV, LatLng, UnitVector};
pub use hilbert::{phi, phi_inverse, point_at, trace, Orientation, Quadrant};
pub use lebesgue::{
    cantor_lebesgue, gap_of, lebesgue_extended, lebesgue_point, CantorGap, TernaryExpansion,
};
