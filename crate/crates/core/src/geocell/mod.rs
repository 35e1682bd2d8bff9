//! 64-bit cell ids on the sphere.
//!
//! The sphere is projected from its center onto the enclosing cube. Each
//! face carries a Hilbert curve over its dyadic squares, and the six faces
//! are chained so the exit of one face's curve meets the entry of the next,
//! giving a single curve over the whole surface. A [`CellId`] packs the face,
//! the Hilbert position on the face and the level into one `u64`.

mod area;
mod cellid;
mod face;
mod sphere;

pub use area::spherical_triangle_area;
pub use cellid::{CellId, MAX_LEVEL};
pub use face::{face_frame, st_to_uv, uv_to_st, FaceFrame, FaceUV, FACE_COUNT};
pub use sphere::{LatLng, UnitVector};

/// Mean earth radius used for every area and distance claim, in centimetres.
pub const EARTH_RADIUS_CM: f64 = 6.371e8;
