use core::fmt;
use core::str::FromStr;

use super::area::spherical_triangle_area;
use super::face::{face_frame, st_to_uv, uv_to_st, FaceUV, FACE_COUNT};
use super::sphere::{LatLng, UnitVector};
use crate::dyadic::{cell_count, DyadicSquare, QuarticInterval};
use crate::error::{Error, Result};
use crate::hilbert::{phi, phi_inverse};

/// Deepest level: 3 face bits + 60 position bits + the sentinel fill 64 bits.
pub const MAX_LEVEL: u32 = 30;

const FACE_SHIFT: u32 = 61;
const POS_MASK: u64 = (1 << FACE_SHIFT) - 1;

/// A cell of the sphere at some level.
///
/// Bits, most significant first: 3 face bits (0–5), `2 * level` bits of
/// Hilbert position on the face, a single 1, then zeros. The position of
/// that trailing 1 encodes the level.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId(u64);

#[inline]
const fn sentinel(level: u32) -> u64 {
    1 << (60 - 2 * level)
}

fn check_level(level: u32) -> Result<()> {
    if level > MAX_LEVEL {
        return Err(Error::LevelTooLarge { level, max: MAX_LEVEL });
    }
    Ok(())
}

/// Last cell index whose closed interval `[i/n, (i+1)/n]` contains `s`;
/// grid lines go to the lower cell.
fn grid_index(s: f64, side: u64) -> u32 {
    let scaled = libm::ceil(s * side as f64) as i64 - 1;
    scaled.clamp(0, side as i64 - 1) as u32
}

impl CellId {
    pub fn from_raw(raw: u64) -> Result<Self> {
        let zeros = raw.trailing_zeros();
        if raw == 0 || raw >> FACE_SHIFT >= u64::from(FACE_COUNT) || zeros > 60 || !(60 - zeros).is_multiple_of(2) {
            return Err(Error::InvalidCellId(raw));
        }
        Ok(Self(raw))
    }

    pub fn from_face_pos_level(face: u8, pos: u64, level: u32) -> Result<Self> {
        check_level(level)?;
        face_frame(face)?;
        if pos >= cell_count(level) {
            return Err(Error::IndexOutOfRange { generation: level, index: pos });
        }
        Ok(Self(u64::from(face) << FACE_SHIFT | pos << (61 - 2 * level) | sentinel(level)))
    }

    /// The cell covering `square` on `face`; the level is the square's
    /// generation.
    pub fn from_face_square(face: u8, square: DyadicSquare) -> Result<Self> {
        check_level(square.generation())?;
        Self::from_face_pos_level(face, phi_inverse(square).index(), square.generation())
    }

    pub fn from_face_uv(p: &FaceUV, level: u32) -> Result<Self> {
        check_level(level)?;
        let side = 1u64 << level;
        let square = DyadicSquare::new(
            level,
            grid_index(uv_to_st(p.u), side),
            grid_index(uv_to_st(p.v), side),
        )?;
        Self::from_face_square(p.face, square)
    }

    pub fn from_vector(p: &UnitVector, level: u32) -> Result<Self> {
        Self::from_face_uv(&FaceUV::from_vector(p), level)
    }

    pub fn from_latlng(p: &LatLng, level: u32) -> Result<Self> {
        Self::from_vector(&p.to_vector(), level)
    }

    /// Level-`level` cell at `position` along the curve through all faces.
    pub fn from_curve_position(position: u64, level: u32) -> Result<Self> {
        check_level(level)?;
        let per_face = cell_count(level);
        let face = position / per_face;
        if face >= u64::from(FACE_COUNT) {
            return Err(Error::IndexOutOfRange { generation: level, index: position });
        }
        Self::from_face_pos_level(face as u8, position % per_face, level)
    }

    #[inline]
    pub const fn raw(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn face(self) -> u8 {
        (self.0 >> FACE_SHIFT) as u8
    }

    #[inline]
    pub const fn level(self) -> u32 {
        (60 - self.0.trailing_zeros()) / 2
    }

    /// Hilbert index of the cell among the `4^level` cells of its face.
    #[inline]
    pub const fn pos(self) -> u64 {
        (self.0 & POS_MASK) >> (61 - 2 * self.level())
    }

    /// Position along the single curve threading all six faces.
    pub fn curve_position(self) -> u64 {
        u64::from(self.face()) * cell_count(self.level()) + self.pos()
    }

    pub fn square(self) -> DyadicSquare {
        let interval = QuarticInterval::new(self.level(), self.pos()).expect("valid cell id");
        phi(interval)
    }

    /// Face, square on the face and level.
    pub fn decode(self) -> (u8, DyadicSquare, u32) {
        (self.face(), self.square(), self.level())
    }

    pub fn parent(self) -> Result<Self> {
        let level = self.level();
        if level == 0 {
            return Err(Error::NoParent);
        }
        let parent_sentinel = sentinel(level - 1);
        Ok(Self((self.0 & !(parent_sentinel * 2 - 1)) | parent_sentinel))
    }

    /// The four children in curve order.
    pub fn children(self) -> Result<[Self; 4]> {
        let level = self.level();
        if level == MAX_LEVEL {
            return Err(Error::NoChildren { max: MAX_LEVEL });
        }
        let lsb = sentinel(level);
        let child = sentinel(level + 1);
        let base = self.0 - lsb;
        Ok([0, 1, 2, 3].map(|j| Self(base | ((j * 2 + 1) * child))))
    }

    /// True if `other` lies inside this cell (or is this cell).
    pub fn contains(self, other: Self) -> bool {
        let lsb = sentinel(self.level());
        other.level() >= self.level() && (other.0 & !(2 * lsb - 1)) | lsb == self.0
            || other == self
    }

    /// `(s, t)` rectangle of the cell on its face: lower-left, upper-right.
    pub fn st_bounds(self) -> ((f64, f64), (f64, f64)) {
        let (lo, hi) = self.square().bounds();
        ((lo.x, lo.y), (hi.x, hi.y))
    }

    fn st_vector(self, s: f64, t: f64) -> UnitVector {
        FaceUV { face: self.face(), u: st_to_uv(s), v: st_to_uv(t) }.to_vector()
    }

    pub fn center(self) -> UnitVector {
        let c = self.square().center();
        self.st_vector(c.x, c.y)
    }

    /// Corners counter-clockwise as seen from outside the sphere, starting at
    /// the lower-left `(s, t)` corner.
    pub fn vertices(self) -> [UnitVector; 4] {
        let ((s0, t0), (s1, t1)) = self.st_bounds();
        let corners = [
            self.st_vector(s0, t0),
            self.st_vector(s1, t0),
            self.st_vector(s1, t1),
            self.st_vector(s0, t1),
        ];
        let frame = face_frame(self.face()).expect("valid cell id");
        if frame.is_right_handed() {
            corners
        } else {
            let [a, b, c, d] = corners;
            [a, d, c, b]
        }
    }

    /// Area on the unit sphere. Cell edges are arcs of great circles, so the
    /// two triangles through opposite corners cover the cell exactly.
    pub fn area_steradians(self) -> f64 {
        let [a, b, c, d] = self.vertices();
        spherical_triangle_area(&a, &b, &c) + spherical_triangle_area(&a, &c, &d)
    }

    /// The four cells sharing an edge with this one, crossing onto
    /// neighbouring faces where needed. Order: +s, -s, +t, -t.
    pub fn edge_neighbors(self) -> [Self; 4] {
        let level = self.level();
        let side = 1i64 << level;
        let square = self.square();
        let frame = face_frame(self.face()).expect("valid cell id");
        // Cube scaled to [-side, side]^3; cell centers sit at odd offsets.
        let u = 2 * i64::from(square.x()) + 1 - side;
        let v = 2 * i64::from(square.y()) + 1 - side;
        let at = |du: i64, dv: i64| {
            let p: [i64; 3] = core::array::from_fn(|k| {
                side * i64::from(frame.normal[k])
                    + (u + du) * i64::from(frame.u_axis[k])
                    + (v + dv) * i64::from(frame.v_axis[k])
            });
            lattice_cell(fold_onto_cube(p, side), level)
        };
        [at(2, 0), at(-2, 0), at(0, 2), at(0, -2)]
    }
}

/// A lattice point one step past a cube edge is rotated about that edge onto
/// the adjacent face.
fn fold_onto_cube(mut p: [i64; 3], side: i64) -> [i64; 3] {
    if let Some(out) = p.iter().position(|c| c.abs() > side) {
        let normal = p.iter().position(|c| c.abs() == side).expect("point on a face");
        let overshoot = p[out].abs() - side;
        p[normal] -= p[normal].signum() * overshoot;
        p[out] = p[out].signum() * side;
    }
    p
}

fn lattice_cell(p: [i64; 3], level: u32) -> CellId {
    let side = 1i64 << level;
    for face in 0..FACE_COUNT {
        let frame = face_frame(face).expect("face in range");
        let dot = |axis: &[i8; 3]| (0..3).map(|k| p[k] * i64::from(axis[k])).sum::<i64>();
        if dot(&frame.normal) == side {
            let x = ((dot(&frame.u_axis) + side - 1) / 2) as u32;
            let y = ((dot(&frame.v_axis) + side - 1) / 2) as u32;
            let square = DyadicSquare::new(level, x, y).expect("lattice point inside face");
            return CellId::from_face_square(face, square).expect("valid face and level");
        }
    }
    unreachable!("folded lattice point lies on a face")
}

impl fmt::Debug for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellId({:016x} face={} level={} pos={})", self.0, self.face(), self.level(), self.pos())
    }
}

/// Canonical text form: 16 lowercase hexadecimal digits.
impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

impl FromStr for CellId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() != 16 || !s.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::MalformedCellText);
        }
        let raw = u64::from_str_radix(s, 16).map_err(|_| Error::MalformedCellText)?;
        Self::from_raw(raw)
    }
}

impl TryFrom<u64> for CellId {
    type Error = Error;

    fn try_from(raw: u64) -> Result<Self> {
        Self::from_raw(raw)
    }
}

impl From<CellId> for u64 {
    fn from(cell: CellId) -> u64 {
        cell.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use core::f64::consts::PI;

    fn ll(lat: f64, lng: f64) -> LatLng {
        LatLng::new(lat, lng).unwrap()
    }

    #[test]
    fn level_zero_layout() {
        for face in 0..6u8 {
            let cell = CellId::from_face_pos_level(face, 0, 0).unwrap();
            assert_eq!(cell.raw(), u64::from(face) * (1 << 61) + (1 << 60));
            assert_eq!(cell.decode(), (face, DyadicSquare::ROOT, 0));
        }
        let p = ll(12.5, -40.0);
        let cell = CellId::from_latlng(&p, 0).unwrap();
        assert_eq!(cell.raw() & POS_MASK, 1 << 60);
    }

    #[test]
    fn origin_at_level_one() {
        // (s, t) = (0.5, 0.5) sits on both grid lines: lower-left square.
        let cell = CellId::from_latlng(&ll(0.0, 0.0), 1).unwrap();
        assert_eq!(cell.face(), 0);
        assert_eq!(cell.pos(), 0);
        assert_eq!(cell.raw(), 1 << 58);
    }

    #[test]
    fn level_thirty_puts_the_sentinel_in_bit_zero() {
        let cell = CellId::from_latlng(&ll(48.8566, 2.3522), MAX_LEVEL).unwrap();
        assert_eq!(cell.raw() & 1, 1);
        assert_eq!(cell.level(), 30);
        // 3 + 2*30 + 1 = 64
        assert_eq!(3 + 2 * MAX_LEVEL + 1, u64::BITS);
        assert!(CellId::from_latlng(&ll(0.0, 0.0), 31).is_err());
    }

    #[test]
    fn decode_rejects_malformed_raw() {
        assert_eq!(CellId::from_raw(0), Err(Error::InvalidCellId(0)));
        assert!(CellId::from_raw(6 << 61 | 1 << 60).is_err());
        assert!(CellId::from_raw(1 << 59).is_err());
        assert!(CellId::from_raw(1 << 61).is_err());
        assert!(CellId::from_raw(3 << 61 | 1 << 60).is_ok());
    }

    #[test]
    fn text_form() {
        let cell = CellId::from_face_pos_level(3, 0, 0).unwrap();
        assert_eq!(cell.to_string(), "7000000000000000");
        assert_eq!("7000000000000000".parse::<CellId>().unwrap(), cell);
        assert_eq!("0000000000000000".parse::<CellId>(), Err(Error::InvalidCellId(0)));
        assert_eq!("700000000000000".parse::<CellId>(), Err(Error::MalformedCellText));
        assert_eq!("+700000000000000".parse::<CellId>(), Err(Error::MalformedCellText));
        assert_eq!("700000000000000g".parse::<CellId>(), Err(Error::MalformedCellText));
    }

    #[test]
    fn parent_and_children() {
        let root = CellId::from_face_pos_level(2, 0, 0).unwrap();
        let children = root.children().unwrap();
        for (j, child) in children.iter().enumerate() {
            assert_eq!(child.level(), 1);
            assert_eq!(child.pos(), j as u64);
            assert_eq!(child.parent().unwrap(), root);
            assert!(root.contains(*child));
        }
        assert_eq!(root.parent(), Err(Error::NoParent));
        let leaf = CellId::from_latlng(&ll(1.0, 2.0), 30).unwrap();
        assert!(leaf.children().is_err());
        assert_eq!(leaf.parent().unwrap().level(), 29);
        assert!(!children[0].contains(children[1]));
        assert!(!children[0].contains(root));
    }

    #[test]
    fn level_zero_area_is_a_sixth_of_the_sphere() {
        for face in 0..6 {
            let area = CellId::from_face_pos_level(face, 0, 0).unwrap().area_steradians();
            assert!((area - 4.0 * PI / 6.0).abs() < 1e-12);
        }
    }

    #[test]
    fn curve_position_round_trip() {
        for level in 0..=3 {
            for position in 0..6 * cell_count(level) {
                let cell = CellId::from_curve_position(position, level).unwrap();
                assert_eq!(cell.curve_position(), position);
            }
            assert!(CellId::from_curve_position(6 * cell_count(level), level).is_err());
        }
    }

    #[test]
    fn neighbors_are_symmetric() {
        for level in 0..=3 {
            for position in 0..6 * cell_count(level) {
                let cell = CellId::from_curve_position(position, level).unwrap();
                for n in cell.edge_neighbors() {
                    assert_ne!(n, cell);
                    assert_eq!(n.level(), level);
                    assert!(n.edge_neighbors().contains(&cell));
                }
            }
        }
    }
}
