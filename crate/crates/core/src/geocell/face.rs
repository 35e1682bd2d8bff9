use super::sphere::UnitVector;
use crate::error::{Error, Result};

pub const FACE_COUNT: u8 = 6;

/// Orientation of one cube face: a point with face coordinates `(u, v)`
/// sits at `normal + u * u_axis + v * v_axis` on the cube surface.
///
/// The axes are chosen so that `(s, t) = (0, 0)` (where every face curve
/// starts) is the cube vertex where the previous face's curve ended, and
/// `(1, 0)` is the vertex shared with the next face in the cycle
/// `0 → 1 → 2 → 3 → 4 → 5 → 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceFrame {
    pub normal: [i8; 3],
    pub u_axis: [i8; 3],
    pub v_axis: [i8; 3],
}

const FRAMES: [FaceFrame; 6] = [
    FaceFrame { normal: [1, 0, 0], u_axis: [0, 1, 0], v_axis: [0, 0, 1] },
    FaceFrame { normal: [0, 1, 0], u_axis: [0, 0, 1], v_axis: [-1, 0, 0] },
    FaceFrame { normal: [0, 0, 1], u_axis: [-1, 0, 0], v_axis: [0, -1, 0] },
    FaceFrame { normal: [-1, 0, 0], u_axis: [0, -1, 0], v_axis: [0, 0, -1] },
    FaceFrame { normal: [0, -1, 0], u_axis: [0, 0, -1], v_axis: [1, 0, 0] },
    FaceFrame { normal: [0, 0, -1], u_axis: [1, 0, 0], v_axis: [0, 1, 0] },
];

impl FaceFrame {
    /// True when `u_axis x v_axis` points along the outward normal.
    pub fn is_right_handed(&self) -> bool {
        let (u, v) = (&self.u_axis, &self.v_axis);
        let cross = [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ];
        cross == self.normal
    }
}

pub fn face_frame(face: u8) -> Result<&'static FaceFrame> {
    FRAMES.get(usize::from(face)).ok_or(Error::InvalidFace(face))
}

#[inline]
fn project(axis: &[i8; 3], p: &[f64; 3]) -> f64 {
    f64::from(axis[0]) * p[0] + f64::from(axis[1]) * p[1] + f64::from(axis[2]) * p[2]
}

/// A point on a cube face in face-local coordinates, `u, v ∈ [-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceUV {
    pub face: u8,
    pub u: f64,
    pub v: f64,
}

impl FaceUV {
    pub fn new(face: u8, u: f64, v: f64) -> Result<Self> {
        face_frame(face)?;
        if !(-1.0..=1.0).contains(&u) || !(-1.0..=1.0).contains(&v) {
            return Err(Error::OutsideUnitInterval { name: "|u|, |v|", value: u.abs().max(v.abs()) });
        }
        Ok(Self { face, u, v })
    }

    /// Central projection of `p` onto the cube. The face is the one whose
    /// normal is closest to `p`; on an edge or vertex the lowest face number
    /// wins.
    pub fn from_vector(p: &UnitVector) -> Self {
        let coords = p.coords();
        let mut best = 0usize;
        let mut best_dot = f64::NEG_INFINITY;
        for (face, frame) in FRAMES.iter().enumerate() {
            let dot = project(&frame.normal, &coords);
            if dot > best_dot {
                best = face;
                best_dot = dot;
            }
        }
        let frame = &FRAMES[best];
        let u = (project(&frame.u_axis, &coords) / best_dot).clamp(-1.0, 1.0);
        let v = (project(&frame.v_axis, &coords) / best_dot).clamp(-1.0, 1.0);
        Self { face: best as u8, u, v }
    }

    /// The unit vector pointing through this cube point.
    pub fn to_vector(&self) -> UnitVector {
        let frame = &FRAMES[usize::from(self.face)];
        let axis = |i: usize| {
            f64::from(frame.normal[i])
                + self.u * f64::from(frame.u_axis[i])
                + self.v * f64::from(frame.v_axis[i])
        };
        UnitVector::normalized(axis(0), axis(1), axis(2)).expect("cube point is nonzero")
    }
}

/// Quadratic area-equalizing map from face coordinates to `[0, 1]`.
pub fn uv_to_st(u: f64) -> f64 {
    if u >= 0.0 {
        0.5 * libm::sqrt(1.0 + 3.0 * u)
    } else {
        1.0 - 0.5 * libm::sqrt(1.0 - 3.0 * u)
    }
}

/// Inverse of [`uv_to_st`].
pub fn st_to_uv(s: f64) -> f64 {
    if s >= 0.5 {
        (1.0 / 3.0) * (4.0 * s * s - 1.0)
    } else {
        (1.0 / 3.0) * (1.0 - 4.0 * (1.0 - s) * (1.0 - s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(x: f64, y: f64, z: f64) -> UnitVector {
        UnitVector::normalized(x, y, z).unwrap()
    }

    #[test]
    fn face_examples() {
        assert_eq!(FaceUV::from_vector(&unit(1.0, 0.0, 0.0)), FaceUV { face: 0, u: 0.0, v: 0.0 });
        assert_eq!(FaceUV::from_vector(&unit(0.0, 0.0, 1.0)), FaceUV { face: 2, u: 0.0, v: 0.0 });
        assert_eq!(FaceUV::from_vector(&unit(1.0, 1.0, 1.0)), FaceUV { face: 0, u: 1.0, v: 1.0 });
        assert_eq!(FaceUV::from_vector(&unit(-1.0, -1.0, -1.0)).face, 3);
        assert_eq!(FaceUV::from_vector(&unit(0.0, -1.0, -1.0)).face, 4);
    }

    #[test]
    fn frames_are_orthonormal() {
        for frame in &FRAMES {
            let dot = |a: &[i8; 3], b: &[i8; 3]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i8>();
            assert_eq!(dot(&frame.normal, &frame.u_axis), 0);
            assert_eq!(dot(&frame.normal, &frame.v_axis), 0);
            assert_eq!(dot(&frame.u_axis, &frame.v_axis), 0);
        }
        assert_eq!(face_frame(6), Err(Error::InvalidFace(6)));
    }

    #[test]
    fn face_uv_round_trip() {
        for face in 0..FACE_COUNT {
            for &(u, v) in &[(0.0, 0.0), (0.3, -0.7), (-0.99, 0.99), (0.5, 0.25)] {
                let back = FaceUV::from_vector(&FaceUV::new(face, u, v).unwrap().to_vector());
                assert_eq!(back.face, face);
                assert!((back.u - u).abs() < 1e-15 && (back.v - v).abs() < 1e-15);
            }
        }
        assert!(FaceUV::new(0, 1.5, 0.0).is_err());
    }

    #[test]
    fn st_examples() {
        assert_eq!(uv_to_st(0.0), 0.5);
        assert_eq!(uv_to_st(1.0), 1.0);
        assert_eq!(uv_to_st(-1.0), 0.0);
        assert!((uv_to_st(1.0 / 3.0) - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-16);
    }

    #[test]
    fn st_round_trip() {
        for i in 0..=2000 {
            let u = -1.0 + f64::from(i) / 1000.0;
            assert!((st_to_uv(uv_to_st(u)) - u).abs() <= 1e-15);
            let s = f64::from(i) / 2000.0;
            assert!((uv_to_st(st_to_uv(s)) - s).abs() <= 1e-15);
        }
    }

    #[test]
    fn st_is_monotone() {
        let mut prev = uv_to_st(-1.0);
        for i in 1..=4000 {
            let next = uv_to_st(-1.0 + f64::from(i) / 2000.0);
            assert!(next > prev);
            prev = next;
        }
    }
}
