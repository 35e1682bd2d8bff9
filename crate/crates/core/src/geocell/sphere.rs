use crate::error::{Error, Result};

/// Geodetic coordinates in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatLng {
    lat: f64,
    lng: f64,
}

impl LatLng {
    pub fn new(lat: f64, lng: f64) -> Result<Self> {
        if !(-90.0..=90.0).contains(&lat) {
            return Err(Error::LatitudeOutOfRange(lat));
        }
        if !(-180.0..=180.0).contains(&lng) {
            return Err(Error::LongitudeOutOfRange(lng));
        }
        Ok(Self { lat, lng })
    }

    pub fn lat(&self) -> f64 {
        self.lat
    }

    pub fn lng(&self) -> f64 {
        self.lng
    }

    pub fn to_vector(&self) -> UnitVector {
        let (lat, lng) = (self.lat.to_radians(), self.lng.to_radians());
        let (sin_lat, cos_lat) = libm::sincos(lat);
        let (sin_lng, cos_lng) = libm::sincos(lng);
        // Poles: cos(pi/2) is not exactly zero in floating point.
        if self.lat.abs() == 90.0 {
            return UnitVector { x: 0.0, y: 0.0, z: self.lat.signum() };
        }
        UnitVector::normalized(cos_lat * cos_lng, cos_lat * sin_lng, sin_lat)
            .expect("unit sphere point")
    }
}

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector {
    x: f64,
    y: f64,
    z: f64,
}

impl UnitVector {
    /// Scales `(x, y, z)` onto the unit sphere.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = libm::sqrt(x * x + y * y + z * z);
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::DegenerateVector);
        }
        Ok(Self { x: x / norm, y: y / norm, z: z / norm })
    }

    #[inline]
    pub fn x(&self) -> f64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> f64 {
        self.y
    }

    #[inline]
    pub fn z(&self) -> f64 {
        self.z
    }

    #[inline]
    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(&self, other: &Self) -> [f64; 3] {
        [
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        ]
    }

    /// Great-circle angle in radians; accurate for tiny separations.
    pub fn angle_to(&self, other: &Self) -> f64 {
        let [cx, cy, cz] = self.cross(other);
        libm::atan2(libm::sqrt(cx * cx + cy * cy + cz * cz), self.dot(other))
    }

    pub fn to_latlng(&self) -> LatLng {
        let lat = libm::atan2(self.z, libm::hypot(self.x, self.y)).to_degrees();
        let lng = libm::atan2(self.y, self.x).to_degrees();
        LatLng { lat, lng }
    }
}
