use super::sphere::UnitVector;

/// Area of the geodesic triangle `abc` on the unit sphere (its spherical
/// excess), by L'Huilier's formula.
pub fn spherical_triangle_area(a: &UnitVector, b: &UnitVector, c: &UnitVector) -> f64 {
    let side_a = b.angle_to(c);
    let side_b = c.angle_to(a);
    let side_c = a.angle_to(b);
    let s = 0.5 * (side_a + side_b + side_c);
    let product = libm::tan(0.5 * s)
        * libm::tan(0.5 * (s - side_a))
        * libm::tan(0.5 * (s - side_b))
        * libm::tan(0.5 * (s - side_c));
    4.0 * libm::atan(libm::sqrt(product.max(0.0)))
}
