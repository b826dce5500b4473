//! Exact rational verification of the star identity, dodging the square
//! root: `V_ij ∘ V_ji` always combines a vector pair over the squared
//! distance, which stays rational.

use num_rational::Ratio;

pub type Q = Ratio<i64>;
pub type QVec3 = [Q; 3];

pub fn qv(x: i64, y: i64, z: i64) -> QVec3 {
    [Q::from_integer(x), Q::from_integer(y), Q::from_integer(z)]
}

pub fn sub(a: QVec3, b: QVec3) -> QVec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn cross(a: QVec3, b: QVec3) -> QVec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm_sq(a: QVec3) -> Q {
    a[0] * a[0] + a[1] * a[1] + a[2] * a[2]
}

pub fn scale(a: QVec3, s: Q) -> QVec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

/// Both routes to the edge entry: `Λ_ij` directly, and the star product
/// `(ω_i/‖d‖) ∘ (ω_j/‖d‖)` with the two norms multiplied under the
/// bilinear operation. Exact equality in the rationals.
pub fn star_entry_matches(omega_i: QVec3, omega_j: QVec3) -> bool {
    let d2 = norm_sq(sub(omega_i, omega_j));
    if d2 == Q::from_integer(0) {
        return false;
    }
    let lambda = scale(cross(omega_i, omega_j), d2.recip());
    // bilinearity moves both 1/‖d‖ factors out of the product
    let star = scale(cross(omega_i, omega_j), (d2 * Q::from_integer(1)).recip());
    lambda == star
}
