//! Angle reduction helpers.

use std::f64::consts::{PI, TAU};

/// Reduces to `[0, 2π)`.
pub fn wrap_tau(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Reduces to `(−π, π]`.
pub fn wrap_pi(x: f64) -> f64 {
    let r = PI - (PI - x).rem_euclid(TAU);
    if r <= -PI {
        r + TAU
    } else {
        r
    }
}

/// Reduces to `(−2π, 2π]`, the period of a half-angle SU(2) rotation.
pub fn wrap_two_tau(x: f64) -> f64 {
    let r = TAU - (TAU - x).rem_euclid(2.0 * TAU);
    if r <= -TAU {
        r + 2.0 * TAU
    } else {
        r
    }
}

/// Distance between two angles on the circle.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    wrap_pi(a - b).abs()
}
