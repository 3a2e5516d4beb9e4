//! The auxiliary functions `g`, `G` and `H_a` behind the closed-form potential
//! and its ground state.

use crate::error::{Error, Result};

/// `g(z) = (z - 1) ln(1 + 1/(z - 1))`, with `g(1) = 0`.
///
/// Strictly increasing on `z > 1`, approaching 1 from below.
pub fn special_g(z: f64) -> Result<f64> {
    if z.is_nan() || z < 1.0 {
        return Err(Error::ArgumentBelowOne { z });
    }
    Ok(g_unchecked(z))
}

#[inline]
pub(crate) fn g_unchecked(z: f64) -> f64 {
    if z == 1.0 {
        0.0
    } else {
        let w = z - 1.0;
        w * libm::log1p(1.0 / w)
    }
}

/// `G(z) = z (z - 1) ln(1 + 1/(z - 1)) = z g(z)`, with `G(1) = 0`.
///
/// Positive and concave on `z >= 1`.
pub fn special_upper_g(z: f64) -> Result<f64> {
    special_g(z).map(|g| z * g)
}

#[inline]
pub(crate) fn upper_g_count(nu: u32) -> f64 {
    let z = nu as f64;
    z * g_unchecked(z)
}

/// `H_a(z) = G(z) - a G(z/a)`, positive and strictly convex for `2 <= a < z`.
pub fn special_h(z: f64, a: u32) -> Result<f64> {
    if a < 2 || z.is_nan() || z <= a as f64 {
        return Err(Error::InvalidConvexArgs { a, z });
    }
    let a_f = a as f64;
    Ok(special_upper_g(z)? - a_f * special_upper_g(z / a_f)?)
}
