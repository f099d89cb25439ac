//! Point-in-curve classification by accumulated argument change.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance below which a query point counts as sitting on the sampled curve.
pub const NEAR_SAMPLE: f64 = 1e-9;

/// Allowed deviation of the argument sum from `0` or `2*pi`.
pub const ARG_SUM_TOL: f64 = 1e-3;

/// Total change of `arg(boundary[i] - w)` around the closed polyline.
///
/// Each step contributes the principal argument of the ratio of consecutive
/// offsets. If the last sample does not repeat the first, the closing
/// segment is added.
pub fn argument_change(boundary: &[Complex64], w: Complex64) -> Result<f64> {
    if boundary.len() < 3 {
        return Err(Error::Parameter("winding test needs at least 3 boundary samples".into()));
    }
    if let Some(p) = boundary.iter().find(|p| (**p - w).norm() < NEAR_SAMPLE) {
        return Err(Error::Indeterminate {
            re: w.re,
            im: w.im,
            reason: format!("within {NEAR_SAMPLE:e} of boundary sample {} + {}i", p.re, p.im),
        });
    }
    let mut total = 0.0;
    let mut prev = boundary[0] - w;
    for p in boundary[1..].iter().chain(std::iter::once(&boundary[0])) {
        let cur = *p - w;
        // arg(cur / prev) without forming the quotient
        let cross = prev.re * cur.im - prev.im * cur.re;
        let dot = prev.re * cur.re + prev.im * cur.im;
        total += cross.atan2(dot);
        prev = cur;
    }
    Ok(total)
}

/// `true` iff the curve winds once around `w` (either orientation).
pub fn winding_contains(boundary: &[Complex64], w: Complex64) -> Result<bool> {
    let total = argument_change(boundary, w)?.abs();
    if (total - TAU).abs() <= ARG_SUM_TOL {
        Ok(true)
    } else if total <= ARG_SUM_TOL {
        Ok(false)
    } else {
        Err(Error::Indeterminate {
            re: w.re,
            im: w.im,
            reason: format!("argument change {total} is neither 0 nor 2*pi"),
        })
    }
}
