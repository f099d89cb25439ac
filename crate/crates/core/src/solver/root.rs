use serde::Serialize;

use super::condition::{RadiusCondition, Variant};
use crate::error::{Error, Result};

/// Grid step of the sign-change scan preceding bisection.
pub const SCAN_STEP: f64 = 1e-3;

pub const MIN_TOL: f64 = 1e-15;
pub const MAX_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusResult {
    pub rho: f64,
    /// `|h(rho)|`
    pub residual: f64,
    /// `(r_lo, r_hi)` with `h(r_lo) < 0 <= h(r_hi)`.
    pub bracket: (f64, f64),
    pub variant: Variant,
    pub iterations: u32,
}

/// Least `r` in `(0, 1)` with `h(r) = 0`: scan at [`SCAN_STEP`] for the
/// first sign change, then bisect to width `tol`.
pub fn smallest_root_in_01(cond: &RadiusCondition, tol: f64) -> Result<RadiusResult> {
    if !(MIN_TOL..=MAX_TOL).contains(&tol) {
        return Err(Error::Parameter(format!("tolerance {tol:e} outside [{MIN_TOL:e}, {MAX_TOL:e}]")));
    }
    let h0 = cond.eval(0.0);
    if !(h0 < 0.0) {
        return Err(Error::Precondition { h0 });
    }
    let steps = (1.0 / SCAN_STEP).round() as u32;
    let mut lo = 0.0;
    let mut hi = None;
    for k in 1..steps {
        let r = k as f64 * SCAN_STEP;
        if cond.eval(r) >= 0.0 {
            hi = Some(r);
            break;
        }
        lo = r;
    }
    let h1 = cond.limit_at_one();
    let mut hi = match hi {
        Some(r) => r,
        None if h1 > 0.0 => 1.0,
        None => return Err(Error::NoRoot { h0, h1 }),
    };

    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if cond.eval(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let rho = 0.5 * (lo + hi);
    Ok(RadiusResult { rho, residual: cond.eval(rho).abs(), bracket: (lo, hi), variant: cond.variant, iterations })
}
