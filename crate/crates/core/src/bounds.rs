//! Disk bounds for `z f'(z) / f(z)` on the circle `|z| = r`.
//!
//! For `p` with `Re p > alpha` and first coefficient `2b(1-alpha)`, the
//! logarithmic derivative satisfies
//!
//! ```text
//! |z p'/p| <= 2(1-alpha) r/(1-r^2) * (|b| r^2 + 2r + |b|) / ((1-2alpha) r^2 + 2(1-alpha)|b| r + 1)
//! ```
//!
//! Adding the image of `|z| <= r` under the Möbius part of `zf'/f` gives a
//! disk with real center `c(r)` and radius `R(r)` for each class.

use serde::Serialize;

use crate::class::{ClassId, ClassSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HerglotzParams {
    b: f64,
    alpha: f64,
}

impl HerglotzParams {
    pub fn new(b: f64, alpha: f64) -> Result<Self> {
        if !(b.abs() <= 1.0) {
            return Err(Error::Parameter(format!("|b| = {} exceeds 1", b.abs())));
        }
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Parameter(format!("alpha = {alpha} outside [0, 1)")));
        }
        Ok(HerglotzParams { b, alpha })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

fn check_r(r: f64) -> Result<()> {
    if r >= 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("r = {r} outside [0, 1)")))
    }
}

/// Upper bound for `|z p'(z)/p(z)|` on `|z| = r`.
pub fn herglotz_logderiv_bound(params: HerglotzParams, r: f64) -> Result<f64> {
    check_r(r)?;
    let b = params.b.abs();
    let a = params.alpha;
    let lead = 2.0 * (1.0 - a) * r / (1.0 - r * r);
    let num = b * r * r + 2.0 * r + b;
    let den = (1.0 - 2.0 * a) * r * r + 2.0 * (1.0 - a) * b * r + 1.0;
    Ok(lead * num / den)
}

/// Disk `|w - center| <= radius` containing `zf'/f` on `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskSpec {
    pub center: f64,
    pub radius: f64,
    pub r: f64,
}

impl DiskSpec {
    pub fn leftmost(&self) -> f64 {
        self.center - self.radius
    }

    pub fn rightmost(&self) -> f64 {
        self.center + self.radius
    }
}

/// G1: center `(1+r^2)/(1-r^2)`, radius
/// `2((1+b1)r^3 + 2(1+b1)r^2 + (1+b1)r) / ((1-r^2)(r^2 + 2 b1 r + 1))`.
pub fn g1_disk(spec: &ClassSpec, r: f64) -> Result<DiskSpec> {
    if spec.class_id() != ClassId::G1 {
        return Err(Error::Parameter("g1_disk needs a G1 class".into()));
    }
    check_r(r)?;
    let m = spec.coeff_mag();
    let s = 1.0 - r * r;
    let num = 2.0 * ((1.0 + m) * r * r * r + 2.0 * (1.0 + m) * r * r + (1.0 + m) * r);
    let den = s * (r * r + 2.0 * m * r + 1.0);
    Ok(DiskSpec { center: (1.0 + r * r) / s, radius: num / den, r })
}

/// G2: center `1/(1-r^2)`, radius
/// `((1+b')r^3 + (4+b')r^2 + (1+b')r) / ((1-r^2)(r^2 + b' r + 1))`.
///
/// This is the bound above with `alpha = 0` and second-coefficient factor
/// `b'/2`, plus the disk image of `1/(1+z)`.
pub fn g2_disk(spec: &ClassSpec, r: f64) -> Result<DiskSpec> {
    if spec.class_id() != ClassId::G2 {
        return Err(Error::Parameter("g2_disk needs a G2 class".into()));
    }
    check_r(r)?;
    let m = spec.coeff_mag();
    let s = 1.0 - r * r;
    let num = (1.0 + m) * r * r * r + (4.0 + m) * r * r + (1.0 + m) * r;
    let den = s * (r * r + m * r + 1.0);
    Ok(DiskSpec { center: 1.0 / s, radius: num / den, r })
}

pub fn class_disk(spec: &ClassSpec, r: f64) -> Result<DiskSpec> {
    match spec.class_id() {
        ClassId::G1 => g1_disk(spec, r),
        ClassId::G2 => g2_disk(spec, r),
    }
}
