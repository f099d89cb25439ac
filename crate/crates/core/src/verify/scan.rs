use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::class_disk;
use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::regions::{descriptor, region_contains, threshold_is_tight, MembershipKind};
use crate::target::Target;

pub const MIN_SCAN_SAMPLES: usize = 64;
/// Fraction of `rho` for the inside scan.
pub const INSIDE_FACTOR: f64 = 0.99;
/// Fraction of `rho` for the just-outside scan, capped at `(1 + rho)/2`.
pub const OUTSIDE_FACTOR: f64 = 1.02;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Witness {
    fn from(w: Complex64) -> Self {
        Witness { re: w.re, im: w.im }
    }
}

/// One circle of sample points `c(r) + R(r) e^{i theta}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanOutcome {
    pub r: f64,
    pub passed: bool,
    /// First sampled point outside the domain.
    pub witness: Option<Witness>,
    /// Points left unclassified after one resample.
    pub indeterminate: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContainmentScan {
    /// All points inside at `0.99 rho`.
    pub inside: ScanOutcome,
    /// Some point outside just beyond `rho`.
    pub just_outside: ScanOutcome,
    /// Whether `just_outside` counts as a check: only for exact algebraic
    /// membership with a threshold that touches the boundary.
    pub outside_gated: bool,
}

impl ContainmentScan {
    pub fn passed(&self) -> bool {
        self.inside.passed && (!self.outside_gated || self.just_outside.passed)
    }
}

fn classify(contains: &dyn Fn(Complex64) -> Result<bool>, c: f64, radius: f64, theta: f64, half_step: f64) -> Result<(bool, Complex64)> {
    let at = |t: f64| Complex64::new(c, 0.0) + Complex64::from_polar(radius, t);
    let w = at(theta);
    match contains(w) {
        Err(Error::Indeterminate { .. }) => {
            let w = at(theta + half_step);
            contains(w).map(|inside| (inside, w))
        }
        other => other.map(|inside| (inside, w)),
    }
}

/// Scans the class disk at radius `r` against `contains` for a point
/// outside. With `expect_inside` the scan passes when there is none;
/// otherwise it passes when there is one.
pub(crate) fn scan_circle(
    spec: &ClassSpec,
    r: f64,
    n_samples: usize,
    expect_inside: bool,
    contains: &dyn Fn(Complex64) -> Result<bool>,
) -> Result<ScanOutcome> {
    let disk = class_disk(spec, r)?;
    let step = 2.0 * PI / n_samples as f64;
    let mut witness = None;
    let mut indeterminate = 0;
    for k in 0..n_samples {
        match classify(contains, disk.center, disk.radius, k as f64 * step, step / 2.0) {
            Ok((false, w)) => {
                witness = Some(Witness::from(w));
                break;
            }
            Ok((true, _)) => {}
            Err(Error::Indeterminate { .. }) => indeterminate += 1,
            Err(e) => return Err(e),
        }
    }
    let passed = if expect_inside { witness.is_none() && indeterminate == 0 } else { witness.is_some() };
    Ok(ScanOutcome { r, passed, witness, indeterminate })
}

pub(crate) fn scan_radii(rho: f64) -> (f64, f64) {
    (INSIDE_FACTOR * rho, (OUTSIDE_FACTOR * rho).min((1.0 + rho) / 2.0))
}

pub(crate) fn scan_with(
    spec: &ClassSpec,
    rho: f64,
    n_samples: usize,
    outside_gated: bool,
    contains: &dyn Fn(Complex64) -> Result<bool>,
) -> Result<ContainmentScan> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::Parameter(format!("rho = {rho} outside [0, 1)")));
    }
    if n_samples < MIN_SCAN_SAMPLES {
        return Err(Error::Parameter(format!("need at least {MIN_SCAN_SAMPLES} samples, got {n_samples}")));
    }
    if rho == 0.0 {
        // the disk at r = 0 is the single point 1, interior to every domain
        let vacuous = ScanOutcome { r: 0.0, passed: true, witness: None, indeterminate: 0 };
        return Ok(ContainmentScan { inside: vacuous.clone(), just_outside: vacuous, outside_gated: false });
    }
    let (r_in, r_out) = scan_radii(rho);
    Ok(ContainmentScan {
        inside: scan_circle(spec, r_in, n_samples, true, contains)?,
        just_outside: scan_circle(spec, r_out, n_samples, false, contains)?,
        outside_gated,
    })
}

/// Samples the class disk just inside and just beyond `rho` against the
/// exact target domain.
pub fn containment_scan(spec: &ClassSpec, target: &Target, rho: f64, n_samples: usize) -> Result<ContainmentScan> {
    target.validate()?;
    let gated = threshold_is_tight(target) && descriptor(target).membership_kind == MembershipKind::Algebraic;
    scan_with(spec, rho, n_samples, gated, &|w| region_contains(target, w))
}
