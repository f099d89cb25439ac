//! Oracles for computed radii: disk scans against the exact domains,
//! sharpness at the extremal functions, and class membership of those
//! functions.

mod adjudicate;
mod scan;
mod sharpness;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use adjudicate::{adjudicate_variant, Adjudication, VariantAssessment, ADJUDICATION_TOL};
pub use scan::{containment_scan, ContainmentScan, ScanOutcome, Witness, INSIDE_FACTOR, MIN_SCAN_SAMPLES, OUTSIDE_FACTOR};
pub use sharpness::{has_sharpness_claim, sharpness_check, sharpness_check_tol, SharpnessOutcome, SHARPNESS_TOL};

use crate::class::{ClassId, ClassSpec};
use crate::error::{Error, Result};
use crate::extremal::{caratheodory_part, ExtremalId};
use crate::solver::{compute_radius, VariantPolicy};
use crate::target::Target;

pub const DEFAULT_SCAN_SAMPLES: usize = 512;
const SAMPLE_SEED: u64 = 0x005e_ed0f_d15c;

/// `n` points uniformly distributed in `|z| <= radius`, the same for every
/// call with the same arguments.
pub fn disk_samples(n: usize, radius: f64, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            let t = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex64::from_polar(r, t)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipCheck {
    pub extremal: ExtremalId,
    pub samples: usize,
    pub min_real_part: f64,
    pub witness: Option<Witness>,
    pub passed: bool,
}

/// Checks `Re((1+z)^k f(z)/z) > 0` for the extremal function on sample
/// points in `|z| <= 0.999`.
pub fn class_membership_check(spec: &ClassSpec, which: ExtremalId, n_samples: usize) -> Result<MembershipCheck> {
    if which.class_id() != spec.class_id() {
        return Err(Error::Parameter(format!("{} is not a {} function", which.name(), spec.class_id())));
    }
    let mut min_real_part = f64::INFINITY;
    let mut witness = None;
    for z in disk_samples(n_samples, 0.999, SAMPLE_SEED) {
        let re = caratheodory_part(which, spec.b(), z)?.re;
        if re < min_real_part {
            min_real_part = re;
        }
        if re <= 0.0 && witness.is_none() {
            witness = Some(Witness::from(z));
        }
    }
    Ok(MembershipCheck { extremal: which, samples: n_samples, min_real_part, passed: witness.is_none(), witness })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessReport {
    pub applicable: bool,
    pub note: Option<String>,
    pub outcome: Option<SharpnessOutcome>,
}

/// Everything checked for one `(class, b, target)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub class: ClassId,
    pub b: f64,
    pub coeff_mag: f64,
    pub target: &'static str,
    pub alpha: Option<f64>,
    pub gamma: Option<f64>,
    pub variant: VariantPolicy,
    pub rho_used: Option<f64>,
    pub error: Option<String>,
    pub scan: Option<ContainmentScan>,
    pub sharpness: SharpnessReport,
    /// All gated checks passed.
    pub passed: bool,
}

pub fn verify_cell(spec: &ClassSpec, target: &Target, policy: VariantPolicy, tol: f64, n_samples: usize) -> VerificationReport {
    let mut report = VerificationReport {
        class: spec.class_id(),
        b: spec.b(),
        coeff_mag: spec.coeff_mag(),
        target: target.family().name(),
        alpha: target.alpha(),
        gamma: target.gamma(),
        variant: policy,
        rho_used: None,
        error: None,
        scan: None,
        sharpness: SharpnessReport { applicable: false, note: None, outcome: None },
        passed: false,
    };
    let rho = match compute_radius(spec, target, policy, tol) {
        Ok(res) => res.rho,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    report.rho_used = Some(rho);
    let scan = match containment_scan(spec, target, rho, n_samples) {
        Ok(s) => s,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let mut passed = scan.passed();
    match sharpness_check(spec, target, rho) {
        Ok(s) => {
            passed &= !s.gated || s.ok;
            report.sharpness.applicable = true;
            report.sharpness.outcome = Some(s);
        }
        Err(Error::NotApplicable(note)) => report.sharpness.note = Some(note),
        Err(e) => {
            report.sharpness.note = Some(e.to_string());
            passed = false;
        }
    }
    report.scan = Some(scan);
    report.passed = passed;
    report
}

/// [`verify_cell`] over every spec and target, in that row order.
pub fn verify_grid(
    specs: &[ClassSpec],
    targets: &[Target],
    policy: VariantPolicy,
    tol: f64,
    n_samples: usize,
) -> Vec<VerificationReport> {
    let pairs: Vec<(ClassSpec, Target)> = specs.iter().flat_map(|s| targets.iter().map(move |t| (*s, *t))).collect();
    pairs.into_par_iter().map(|(s, t)| verify_cell(&s, &t, policy, tol, n_samples)).collect()
}
