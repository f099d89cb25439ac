//! Side-by-side comparison of the competing equations for G1 nephroid and
//! G1 RL.

use serde::Serialize;

use super::scan::{containment_scan, scan_with, ContainmentScan};
use super::sharpness::{sharpness_check_tol, SharpnessOutcome};
use crate::class::{ClassId, ClassSpec};
use crate::error::{Error, Result};
use crate::regions::rl_generator_contains;
use crate::solver::{
    assemble_condition, g1_nephroid_proof_coeffs, g1_nephroid_theorem_coeffs, smallest_root_in_01, RadiusCondition,
    Variant, VariantPolicy,
};
use crate::target::Target;

/// Tolerance on the nephroid contact value `5/3`. The candidate roots give
/// values at least `2e-2` apart.
pub const ADJUDICATION_TOL: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariantAssessment {
    pub label: &'static str,
    pub rho: Option<f64>,
    pub error: Option<String>,
    /// Against the domain as defined by its inequality.
    pub scan: Option<ContainmentScan>,
    /// RL only: against the domain swept by the RL generator, for which the
    /// RL threshold is exact.
    pub generator_domain_scan: Option<ContainmentScan>,
    pub sharpness: Option<SharpnessOutcome>,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Adjudication {
    pub class: ClassId,
    pub b: f64,
    pub coeff_mag: f64,
    pub target: &'static str,
    pub variants: Vec<VariantAssessment>,
    /// Labels of the consistent variants.
    pub consistent: Vec<&'static str>,
}

fn assess(
    spec: &ClassSpec,
    target: &Target,
    label: &'static str,
    cond: RadiusCondition,
    tol: f64,
    n_samples: usize,
) -> Result<VariantAssessment> {
    let rho = match smallest_root_in_01(&cond, tol) {
        Ok(res) => res.rho,
        Err(e) => {
            return Ok(VariantAssessment {
                label,
                rho: None,
                error: Some(e.to_string()),
                scan: None,
                generator_domain_scan: None,
                sharpness: None,
                consistent: false,
            })
        }
    };
    let scan = containment_scan(spec, target, rho, n_samples)?;
    let (generator_domain_scan, sharpness, consistent) = match target {
        Target::RationalRL => {
            let g = scan_with(spec, rho, n_samples, true, &|w| Ok(rl_generator_contains(w)))?;
            let ok = scan.inside.passed && g.passed();
            (Some(g), None, ok)
        }
        _ => {
            let s = sharpness_check_tol(spec, target, rho, ADJUDICATION_TOL)?;
            let ok = scan.passed() && (!s.gated || s.ok);
            (None, Some(s), ok)
        }
    };
    Ok(VariantAssessment {
        label,
        rho: Some(rho),
        error: None,
        scan: Some(scan),
        generator_domain_scan,
        sharpness,
        consistent,
    })
}

/// Computes the radius under every available reading of the flagged G1
/// equations and tests each against the exact domain.
pub fn adjudicate_variant(spec: &ClassSpec, target: &Target, tol: f64, n_samples: usize) -> Result<Adjudication> {
    if spec.class_id() != ClassId::G1 || !matches!(target, Target::Nephroid | Target::RationalRL) {
        return Err(Error::Parameter(format!(
            "adjudication covers G1 nephroid and G1 rl, not {} {target}",
            spec.class_id()
        )));
    }
    let corrected = assemble_condition(spec, target, VariantPolicy::new(Variant::CenterCorrected))?;
    let mut candidates = vec![("center-corrected", corrected)];
    match target {
        Target::Nephroid => {
            let m = spec.coeff_mag();
            let printed = |coeffs| RadiusCondition { variant: Variant::Printed, ..RadiusCondition::polynomial(coeffs) };
            candidates.push(("printed-theorem", printed(g1_nephroid_theorem_coeffs(m))));
            candidates.push(("printed-proof", printed(g1_nephroid_proof_coeffs(m))));
        }
        _ => candidates.push(("printed", assemble_condition(spec, target, VariantPolicy::new(Variant::Printed))?)),
    }
    let variants = candidates
        .into_iter()
        .map(|(label, cond)| assess(spec, target, label, cond, tol, n_samples))
        .collect::<Result<Vec<_>>>()?;
    let consistent = variants.iter().filter(|v| v.consistent).map(|v| v.label).collect();
    Ok(Adjudication {
        class: spec.class_id(),
        b: spec.b(),
        coeff_mag: spec.coeff_mag(),
        target: target.family().name(),
        variants,
        consistent,
    })
}
