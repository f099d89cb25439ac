//! Radius conditions and their smallest roots.

mod condition;
mod root;

use rayon::prelude::*;

pub use condition::{
    assemble_condition, g1_nephroid_proof_coeffs, g1_nephroid_theorem_coeffs, ConditionKind, RadiusCondition, RlForm,
    Variant, VariantPolicy,
};
pub use root::{smallest_root_in_01, RadiusResult, MAX_TOL, MIN_TOL, SCAN_STEP};

use crate::class::{ClassId, ClassSpec};
use crate::error::{Error, Result};
use crate::target::Target;

pub const DEFAULT_TOL: f64 = 1e-12;

pub fn compute_radius(spec: &ClassSpec, target: &Target, policy: VariantPolicy, tol: f64) -> Result<RadiusResult> {
    let cond = assemble_condition(spec, target, policy)?;
    smallest_root_in_01(&cond, tol)
}

/// One `(b, target)` entry of a radius table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableCell {
    pub spec: ClassSpec,
    pub target: Target,
    /// A G2 target outside the published theorem, computed under the
    /// extended policy.
    pub extrapolated: bool,
    pub outcome: std::result::Result<RadiusResult, Error>,
}

/// Radii for every `b` in `b_grid` (sorted ascending) and every target, in
/// that row order. Cell failures stay in their cell.
pub fn radius_table(
    class_id: ClassId,
    b_grid: &[f64],
    targets: &[Target],
    policy: VariantPolicy,
    tol: f64,
) -> Result<Vec<TableCell>> {
    if b_grid.is_empty() {
        return Err(Error::Parameter("empty b grid".into()));
    }
    let mut bs = b_grid.to_vec();
    bs.sort_by(f64::total_cmp);
    let specs = bs.iter().map(|&b| ClassSpec::new(class_id, b)).collect::<Result<Vec<_>>>()?;
    Ok(table_for_specs(&specs, targets, policy, tol))
}

/// Like [`radius_table`] over prebuilt specs, kept in the given order.
pub fn table_for_specs(specs: &[ClassSpec], targets: &[Target], policy: VariantPolicy, tol: f64) -> Vec<TableCell> {
    let pairs: Vec<(ClassSpec, Target)> =
        specs.iter().flat_map(|s| targets.iter().map(move |t| (*s, *t))).collect();
    pairs
        .into_par_iter()
        .map(|(spec, target)| TableCell {
            spec,
            target,
            extrapolated: !target.in_paper_scope(spec.class_id()) && policy.extended,
            outcome: compute_radius(&spec, &target, policy, tol),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_table() {
        let t = radius_table(ClassId::G1, &[-1.0], &[Target::StarlikeOrder { alpha: 0.0 }], VariantPolicy::default(), DEFAULT_TOL)
            .unwrap();
        assert_eq!(t.len(), 1);
        let rho = t[0].outcome.as_ref().unwrap().rho;
        assert!((rho - (2.0 - 3f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn empty_targets_and_grid() {
        let p = VariantPolicy::default();
        assert!(radius_table(ClassId::G1, &[-1.0, 0.0], &[], p, DEFAULT_TOL).unwrap().is_empty());
        assert!(radius_table(ClassId::G1, &[], &[Target::Lune], p, DEFAULT_TOL).is_err());
        assert!(radius_table(ClassId::G1, &[0.5], &[Target::Lune], p, DEFAULT_TOL).is_err());
    }

    #[test]
    fn unsupported_cell_is_recorded() {
        let t = radius_table(ClassId::G2, &[0.0], &[Target::Exponential, Target::Sine], VariantPolicy::default(), DEFAULT_TOL)
            .unwrap();
        assert!(matches!(t[0].outcome, Err(Error::Unsupported(_))));
        assert!(t[1].outcome.is_ok());
        assert!(!t[0].extrapolated);
    }

    #[test]
    fn known_roots() {
        let p = VariantPolicy::default();
        let g2 = ClassSpec::new(ClassId::G2, -1.0).unwrap();
        let rho = compute_radius(&g2, &Target::Nephroid, p, DEFAULT_TOL).unwrap().rho;
        assert!((rho - 0.2).abs() < 1e-10);
        let rho = compute_radius(&g2, &Target::StarlikeOrder { alpha: 0.0 }, p, DEFAULT_TOL).unwrap().rho;
        assert!((rho - 1.0 / 3.0).abs() < 1e-10);
        // 4r^2 + 6r - 1 = 0
        let g1 = ClassSpec::new(ClassId::G1, -1.0).unwrap();
        let rho = compute_radius(&g1, &Target::Nephroid, p, DEFAULT_TOL).unwrap().rho;
        assert!((rho - (13f64.sqrt() - 3.0) / 4.0).abs() < 1e-10);
    }
}
