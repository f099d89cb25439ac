//! Radius conditions `h(r) <= 0`.
//!
//! With the class disk `|w - c(r)| <= R(r)` and a linear threshold
//! `T(c) = a c + k`, the containment condition `R(r) <= T(c(r))` is cleared
//! of the positive denominator `(1 - r^2) Q(r)` to give a polynomial:
//!
//! ```text
//! G1:  N(r) = 2(1+b1) r (1+r)^2,        Q(r) = r^2 + 2 b1 r + 1,   c (1-r^2) = 1 + r^2
//! G2:  N(r) = (1+b')r^3 + (4+b')r^2 + (1+b')r,  Q(r) = r^2 + b' r + 1,  c (1-r^2) = 1
//! h(r) = scale * (N(r) - (a c(1-r^2) + k(1-r^2)) Q(r))
//! ```
//!
//! `scale` clears the denominator of `k` so that the coefficients come out
//! exactly as the published equations print them. The RL threshold is not
//! linear in `c`; its condition stays composite.

use std::f64::consts::{E, PI, SQRT_2};

use serde::Serialize;

use crate::bounds::class_disk;
use crate::class::{ClassId, ClassSpec};
use crate::error::{Error, Result};
use crate::poly;
use crate::regions::rl_threshold;
use crate::target::Target;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
pub enum Variant {
    /// Conditions derived with the class's own disk center.
    #[default]
    CenterCorrected,
    /// The equations as printed. Differs only for G1 nephroid and G1 RL,
    /// whose printed derivations use `1/(1-r^2)` as the G1 center.
    Printed,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::CenterCorrected => "corrected",
            Variant::Printed => "printed",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "corrected" | "center-corrected" => Ok(Variant::CenterCorrected),
            "printed" => Ok(Variant::Printed),
            other => Err(Error::Parameter(format!("unknown variant `{other}` (expected corrected or printed)"))),
        }
    }
}

/// Which equations to use and whether G2 may go beyond its published
/// targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct VariantPolicy {
    pub variant: Variant,
    pub extended: bool,
}

impl VariantPolicy {
    pub fn new(variant: Variant) -> Self {
        VariantPolicy { variant, extended: false }
    }

    pub fn extended(mut self, on: bool) -> Self {
        self.extended = on;
        self
    }
}

/// Which center the composite RL condition plugs into the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RlForm {
    /// `T(c(r))` with the class's center.
    ClassCenter,
    /// The printed G1 expression built on `1/(1-r^2)`:
    /// `N^2 - Q^2 ((1-r^2) sqrt(P) - P)`, `P = -r^4 - 2(sqrt2-1) r^2 + 2(sqrt2-1)`.
    PrintedG1,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ConditionKind {
    /// Coefficients ascending by degree.
    Polynomial(Vec<f64>),
    Composite { spec: ClassSpec, form: RlForm },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusCondition {
    pub kind: ConditionKind,
    pub variant: Variant,
}

fn disk_numerator(spec: &ClassSpec) -> Vec<f64> {
    let m = spec.coeff_mag();
    match spec.class_id() {
        ClassId::G1 => vec![0.0, 2.0 * (1.0 + m), 4.0 * (1.0 + m), 2.0 * (1.0 + m)],
        ClassId::G2 => vec![0.0, 1.0 + m, 4.0 + m, 1.0 + m],
    }
}

fn disk_quadratic(spec: &ClassSpec) -> Vec<f64> {
    let m = spec.coeff_mag();
    match spec.class_id() {
        ClassId::G1 => vec![1.0, 2.0 * m, 1.0],
        ClassId::G2 => vec![1.0, m, 1.0],
    }
}

/// `c(r) (1 - r^2)`.
fn center_numerator(class_id: ClassId) -> Vec<f64> {
    match class_id {
        ClassId::G1 => vec![1.0, 0.0, 1.0],
        ClassId::G2 => vec![1.0],
    }
}

/// `(a, k, scale)` with threshold `a c + k`.
fn linear_threshold(target: &Target) -> Option<(f64, f64, f64)> {
    let s1 = 1f64.sin();
    Some(match *target {
        Target::StarlikeOrder { alpha } => (1.0, -alpha, 1.0),
        Target::Lemniscate => (-1.0, SQRT_2, 1.0),
        Target::Parabolic => (1.0, -0.5, 2.0),
        Target::Exponential => (1.0, -1.0 / E, E),
        Target::Cardioid => (1.0, -1.0 / 3.0, 3.0),
        Target::Sine => (-1.0, 1.0 + s1, 1.0),
        Target::Lune => (1.0, 1.0 - SQRT_2, 1.0),
        Target::RationalR => (1.0, 2.0 - 2.0 * SQRT_2, 1.0),
        Target::StronglyStarlike { gamma } => ((PI * gamma / 2.0).sin(), 0.0, 1.0),
        Target::Nephroid => (-1.0, 5.0 / 3.0, 3.0),
        Target::SigmoidSG => (-1.0, 2.0 * E / (1.0 + E), 1.0 + E),
        Target::RationalRL => return None,
    })
}

fn linear_condition(spec: &ClassSpec, a: f64, k: f64, scale: f64) -> Vec<f64> {
    let one_minus_r2 = [1.0, 0.0, -1.0];
    let t = poly::add(&poly::scale(&center_numerator(spec.class_id()), a), &poly::scale(&one_minus_r2, k));
    let h = poly::sub(&disk_numerator(spec), &poly::mul(&t, &disk_quadratic(spec)));
    poly::trim(poly::scale(&h, scale))
}

/// `8r^4 + 2(3+b1)r^3 + 6(2+b1)r^2 + 2(3+b1)r - 2`, the G1 nephroid equation
/// as stated with the theorem.
pub fn g1_nephroid_theorem_coeffs(b1: f64) -> Vec<f64> {
    vec![-2.0, 2.0 * (3.0 + b1), 6.0 * (2.0 + b1), 2.0 * (3.0 + b1), 8.0]
}

/// `5r^4 + (6+16b1)r^3 + (15+12b1)r^2 + 2(3+b1)r - 2`, the G1 nephroid
/// polynomial from the proof (center `1/(1-r^2)`).
pub fn g1_nephroid_proof_coeffs(b1: f64) -> Vec<f64> {
    vec![-2.0, 2.0 * (3.0 + b1), 15.0 + 12.0 * b1, 6.0 + 16.0 * b1, 5.0]
}

/// Builds `h` for the pair. Fails for G2 targets outside the published
/// theorem unless the policy is extended.
pub fn assemble_condition(spec: &ClassSpec, target: &Target, policy: VariantPolicy) -> Result<RadiusCondition> {
    target.validate()?;
    if !target.in_paper_scope(spec.class_id()) && !policy.extended {
        return Err(Error::Unsupported(format!(
            "{} with target {target} is not covered; pass the extended flag",
            spec.class_id()
        )));
    }
    let variant = policy.variant;
    let printed_g1 = variant == Variant::Printed && spec.class_id() == ClassId::G1;
    let kind = match *target {
        Target::RationalRL => ConditionKind::Composite {
            spec: *spec,
            form: if printed_g1 { RlForm::PrintedG1 } else { RlForm::ClassCenter },
        },
        Target::Nephroid if printed_g1 => ConditionKind::Polynomial(g1_nephroid_theorem_coeffs(spec.coeff_mag())),
        _ => {
            let (a, k, scale) = linear_threshold(target).expect("linear target");
            ConditionKind::Polynomial(linear_condition(spec, a, k, scale))
        }
    };
    Ok(RadiusCondition { kind, variant })
}

impl RadiusCondition {
    pub fn polynomial(coeffs: Vec<f64>) -> Self {
        RadiusCondition { kind: ConditionKind::Polynomial(coeffs), variant: Variant::CenterCorrected }
    }

    pub fn coeffs(&self) -> Option<&[f64]> {
        match &self.kind {
            ConditionKind::Polynomial(c) => Some(c),
            ConditionKind::Composite { .. } => None,
        }
    }

    /// `h(r)` for `r` in `[0, 1)`.
    pub fn eval(&self, r: f64) -> f64 {
        match &self.kind {
            ConditionKind::Polynomial(c) => poly::eval(c, r),
            ConditionKind::Composite { spec, form } => {
                let n = poly::eval(&disk_numerator(spec), r);
                let q = poly::eval(&disk_quadratic(spec), r);
                let s = 1.0 - r * r;
                let bracket = match form {
                    RlForm::ClassCenter => {
                        let c = class_disk(spec, r).map(|d| d.center).unwrap_or(f64::INFINITY);
                        let t = rl_threshold(c);
                        s * s * t * t
                    }
                    RlForm::PrintedG1 => {
                        let p = -r.powi(4) - 2.0 * (SQRT_2 - 1.0) * r * r + 2.0 * (SQRT_2 - 1.0);
                        if p < 0.0 {
                            0.0
                        } else {
                            s * p.sqrt() - p
                        }
                    }
                };
                n * n - q * q * bracket
            }
        }
    }

    /// `h(1)`, or its limit for composite conditions.
    pub fn limit_at_one(&self) -> f64 {
        match &self.kind {
            ConditionKind::Polynomial(c) => poly::eval(c, 1.0),
            ConditionKind::Composite { spec, .. } => {
                // the RL threshold vanishes once the center passes sqrt(2) + 1
                let n = poly::eval(&disk_numerator(spec), 1.0);
                n * n
            }
        }
    }
}
