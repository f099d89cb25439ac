use std::f64::consts::SQRT_2;

use num_complex::Complex64;
use serde::Serialize;

use crate::class::{ClassId, ClassSpec};
use crate::error::{Error, Result};
use crate::extremal::{log_deriv, ExtremalId};
use crate::target::Target;

pub const SHARPNESS_TOL: f64 = 1e-6;

/// Value of `z f'/f` at the contact point, and the functional computed from
/// it together with the value it should reach.
type Functional = fn(Complex64, &Target) -> (f64, f64);

struct Claim {
    extremal: ExtremalId,
    /// `+1` for `z = rho`, `-1` for `z = -rho`.
    side: f64,
    functional: &'static str,
    eval: Functional,
}

/// `|w|` against the modulus of the domain's contact point on the real axis.
fn modulus(w: Complex64, target: &Target) -> (f64, f64) {
    let contact = match target {
        Target::Cardioid => 1.0 / 3.0,
        Target::Sine => 1.0 + 1f64.sin(),
        Target::RationalR => 2.0 * (SQRT_2 - 1.0),
        Target::Nephroid => 5.0 / 3.0,
        _ => f64::NAN,
    };
    (w.norm(), contact)
}

fn sg_functional(w: Complex64, _: &Target) -> (f64, f64) {
    let two = Complex64::new(2.0, 0.0);
    ((w / (two - w)).ln().norm(), 1.0)
}

fn claim(class_id: ClassId, target: &Target) -> Option<Claim> {
    use ExtremalId::*;
    let c = |extremal, side, functional, eval| Some(Claim { extremal, side, functional, eval });
    match (class_id, target) {
        (ClassId::G1, Target::StarlikeOrder { .. }) => {
            c(F1, 1.0, "Re w", |w, t| (w.re, t.alpha().unwrap_or(0.0)))
        }
        (ClassId::G1, Target::Lemniscate) => c(F2, -1.0, "|w^2 - 1|", |w, _| ((w * w - 1.0).norm(), 1.0)),
        (ClassId::G1, Target::Parabolic) => c(F1, 1.0, "Re w vs |w - 1|", |w, _| (w.re, (w - 1.0).norm())),
        (ClassId::G1, Target::Exponential) => c(F1, 1.0, "|Log w|", |w, _| (w.ln().norm(), 1.0)),
        (ClassId::G1, Target::Cardioid) | (ClassId::G1, Target::RationalR) => {
            c(F1, 1.0, "|w|", modulus)
        }
        (ClassId::G1, Target::Sine) | (ClassId::G1, Target::Nephroid) => c(F2, -1.0, "|w|", modulus),
        (ClassId::G1, Target::SigmoidSG) => c(F2, -1.0, "|Log(w/(2 - w))|", sg_functional),
        (ClassId::G2, Target::Sine) | (ClassId::G2, Target::Nephroid) => c(F3, -1.0, "|w|", modulus),
        (ClassId::G2, Target::SigmoidSG) => c(F3, -1.0, "|Log(w/(2 - w))|", sg_functional),
        _ => None,
    }
}

/// Whether the pair carries a sharpness claim.
pub fn has_sharpness_claim(class_id: ClassId, target: &Target) -> bool {
    claim(class_id, target).is_some()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessOutcome {
    pub extremal: ExtremalId,
    /// Real evaluation point, `rho` or `-rho`.
    pub z: f64,
    pub functional: &'static str,
    pub value: f64,
    pub target_value: f64,
    pub deviation: f64,
    pub tol: f64,
    pub ok: bool,
    /// Contact is claimed only at `b = -1`; elsewhere the value is
    /// informational. (`b = 0` on G1 and `b = 1/3` on G2 share the extreme
    /// coefficient magnitude but not the extremal functions.)
    pub gated: bool,
}

/// Evaluates the pair's sharpness functional on its extremal function at
/// `+rho` or `-rho`.
pub fn sharpness_check(spec: &ClassSpec, target: &Target, rho: f64) -> Result<SharpnessOutcome> {
    sharpness_check_tol(spec, target, rho, SHARPNESS_TOL)
}

pub fn sharpness_check_tol(spec: &ClassSpec, target: &Target, rho: f64, tol: f64) -> Result<SharpnessOutcome> {
    target.validate()?;
    let Some(cl) = claim(spec.class_id(), target) else {
        return Err(Error::NotApplicable(format!("no sharpness claim for {} {target}", spec.class_id())));
    };
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::Parameter(format!("rho = {rho} outside (0, 1)")));
    }
    let z = cl.side * rho;
    let w = log_deriv(cl.extremal, spec.b(), Complex64::new(z, 0.0))?;
    let (value, target_value) = (cl.eval)(w, target);
    let deviation = (value - target_value).abs();
    Ok(SharpnessOutcome {
        extremal: cl.extremal,
        z,
        functional: cl.functional,
        value,
        target_value,
        deviation,
        tol,
        ok: deviation <= tol,
        gated: spec.b() == -1.0,
    })
}
