//! Target domains: membership, boundary curves and disk-containment
//! thresholds.

mod boundary;
mod winding;

use std::f64::consts::{E, PI, SQRT_2};
use std::sync::OnceLock;

use num_complex::Complex64;

pub use boundary::{
    generator_curve, region_boundary, rl_generator_boundary, sigmoid_right_end, BoundaryPoint, Generator,
    MIN_SAMPLES, RATIONAL_K, WINDOW,
};
pub use winding::{argument_change, winding_contains, ARG_SUM_TOL, NEAR_SAMPLE};

use crate::error::{Error, Result};
use crate::target::Target;

/// Samples used for winding-based membership.
pub const WINDING_SAMPLES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipKind {
    /// Closed-form inequality in `w`.
    Algebraic,
    /// Winding number of the generator's boundary image.
    Winding,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionDescriptor {
    pub target: Target,
    pub membership_kind: MembershipKind,
    pub generator: Option<Generator>,
}

pub fn descriptor(target: &Target) -> RegionDescriptor {
    let membership_kind = match target {
        Target::Sine | Target::RationalR => MembershipKind::Winding,
        _ => MembershipKind::Algebraic,
    };
    RegionDescriptor { target: *target, membership_kind, generator: Generator::for_target(target) }
}

/// `81x^4 - 324x^3 + 162x^2y^2 + 270x^2 - 324xy^2 - 84x + 81y^4 - 54y^2 + 9`,
/// which vanishes on the cardioid boundary.
pub fn cardioid_quartic(w: Complex64) -> f64 {
    let (x, y) = (w.re, w.im);
    let (x2, y2) = (x * x, y * y);
    81.0 * x2 * x2 - 324.0 * x2 * x + 162.0 * x2 * y2 + 270.0 * x2 - 324.0 * x * y2 - 84.0 * x + 81.0 * y2 * y2
        - 54.0 * y2
        + 9.0
}

/// `(u^2 - 2u + v^2 + 5/9)^3 - 4v^2/3`, negative inside the nephroid.
///
/// The cubed factor is evaluated as `(u - 5/3)(u - 1/3) + v^2` so that it
/// vanishes exactly at the real boundary points.
pub fn nephroid_sextic(w: Complex64) -> f64 {
    let (u, v) = (w.re, w.im);
    let inner = (u - 5.0 / 3.0) * (u - 1.0 / 3.0) + v * v;
    inner * inner * inner - 4.0 * v * v / 3.0
}

fn cardioid_interior_sign() -> f64 {
    cardioid_quartic(Complex64::new(1.0, 0.0)).signum()
}

/// Principal logarithm, or `None` on the cut `(-inf, 0]`.
fn principal_log(w: Complex64) -> Option<Complex64> {
    if w.im == 0.0 && w.re <= 0.0 {
        None
    } else {
        Some(w.ln())
    }
}

fn cached_boundary(slot: &'static OnceLock<Vec<Complex64>>, target: Target, n: usize) -> &'static [Complex64] {
    slot.get_or_init(|| {
        region_boundary(&target, n + 1).expect("fixed sample count").into_iter().map(|p| p.w).collect()
    })
}

fn winding_boundary(target: &Target, refined: bool) -> &'static [Complex64] {
    static SINE: OnceLock<Vec<Complex64>> = OnceLock::new();
    static SINE_FINE: OnceLock<Vec<Complex64>> = OnceLock::new();
    static RATIONAL: OnceLock<Vec<Complex64>> = OnceLock::new();
    static RATIONAL_FINE: OnceLock<Vec<Complex64>> = OnceLock::new();
    let (slot, n) = match (target, refined) {
        (Target::Sine, false) => (&SINE, WINDING_SAMPLES),
        (Target::Sine, true) => (&SINE_FINE, 2 * WINDING_SAMPLES),
        (Target::RationalR, false) => (&RATIONAL, WINDING_SAMPLES),
        (Target::RationalR, true) => (&RATIONAL_FINE, 2 * WINDING_SAMPLES),
        _ => unreachable!("no winding boundary for {target}"),
    };
    cached_boundary(slot, *target, n)
}

fn winding_membership(target: &Target, w: Complex64) -> Result<bool> {
    match winding_contains(winding_boundary(target, false), w) {
        Err(Error::Indeterminate { reason, .. }) if !reason.starts_with("within") => {
            winding_contains(winding_boundary(target, true), w)
        }
        other => other,
    }
}

/// Whether `w` is interior to the target domain.
///
/// Points on a branch cut or on the boundary are not interior. The
/// lemniscate and lune inequalities each describe a pair of mirror-image
/// components; only the one in `Re w > 0` (containing 1) counts.
pub fn region_contains(target: &Target, w: Complex64) -> Result<bool> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(Error::Parameter(format!("non-finite point {w}")));
    }
    target.validate()?;
    let one = Complex64::new(1.0, 0.0);
    let inside = match *target {
        Target::StarlikeOrder { alpha } => w.re > alpha,
        Target::StronglyStarlike { gamma } => w != Complex64::new(0.0, 0.0) && w.arg().abs() < gamma * PI / 2.0,
        Target::Parabolic => (w - one).norm() < w.re,
        Target::Lemniscate => w.re > 0.0 && (w * w - one).norm() < 1.0,
        Target::Lune => w.re > 0.0 && (w * w - one).norm() < 2.0 * w.norm(),
        Target::RationalRL => (w * w - SQRT_2 * w + one).norm() < 1.0,
        Target::Exponential => principal_log(w).is_some_and(|l| l.norm() < 1.0),
        Target::SigmoidSG => {
            let two = Complex64::new(2.0, 0.0);
            w != two && principal_log(w / (two - w)).is_some_and(|l| l.norm() < 1.0)
        }
        Target::Nephroid => nephroid_sextic(w) < 0.0,
        Target::Cardioid => cardioid_quartic(w) * cardioid_interior_sign() > 0.0,
        Target::Sine | Target::RationalR => return winding_membership(target, w),
    };
    Ok(inside)
}

/// Largest `R` for which the containment condition places the disk
/// `|w - c| < R` inside the target domain. Negative values mean no disk
/// centered at `c` qualifies.
///
/// Each formula is the one the radius conditions are built from; it is exact
/// for centers in `[1, threshold_center_limit(target)]`.
pub fn containment_threshold(target: &Target, c: f64) -> Result<f64> {
    if !(c >= 1.0) || !c.is_finite() {
        return Err(Error::Parameter(format!("disk center {c} must be a finite value >= 1")));
    }
    target.validate()?;
    let v = match *target {
        Target::StarlikeOrder { alpha } => c - alpha,
        Target::Lemniscate => (SQRT_2 - 1.0) - (c - 1.0),
        Target::Parabolic => c - 0.5,
        Target::Exponential => c - 1.0 / E,
        Target::Cardioid => c - 1.0 / 3.0,
        Target::Sine => 1f64.sin() - (c - 1.0),
        Target::Lune => 1.0 - SQRT_2 + c,
        Target::RationalR => c - 2.0 * (SQRT_2 - 1.0),
        Target::RationalRL => rl_threshold(c),
        Target::StronglyStarlike { gamma } => c * (PI * gamma / 2.0).sin(),
        Target::Nephroid => 5.0 / 3.0 - c,
        Target::SigmoidSG => sigmoid_right_end() - c,
    };
    Ok(v)
}

/// `sqrt(sqrt(t) - t)` with `t = 1 - (sqrt(2) - c)^2`, zero once `t < 0`.
pub fn rl_threshold(c: f64) -> f64 {
    let t = 1.0 - (SQRT_2 - c).powi(2);
    if t < 0.0 {
        0.0
    } else {
        (t.sqrt() - t).max(0.0).sqrt()
    }
}

/// Membership in the left loop of `|(w - sqrt(2))^2 - 1| < 1`, the domain
/// swept by the RL generator and the one the RL threshold is exact for.
pub fn rl_generator_contains(w: Complex64) -> bool {
    let d = w - Complex64::new(SQRT_2, 0.0);
    w.re < SQRT_2 && (d * d - 1.0).norm() < 1.0
}

/// Upper end of the center range on which [`containment_threshold`] is the
/// true inscribed radius of the domain (infinite for the half-plane and the
/// sector).
pub fn threshold_center_limit(target: &Target) -> f64 {
    match target {
        Target::StarlikeOrder { .. } | Target::StronglyStarlike { .. } => f64::INFINITY,
        Target::Parabolic => 1.5,
        Target::Exponential => (E + 1.0 / E) / 2.0,
        Target::Cardioid | Target::Nephroid => 5.0 / 3.0,
        Target::Sine => 1.0 + 1f64.sin(),
        Target::Lemniscate | Target::Lune | Target::RationalR | Target::RationalRL => SQRT_2,
        Target::SigmoidSG => sigmoid_right_end(),
    }
}

/// Whether the threshold touches the domain boundary, so that any larger
/// disk must leave the domain. False for RL, whose threshold comes from the
/// lemniscate `|(w - sqrt(2))^2 - 1| < 1` and is strictly smaller than the
/// inscribed radius of the printed RL inequality.
pub fn threshold_is_tight(target: &Target) -> bool {
    !matches!(target, Target::RationalRL)
}
