//! Boundary curves of the target domains.
//!
//! Bounded domains are traced as images of the unit circle under their
//! generating functions, or by an explicit parametrization where the
//! domain is given only by an inequality (lune, the RL oval). Unbounded
//! domains (half-plane, sector, parabola) are truncated to a window of
//! size [`WINDOW`] and closed with a segment or arc, so every boundary is a
//! closed curve usable by the winding test.

use std::f64::consts::{E, FRAC_1_SQRT_2, PI, SQRT_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::target::Target;

/// Truncation size for unbounded domains.
pub const WINDOW: f64 = 8.0;

/// Fewest samples a boundary request may ask for.
pub const MIN_SAMPLES: usize = 4;

/// `k = sqrt(2) + 1` in the rational target's generator.
pub const RATIONAL_K: f64 = SQRT_2 + 1.0;

/// Generating functions `q` with `q(0) = 1`, mapping the unit disk onto
/// the target domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    /// `(1 + (1-2 alpha) z) / (1 - z)`
    HalfPlane { alpha: f64 },
    /// `((1+z)/(1-z))^gamma`
    Sector { gamma: f64 },
    /// `sqrt(1+z)`, principal branch
    Lemniscate,
    /// `e^z`
    Exponential,
    /// `(3 + 4z + 2z^2)/3`
    Cardioid,
    /// `1 + sin z`
    Sine,
    /// `z + sqrt(1+z^2)`
    Lune,
    /// `1 + z(k+z)/(k(k-z))`, `k = sqrt(2)+1`
    Rational,
    /// `sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z))`
    RlLiterature,
    /// `1 + z - z^3/3`
    Nephroid,
    /// `2/(1+e^{-z})`
    Sigmoid,
}

impl Generator {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            Generator::HalfPlane { alpha } => (one + (1.0 - 2.0 * alpha) * z) / (one - z),
            Generator::Sector { gamma } => ((one + z) / (one - z)).powf(gamma),
            Generator::Lemniscate => (one + z).sqrt(),
            Generator::Exponential => z.exp(),
            Generator::Cardioid => (3.0 + 4.0 * z + 2.0 * z * z) / 3.0,
            Generator::Sine => one + z.sin(),
            Generator::Lune => z + (one + z * z).sqrt(),
            Generator::Rational => {
                let k = RATIONAL_K;
                one + z * (k + z) / (k * (k - z))
            }
            Generator::RlLiterature => {
                let s = SQRT_2 - 1.0;
                SQRT_2 - s * ((one - z) / (one + 2.0 * s * z)).sqrt()
            }
            Generator::Nephroid => one + z - z * z * z / 3.0,
            Generator::Sigmoid => 2.0 / (one + (-z).exp()),
        }
    }

    /// Whether the image of the closed disk is bounded.
    pub fn is_bounded(&self) -> bool {
        !matches!(self, Generator::HalfPlane { .. } | Generator::Sector { .. })
    }

    pub fn for_target(target: &Target) -> Option<Generator> {
        Some(match *target {
            Target::StarlikeOrder { alpha } => Generator::HalfPlane { alpha },
            Target::StronglyStarlike { gamma } => Generator::Sector { gamma },
            Target::Lemniscate => Generator::Lemniscate,
            Target::Exponential => Generator::Exponential,
            Target::Cardioid => Generator::Cardioid,
            Target::Sine => Generator::Sine,
            Target::Lune => Generator::Lune,
            Target::RationalR => Generator::Rational,
            Target::Nephroid => Generator::Nephroid,
            Target::SigmoidSG => Generator::Sigmoid,
            // The RL generator traces a different curve than the RL
            // inequality; it is exposed through `rl_generator_boundary`.
            Target::Parabolic | Target::RationalRL => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub w: Complex64,
}

fn check_n(n: usize) -> Result<()> {
    if n < MIN_SAMPLES {
        return Err(Error::Parameter(format!("boundary needs at least {MIN_SAMPLES} samples, got {n}")));
    }
    Ok(())
}

/// Parameter values `start + 2 pi j/(n-1)`, so the first and last samples
/// describe the same point.
fn thetas(n: usize, start: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |j| start + TAU * j as f64 / (n - 1) as f64)
}

/// `n` samples of `gen` on the unit circle starting at angle `start`.
pub fn generator_curve(gen: Generator, n: usize, start: f64) -> Result<Vec<BoundaryPoint>> {
    check_n(n)?;
    Ok(thetas(n, start)
        .map(|theta| BoundaryPoint { theta, w: gen.eval(Complex64::from_polar(1.0, theta)) })
        .collect())
}

/// Closed curve made of pieces `f(s)`, `s` in `[0, 1]`, with the parameter
/// budget split in proportion to the given lengths.
fn piecewise(n: usize, pieces: &[(f64, &dyn Fn(f64) -> Complex64)]) -> Vec<BoundaryPoint> {
    let total: f64 = pieces.iter().map(|p| p.0).sum();
    thetas(n, 0.0)
        .map(|theta| {
            let mut t = theta / TAU * total;
            let last = pieces.len() - 1;
            for (i, (len, f)) in pieces.iter().enumerate() {
                if t <= *len || i == last {
                    return BoundaryPoint { theta, w: f((t / len).clamp(0.0, 1.0)) };
                }
                t -= len;
            }
            unreachable!()
        })
        .collect()
}

fn lerp(a: Complex64, b: Complex64, s: f64) -> Complex64 {
    a + (b - a) * s
}

/// Right lune: outer arc `|w-1| = sqrt(2)` from `-i` to `i`, then inner arc
/// `|w+1| = sqrt(2)` back through `sqrt(2)-1`.
fn lune_curve(n: usize) -> Vec<BoundaryPoint> {
    let outer = |s: f64| Complex64::new(1.0, 0.0) + Complex64::from_polar(SQRT_2, -0.75 * PI + 1.5 * PI * s);
    let inner = |s: f64| Complex64::new(-1.0, 0.0) + Complex64::from_polar(SQRT_2, 0.25 * PI - 0.5 * PI * s);
    piecewise(n, &[(SQRT_2 * 1.5 * PI, &outer), (SQRT_2 * 0.5 * PI, &inner)])
}

/// The curve `|w^2 - sqrt(2) w + 1| = 1`. With `w = 1/sqrt(2) + rho e^{i phi}`
/// this becomes `rho^4 + rho^2 cos(2 phi) = 3/4`.
fn rl_oval(n: usize) -> Vec<BoundaryPoint> {
    thetas(n, 0.0)
        .map(|theta| {
            let c = (2.0 * theta).cos();
            let rho = ((-c + (c * c + 3.0).sqrt()) / 2.0).sqrt();
            BoundaryPoint { theta, w: Complex64::new(FRAC_1_SQRT_2, 0.0) + Complex64::from_polar(rho, theta) }
        })
        .collect()
}

fn half_plane_window(n: usize, alpha: f64) -> Vec<BoundaryPoint> {
    let c = Complex64::new(alpha, 0.0);
    let seg = |s: f64| lerp(c + Complex64::new(0.0, -WINDOW), c + Complex64::new(0.0, WINDOW), s);
    let arc = |s: f64| c + Complex64::from_polar(WINDOW, 0.5 * PI - PI * s);
    piecewise(n, &[(2.0 * WINDOW, &seg), (PI * WINDOW, &arc)])
}

fn sector_window(n: usize, gamma: f64) -> Vec<BoundaryPoint> {
    let half = gamma * PI / 2.0;
    let lower = |s: f64| Complex64::from_polar(WINDOW * s, -half);
    let arc = |s: f64| Complex64::from_polar(WINDOW, -half + 2.0 * half * s);
    let upper = |s: f64| Complex64::from_polar(WINDOW * (1.0 - s), half);
    piecewise(n, &[(WINDOW, &lower), (2.0 * half * WINDOW, &arc), (WINDOW, &upper)])
}

/// `v^2 = 2u - 1` for `u <= WINDOW`, closed by the segment `u = WINDOW`.
fn parabola_window(n: usize) -> Vec<BoundaryPoint> {
    let v_max = (2.0 * WINDOW - 1.0).sqrt();
    let curve = |s: f64| {
        let v = v_max * (1.0 - 2.0 * s);
        Complex64::new((v * v + 1.0) / 2.0, v)
    };
    let seg = |s: f64| Complex64::new(WINDOW, -v_max + 2.0 * v_max * s);
    // the arc length of the parabola piece is about 2 * WINDOW
    piecewise(n, &[(2.0 * WINDOW, &curve), (2.0 * v_max, &seg)])
}

/// `n` points approximating the boundary of the target domain, first and
/// last coinciding.
pub fn region_boundary(target: &Target, n: usize) -> Result<Vec<BoundaryPoint>> {
    check_n(n)?;
    target.validate()?;
    match *target {
        Target::StarlikeOrder { alpha } => Ok(half_plane_window(n, alpha)),
        Target::StronglyStarlike { gamma } => Ok(sector_window(n, gamma)),
        Target::Parabolic => Ok(parabola_window(n)),
        Target::Lune => Ok(lune_curve(n)),
        Target::RationalRL => Ok(rl_oval(n)),
        // start where the extremal functions touch the boundary
        Target::Cardioid | Target::RationalR | Target::Exponential => {
            generator_curve(Generator::for_target(target).unwrap(), n, PI)
        }
        _ => generator_curve(Generator::for_target(target).unwrap(), n, 0.0),
    }
}

/// Image of the unit circle under the RL generating function, for
/// comparison with the printed RL inequality.
pub fn rl_generator_boundary(n: usize) -> Result<Vec<BoundaryPoint>> {
    generator_curve(Generator::RlLiterature, n, 0.0)
}

/// `2e/(1+e)`, rightmost point of the sigmoid domain.
pub fn sigmoid_right_end() -> f64 {
    2.0 * E / (1.0 + E)
}
