//! Extremal functions of the two classes and their Schwarz functions.
//!
//! With `beta = 1 + 2b` (G1) and `beta' = 1 + 3b` (G2):
//!
//! ```text
//! f1(z) = z(1 - z) / ((1 + z)(1 - 2 beta z + z^2))
//! f2(z) = z(1 + 2 beta z + z^2) / ((1 + z)^2 (1 - z^2))
//! f3(z) = z(1 + beta' z + z^2) / ((1 + z)(1 - z^2))
//! ```

use num_complex::Complex64;
use serde::Serialize;

use crate::class::ClassId;
use crate::error::{Error, Result};

const POLE_EPS: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExtremalId {
    F1,
    F2,
    F3,
}

impl ExtremalId {
    pub fn class_id(self) -> ClassId {
        match self {
            ExtremalId::F1 | ExtremalId::F2 => ClassId::G1,
            ExtremalId::F3 => ClassId::G2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExtremalId::F1 => "f1",
            ExtremalId::F2 => "f2",
            ExtremalId::F3 => "f3",
        }
    }

    /// Power `k` with `(1+z)^k f(z)/z` of positive real part.
    pub fn weight(self) -> i32 {
        match self {
            ExtremalId::F1 | ExtremalId::F2 => 2,
            ExtremalId::F3 => 1,
        }
    }
}

fn check_b(class_id: ClassId, b: f64) -> Result<()> {
    let (lo, hi) = class_id.b_range();
    if b >= lo && b <= hi {
        Ok(())
    } else {
        Err(Error::Parameter(format!("b = {b} outside [{lo}, {hi}] for {class_id}")))
    }
}

fn beta(id: ExtremalId, b: f64) -> f64 {
    match id {
        ExtremalId::F1 | ExtremalId::F2 => 1.0 + 2.0 * b,
        ExtremalId::F3 => 1.0 + 3.0 * b,
    }
}

fn nonzero(v: Complex64, what: &str) -> Result<Complex64> {
    if v.norm() < POLE_EPS {
        Err(Error::Evaluation(format!("{what} vanishes")))
    } else {
        Ok(v)
    }
}

/// Numerator factor (after `z`) and denominator of the extremal function.
fn factors(id: ExtremalId, b: f64, z: Complex64) -> (Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    let be = beta(id, b);
    match id {
        ExtremalId::F1 => (one - z, (one + z) * (one - 2.0 * be * z + z * z)),
        ExtremalId::F2 => (one + 2.0 * be * z + z * z, (one + z) * (one + z) * (one - z * z)),
        ExtremalId::F3 => (one + be * z + z * z, (one + z) * (one - z * z)),
    }
}

pub fn eval_extremal(id: ExtremalId, b: f64, z: Complex64) -> Result<Complex64> {
    check_b(id.class_id(), b)?;
    let (num, den) = factors(id, b, z);
    let den = nonzero(den, "denominator")?;
    Ok(z * num / den)
}

/// `z f'(z)/f(z)` from the factored form: each factor `g` contributes
/// `+- z g'(z)/g(z)`.
pub fn log_deriv(id: ExtremalId, b: f64, z: Complex64) -> Result<Complex64> {
    check_b(id.class_id(), b)?;
    let one = Complex64::new(1.0, 0.0);
    let be = beta(id, b);
    let term = |num: Complex64, den: Complex64, what: &str| -> Result<Complex64> { Ok(num / nonzero(den, what)?) };
    let v = match id {
        ExtremalId::F1 => {
            one - term(z, one - z, "1 - z")?
                - term(z, one + z, "1 + z")?
                - term(z * (2.0 * z - 2.0 * be), one - 2.0 * be * z + z * z, "1 - 2 beta z + z^2")?
        }
        ExtremalId::F2 => {
            one + term(z * (2.0 * be + 2.0 * z), one + 2.0 * be * z + z * z, "1 + 2 beta z + z^2")?
                - term(2.0 * z, one + z, "1 + z")?
                + term(2.0 * z * z, one - z * z, "1 - z^2")?
        }
        ExtremalId::F3 => {
            one + term(z * (be + 2.0 * z), one + be * z + z * z, "1 + beta z + z^2")?
                - term(z, one + z, "1 + z")?
                + term(2.0 * z * z, one - z * z, "1 - z^2")?
        }
    };
    Ok(v)
}

/// `(1+z)^k f(z)/z`, the function whose real part defines the class; 1 at
/// the origin.
pub fn caratheodory_part(id: ExtremalId, b: f64, z: Complex64) -> Result<Complex64> {
    check_b(id.class_id(), b)?;
    let one = Complex64::new(1.0, 0.0);
    let (num, den) = factors(id, b, z);
    let den = nonzero(den, "denominator")?;
    Ok((one + z).powi(id.weight()) * num / den)
}

/// Schwarz functions `w1`, `w2` (G1) and `w3` (G2).
pub fn schwarz_eval(index: u8, b: f64, z: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let (num, den) = match index {
        1 => {
            check_b(ClassId::G1, b)?;
            let be = 1.0 + 2.0 * b;
            (z * (z - be), one - be * z)
        }
        2 => {
            check_b(ClassId::G1, b)?;
            let be = 1.0 + 2.0 * b;
            (z * (z + be), one + be * z)
        }
        3 => {
            check_b(ClassId::G2, b)?;
            let half = (1.0 + 3.0 * b) / 2.0;
            (z * (z + half), one + half * z)
        }
        other => return Err(Error::Parameter(format!("no Schwarz function w{other}"))),
    };
    Ok(num / nonzero(den, "Schwarz denominator")?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn normalization() {
        for id in [ExtremalId::F1, ExtremalId::F2, ExtremalId::F3] {
            assert_eq!(eval_extremal(id, -1.0, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
            assert_eq!(log_deriv(id, -1.0, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
            let h = 1e-6;
            let d = eval_extremal(id, -1.0, c(h, 0.0)).unwrap() / h;
            assert!((d - 1.0).norm() < 1e-5);
        }
    }

    #[test]
    fn f1_at_b_minus_one() {
        let z = c(0.3, -0.2);
        let want = z * (1.0 - z) / (1.0 + z).powi(3);
        assert!((eval_extremal(ExtremalId::F1, -1.0, z).unwrap() - want).norm() < 1e-15);
    }

    #[test]
    fn schwarz_examples() {
        let z = c(0.4, 0.1);
        assert!((schwarz_eval(1, -1.0, z).unwrap() - z).norm() < 1e-15);
        assert_eq!(schwarz_eval(3, 0.2, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert!((schwarz_eval(2, -0.5, c(0.3, 0.0)).unwrap() - c(0.09, 0.0)).norm() < 1e-15);
        assert!(schwarz_eval(4, 0.0, z).is_err());
        assert!(schwarz_eval(3, 0.5, z).is_err());
    }

    #[test]
    fn pole_reported() {
        assert!(matches!(eval_extremal(ExtremalId::F2, 0.0, c(-1.0, 0.0)), Err(Error::Evaluation(_))));
        assert!(log_deriv(ExtremalId::F3, 0.0, c(1.0, 0.0)).is_err());
    }
}
