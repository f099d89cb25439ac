//! Function classes with a fixed second coefficient.
//!
//! `G1` holds `f(z) = z + 4b z^2 + ...` with `Re((1+z)^2 f(z)/z) > 0`, and
//! `G2` holds `f(z) = z + 3b z^2 + ...` with `Re((1+z) f(z)/z) > 0`. Every
//! radius depends on `b` only through the magnitude `|1+2b|` (G1) or
//! `|1+3b|` (G2), stored here as `coeff_mag`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassId {
    G1,
    G2,
}

impl ClassId {
    /// Closed interval of admissible `b`.
    pub fn b_range(self) -> (f64, f64) {
        match self {
            ClassId::G1 => (-1.0, 0.0),
            ClassId::G2 => (-1.0, 1.0 / 3.0),
        }
    }

    /// Largest admissible `coeff_mag`.
    pub fn max_coeff_mag(self) -> f64 {
        match self {
            ClassId::G1 => 1.0,
            ClassId::G2 => 2.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassId::G1 => "g1",
            ClassId::G2 => "g2",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g1" => Ok(ClassId::G1),
            "g2" => Ok(ClassId::G2),
            other => Err(Error::Parameter(format!("unknown class `{other}` (expected g1 or g2)"))),
        }
    }
}

/// A validated class together with its second-coefficient parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec {
    class_id: ClassId,
    b: f64,
    coeff_mag: f64,
}

impl ClassSpec {
    /// Builds the class from `b`, rejecting values outside the theorem
    /// hypotheses `|1+2b| <= 1` (G1, i.e. `b` in `[-1, 0]`) and
    /// `|1+3b| <= 2` (G2, i.e. `b` in `[-1, 1/3]`).
    pub fn new(class_id: ClassId, b: f64) -> Result<Self> {
        let (lo, hi) = class_id.b_range();
        if !(b >= lo && b <= hi) {
            let hi_txt = match class_id {
                ClassId::G1 => "0",
                ClassId::G2 => "1/3",
            };
            return Err(Error::Parameter(format!(
                "b = {b} outside the admissible interval [-1, {hi_txt}] for {class_id}"
            )));
        }
        let coeff_mag = match class_id {
            ClassId::G1 => (1.0 + 2.0 * b).abs(),
            ClassId::G2 => (1.0 + 3.0 * b).abs(),
        };
        Ok(ClassSpec { class_id, b, coeff_mag })
    }

    /// Builds the class directly from `b1 = |1+2b|` or `b' = |1+3b|`.
    ///
    /// The recorded `b` is the representative in `[-1, -1/2]` (G1) or
    /// `[-1, -1/3]` (G2).
    pub fn from_coeff_mag(class_id: ClassId, coeff_mag: f64) -> Result<Self> {
        let max = class_id.max_coeff_mag();
        if !(coeff_mag >= 0.0 && coeff_mag <= max) {
            return Err(Error::Parameter(format!(
                "coefficient magnitude {coeff_mag} outside [0, {max}] for {class_id}"
            )));
        }
        let b = match class_id {
            ClassId::G1 => -(1.0 + coeff_mag) / 2.0,
            ClassId::G2 => -(1.0 + coeff_mag) / 3.0,
        };
        Ok(ClassSpec { class_id, b, coeff_mag })
    }

    pub fn class_id(&self) -> ClassId {
        self.class_id
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `b1 = |1+2b|` for G1, `b' = |1+3b|` for G2.
    pub fn coeff_mag(&self) -> f64 {
        self.coeff_mag
    }

    /// `b` values evenly spaced over the admissible interval.
    pub fn standard_b_grid(class_id: ClassId, points: usize) -> Vec<f64> {
        let (lo, hi) = class_id.b_range();
        match points {
            0 => Vec::new(),
            1 => vec![lo],
            n => (0..n)
                .map(|i| {
                    if i == n - 1 {
                        hi
                    } else {
                        lo + (hi - lo) * i as f64 / (n - 1) as f64
                    }
                })
                .collect(),
        }
    }
}
