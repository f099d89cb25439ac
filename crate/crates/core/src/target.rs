//! The twelve starlike target families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::class::ClassId;
use crate::error::{Error, Result};

/// Family tag without parameters, in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    StarlikeOrder,
    Lemniscate,
    Parabolic,
    Exponential,
    Cardioid,
    Sine,
    Lune,
    RationalR,
    RationalRL,
    StronglyStarlike,
    Nephroid,
    SigmoidSG,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::StarlikeOrder,
        Family::Lemniscate,
        Family::Parabolic,
        Family::Exponential,
        Family::Cardioid,
        Family::Sine,
        Family::Lune,
        Family::RationalR,
        Family::RationalRL,
        Family::StronglyStarlike,
        Family::Nephroid,
        Family::SigmoidSG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::StarlikeOrder => "starlike",
            Family::Lemniscate => "lemniscate",
            Family::Parabolic => "parabolic",
            Family::Exponential => "exponential",
            Family::Cardioid => "cardioid",
            Family::Sine => "sine",
            Family::Lune => "lune",
            Family::RationalR => "rational",
            Family::RationalRL => "rl",
            Family::StronglyStarlike => "strongly",
            Family::Nephroid => "nephroid",
            Family::SigmoidSG => "sg",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f = match s.to_ascii_lowercase().as_str() {
            "starlike" | "starlike-order" => Family::StarlikeOrder,
            "lemniscate" => Family::Lemniscate,
            "parabolic" => Family::Parabolic,
            "exponential" | "exp" => Family::Exponential,
            "cardioid" => Family::Cardioid,
            "sine" | "sin" => Family::Sine,
            "lune" => Family::Lune,
            "rational" | "rational-r" => Family::RationalR,
            "rl" | "rational-rl" => Family::RationalRL,
            "strongly" | "strongly-starlike" => Family::StronglyStarlike,
            "nephroid" => Family::Nephroid,
            "sg" | "sigmoid" => Family::SigmoidSG,
            other => return Err(Error::Parameter(format!("unknown target `{other}`"))),
        };
        Ok(f)
    }
}

/// A target family with its order parameter where one applies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Target {
    /// `Re w > alpha`, `alpha` in `[0, 1)`.
    StarlikeOrder { alpha: f64 },
    Lemniscate,
    Parabolic,
    Exponential,
    Cardioid,
    Sine,
    Lune,
    RationalR,
    RationalRL,
    /// `|arg w| < gamma*pi/2`, `gamma` in `(0, 1]`.
    StronglyStarlike { gamma: f64 },
    Nephroid,
    SigmoidSG,
}

impl Target {
    pub fn starlike(alpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Parameter(format!("alpha = {alpha} outside [0, 1)")));
        }
        Ok(Target::StarlikeOrder { alpha })
    }

    pub fn strongly(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma <= 1.0) {
            return Err(Error::Parameter(format!("gamma = {gamma} outside (0, 1]")));
        }
        Ok(Target::StronglyStarlike { gamma })
    }

    /// Builds a target from its family, taking `alpha`/`gamma` only where
    /// the family uses them.
    pub fn from_family(family: Family, alpha: Option<f64>, gamma: Option<f64>) -> Result<Self> {
        match family {
            Family::StarlikeOrder => {
                if gamma.is_some() {
                    return Err(Error::Parameter("gamma applies only to the strongly starlike target".into()));
                }
                Target::starlike(alpha.unwrap_or(0.0))
            }
            Family::StronglyStarlike => {
                if alpha.is_some() {
                    return Err(Error::Parameter("alpha applies only to the starlike target".into()));
                }
                let gamma = gamma.ok_or_else(|| Error::Parameter("strongly starlike target needs gamma".into()))?;
                Target::strongly(gamma)
            }
            other => {
                if alpha.is_some() || gamma.is_some() {
                    return Err(Error::Parameter(format!("target {other} takes no alpha/gamma")));
                }
                Ok(Target::plain(other))
            }
        }
    }

    fn plain(family: Family) -> Self {
        match family {
            Family::StarlikeOrder => Target::StarlikeOrder { alpha: 0.0 },
            Family::Lemniscate => Target::Lemniscate,
            Family::Parabolic => Target::Parabolic,
            Family::Exponential => Target::Exponential,
            Family::Cardioid => Target::Cardioid,
            Family::Sine => Target::Sine,
            Family::Lune => Target::Lune,
            Family::RationalR => Target::RationalR,
            Family::RationalRL => Target::RationalRL,
            Family::StronglyStarlike => Target::StronglyStarlike { gamma: 1.0 },
            Family::Nephroid => Target::Nephroid,
            Family::SigmoidSG => Target::SigmoidSG,
        }
    }

    /// All twelve targets in declaration order with the given defaults.
    pub fn all(alpha: f64, gamma: f64) -> Result<Vec<Target>> {
        let alpha = Target::starlike(alpha)?;
        let gamma = Target::strongly(gamma)?;
        Ok(Family::ALL
            .iter()
            .map(|&f| match f {
                Family::StarlikeOrder => alpha,
                Family::StronglyStarlike => gamma,
                other => Target::plain(other),
            })
            .collect())
    }

    pub fn family(&self) -> Family {
        match self {
            Target::StarlikeOrder { .. } => Family::StarlikeOrder,
            Target::Lemniscate => Family::Lemniscate,
            Target::Parabolic => Family::Parabolic,
            Target::Exponential => Family::Exponential,
            Target::Cardioid => Family::Cardioid,
            Target::Sine => Family::Sine,
            Target::Lune => Family::Lune,
            Target::RationalR => Family::RationalR,
            Target::RationalRL => Family::RationalRL,
            Target::StronglyStarlike { .. } => Family::StronglyStarlike,
            Target::Nephroid => Family::Nephroid,
            Target::SigmoidSG => Family::SigmoidSG,
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            Target::StarlikeOrder { alpha } => Some(alpha),
            _ => None,
        }
    }

    pub fn gamma(&self) -> Option<f64> {
        match *self {
            Target::StronglyStarlike { gamma } => Some(gamma),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Target::StarlikeOrder { alpha } => Target::starlike(alpha).map(|_| ()),
            Target::StronglyStarlike { gamma } => Target::strongly(gamma).map(|_| ()),
            _ => Ok(()),
        }
    }

    /// Whether the G2 theorem covers this target. Starlikeness of order 0 is
    /// the base case; everything else here needs the extended flag.
    pub fn in_paper_scope(&self, class_id: ClassId) -> bool {
        match class_id {
            ClassId::G1 => true,
            ClassId::G2 => match *self {
                Target::StarlikeOrder { alpha } => alpha == 0.0,
                Target::Lemniscate | Target::Parabolic | Target::Exponential => false,
                _ => true,
            },
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Target::StarlikeOrder { alpha } => write!(f, "starlike(alpha={alpha})"),
            Target::StronglyStarlike { gamma } => write!(f, "strongly(gamma={gamma})"),
            other => f.write_str(other.family().name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_only_where_they_belong() {
        assert!(Target::from_family(Family::Lune, Some(0.2), None).is_err());
        assert!(Target::from_family(Family::StarlikeOrder, None, Some(0.5)).is_err());
        assert!(Target::from_family(Family::StronglyStarlike, None, None).is_err());
        assert_eq!(Target::from_family(Family::StarlikeOrder, None, None).unwrap().alpha(), Some(0.0));
        assert!(Target::starlike(1.0).is_err());
        assert!(Target::strongly(0.0).is_err());
        assert!(Target::strongly(1.0).is_ok());
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }

    #[test]
    fn g2_scope() {
        let in_scope: Vec<_> = Target::all(0.0, 0.5)
            .unwrap()
            .into_iter()
            .filter(|t| t.in_paper_scope(ClassId::G2))
            .collect();
        assert_eq!(in_scope.len(), 9);
        assert!(!Target::starlike(0.3).unwrap().in_paper_scope(ClassId::G2));
    }
}
