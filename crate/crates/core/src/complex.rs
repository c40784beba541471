//! Complex scalar conventions shared by every module.

use serde::{Deserialize, Serialize};

pub use num_complex::Complex64;

/// A point s = σ + it of the complex plane.
pub type ComplexPoint = Complex64;

#[inline]
pub const fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn is_finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Relative distance |a − b| / max(|b|, floor).
#[inline]
pub fn rel_diff(a: Complex64, b: Complex64, floor: f64) -> f64 {
    (a - b).norm() / b.norm().max(floor)
}

/// Working precision for evaluations that support an extended mode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Precision {
    /// Native binary64 with compensated summation.
    #[default]
    Double,
    /// Unevaluated sum of two doubles, roughly 31 significant digits.
    DoubleDouble,
}

impl Precision {
    pub fn tag(self) -> &'static str {
        match self {
            Precision::Double => "double",
            Precision::DoubleDouble => "double_double",
        }
    }
}

impl std::str::FromStr for Precision {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "double" => Ok(Precision::Double),
            "double_double" | "double-double" | "dd" => Ok(Precision::DoubleDouble),
            other => Err(format!("unknown precision `{other}`")),
        }
    }
}
