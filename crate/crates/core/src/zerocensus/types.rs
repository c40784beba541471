use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The L-function whose critical-line zeros are catalogued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LFunction {
    Zeta,
    Beta,
}

impl LFunction {
    pub fn as_str(self) -> &'static str {
        match self {
            LFunction::Zeta => "zeta",
            LFunction::Beta => "beta",
        }
    }
}

impl fmt::Display for LFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LFunction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zeta" => Ok(LFunction::Zeta),
            "beta" => Ok(LFunction::Beta),
            other => Err(format!("unknown function `{other}`")),
        }
    }
}

/// How a zero ordinate was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroMethod {
    SignScan,
    NewtonRefine,
    FilterRoot,
}

impl ZeroMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroMethod::SignScan => "sign_scan",
            ZeroMethod::NewtonRefine => "newton_refine",
            ZeroMethod::FilterRoot => "filter_root",
        }
    }
}

impl fmt::Display for ZeroMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ZeroMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sign_scan" => Ok(ZeroMethod::SignScan),
            "newton_refine" => Ok(ZeroMethod::NewtonRefine),
            "filter_root" => Ok(ZeroMethod::FilterRoot),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// One located critical-line zero 1/2 + i·ordinate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub index: usize,
    pub ordinate: f64,
    pub residual: f64,
    pub function: LFunction,
    pub method: ZeroMethod,
}
