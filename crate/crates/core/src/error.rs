use num_complex::Complex64;
use thiserror::Error;

/// Every failure mode reported by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument {at} lies within {distance:e} of a pole")]
    PoleProximity { at: Complex64, distance: f64 },

    #[error("argument step from {from} to {to} moved the phase by {delta:.3} rad")]
    BranchJump { from: Complex64, to: Complex64, delta: f64 },

    #[error("table limit {requested} exceeds ceiling {ceiling}")]
    LimitTooLarge { requested: u64, ceiling: u64 },

    #[error("argument out of domain: {0}")]
    ArgumentDomain(String),

    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),

    #[error("power series would overflow for x = {0}")]
    SeriesOverflow(f64),

    #[error("contour abscissa {abscissa} is within {distance:e} of a kernel pole")]
    ContourOnPole { abscissa: f64, distance: f64 },

    #[error("tail bound {tail:e} exceeds tolerance {tolerance:e} at t_max = {t_max}")]
    TailBoundViolated { tail: f64, tolerance: f64, t_max: f64 },

    #[error("pole at {pole} lies in the strip between the two abscissae")]
    PoleInStrip { pole: Complex64 },

    #[error("{at} is not a zero: |L| = {residual:e}")]
    NotAZero { at: Complex64, residual: f64 },

    #[error("derivative vanishes at {0}; possible multiple zero")]
    DerivativeVanishes(Complex64),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("iterate {at} left the basin around {guess}")]
    BasinEscape { guess: f64, at: Complex64 },

    #[error("filter root at {0} is not real")]
    NonRealRoot(Complex64),

    #[error("zero count {found} disagrees with prediction {predicted} below T = {t_max} (suspect interval [{lo}, {hi}])")]
    MissedZeroSuspected { found: usize, predicted: i64, t_max: f64, lo: f64, hi: f64 },

    #[error("catalog covers t <= {covered} but {required} is required")]
    IncompleteCatalog { covered: f64, required: f64 },

    #[error("checksum mismatch in catalog")]
    ChecksumMismatch,

    #[error("unsupported catalog version `{0}`")]
    VersionUnsupported(String),

    #[error("malformed catalog: {0}")]
    CatalogFormat(String),

    #[error("window holds {found} zeros, need at least {needed}")]
    WindowTooSparse { found: usize, needed: usize },

    #[error("series diverges: |2az| = {0} >= 1")]
    SeriesDivergent(f64),

    #[error("integration step underflow at x = {0}")]
    StepUnderflow(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
