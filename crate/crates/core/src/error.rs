use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported radical: {0}")]
    UnsupportedRadical(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("series did not converge within {0} terms")]
    NonConvergence(usize),
    #[error("decay model violated at term {0}")]
    DecayViolation(usize),
    #[error("divergent argument: |z| = {0}")]
    Divergent(f64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("order {0} exceeds supported maximum")]
    OrderOverflow(usize),
    #[error("radius {0} too small for extrapolation")]
    RadiusTooSmall(usize),
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("malformed coefficient file {path}: {reason}")]
    MalformedFile { path: String, reason: String },
    #[error("Fricke sign detection failed for {0}")]
    FrickeDetection(String),
    #[error("insufficient coefficients for {label}: need {need}, have {have}")]
    InsufficientCoefficients { label: String, need: usize, have: usize },
    #[error("root finder did not converge at {0}")]
    RootFinder(String),
    #[error("quadrature budget exhausted: {0}")]
    Quadrature(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("route failure: {0}")]
    Route(String),
}

pub type Result<T> = std::result::Result<T, Error>;
