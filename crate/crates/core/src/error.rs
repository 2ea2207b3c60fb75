use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("polynomial is not divisible by the given linear form")]
    NonDivisible,
    #[error("Dunkl difference quotient was not a polynomial (internal invariant violated)")]
    InternalNonDivisible,
    #[error("total degree {0} of the residue integrand is not an integer")]
    NonIntegerTotalDegree(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("degree cap {cap} too small: slices have not vanished by then")]
    CapTooSmall { cap: usize },
    #[error("orbit spectrum is degenerate: lambda has repeated entries")]
    DegenerateSpectrum,
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("degree {degree} exceeds the module slice cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("operator is not W-invariant")]
    NotInvariant,
    #[error("coordinates {0} and {1} collide")]
    CollidingCoordinates(usize, usize),
    #[error("eigenvalue continuity tracking failed at t = {0}")]
    EigenvalueCollision(f64),
    #[error("integration step brought particles into collision at t = {0}")]
    StepCollision(f64),
    #[error("coordinate {0} is not positive")]
    NonPositiveCoordinate(usize),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("coefficient field does not contain the required irrationality: {0}")]
    UnsupportedField(String),
    #[error("{0}")]
    Parse(String),
    #[error("serialization failed: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
