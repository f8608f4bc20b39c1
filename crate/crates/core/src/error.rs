use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Coarse classification used by front ends to map failures onto exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The arguments lie outside the domain of the requested operation.
    Domain,
    /// A numerical procedure could not reach the requested accuracy.
    Tolerance,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Γ has a pole at the non-positive integer {0}")]
    PoleAtNonPositiveInteger(f64),
    #[error("ζ has a pole at s = 1")]
    PoleAtOne,
    #[error("parameter {0} is within the integer exclusion radius")]
    NonGenericParameter(f64),
    #[error("Li_ℓ(e^(πix)) is singular at x = {0}")]
    PolylogOnSingularity(f64),
    #[error("x = {0} is an integer; the limit expansion needs x ∉ ℤ")]
    IntegerAbscissa(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(&'static str),
    #[error("τ is too close to the Γ_ϑ-orbit of the pole")]
    NearPole,
    #[error("integrand hits the pole guard at t = {0}")]
    NearPoleOnPath(f64),
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(i64),
    #[error("fundamental-domain reduction did not terminate")]
    ReductionStalled,
    #[error("z is Γ_ϑ-equivalent to the imaginary axis (margin {0:e})")]
    AxisPole(f64),
    #[error("Re(s) = {0} is too close to a jump of the floor cutoffs")]
    UnstableCutoff(f64),
    #[error("quadrature reached error {achieved:e}, requested {requested:e}")]
    ToleranceNotMet { achieved: f64, requested: f64 },
}

impl Error {
    /// Stable identifier, suitable for machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::PoleAtNonPositiveInteger(_) => "PoleAtNonPositiveInteger",
            Error::PoleAtOne => "PoleAtOne",
            Error::NonGenericParameter(_) => "NonGenericParameter",
            Error::PolylogOnSingularity(_) => "PolylogOnSingularity",
            Error::IntegerAbscissa(_) => "IntegerAbscissa",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::NumericalDegeneracy(_) => "NumericalDegeneracy",
            Error::NearPole => "NearPole",
            Error::NearPoleOnPath(_) => "NearPoleOnPath",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::ReductionStalled => "ReductionStalled",
            Error::AxisPole(_) => "AxisPole",
            Error::UnstableCutoff(_) => "UnstableCutoff",
            Error::ToleranceNotMet { .. } => "ToleranceNotMet",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ToleranceNotMet { .. } | Error::ReductionStalled => ErrorKind::Tolerance,
            _ => ErrorKind::Domain,
        }
    }
}
