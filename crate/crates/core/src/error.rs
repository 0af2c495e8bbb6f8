use thiserror::Error;

use crate::adjoint::WeylCertificate;
use crate::algebra::Counterexample;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("inadmissible point: {0}")]
    InadmissiblePoint(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("invalid parameter list: {0}")]
    InvalidParameters(String),
    #[error("`{0}` is not a nonzero constant times a Laurent monomial")]
    NotGamma(String),
    #[error("invalid presentation: {}", .0.join("; "))]
    InvalidPresentation(Vec<String>),
    #[error("stage shape violation: {0}")]
    StageShapeViolation(String),
    #[error("malformed word or element: {0}")]
    Malformed(String),
    #[error("degree of the zero element")]
    ZeroElement,
    #[error("factorization gap: {0}")]
    FactorizationGap(String),
    #[error("Weyl pair detected at pivot x{}: adjoint action is not diagonalizable", .0.pivot + 1)]
    WeylDetected(Box<WeylCertificate>),
    #[error("invalid Jordan pair: {0}")]
    InvalidJordanPair(String),
    #[error("witness element `{0}` is zero")]
    ZeroWitness(String),
    #[error("rebase failure: {0}")]
    RebaseFailure(String),
    #[error("presentation is not PBW-consistent: {0}")]
    Inconsistent(Box<Counterexample>),
    #[error("parameter specification violated: {0}")]
    SpecViolation(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("invalid file: {0}")]
    Format(String),
}
