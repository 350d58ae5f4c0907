use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("algebra mismatch between operands")]
    AlgebraMismatch,
    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("quotient not certified finite-dimensional: {0}")]
    NotFiniteDimensional(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent is not a sum of distinct vertex idempotents")]
    UnsupportedIdempotent,
    #[error("quotient by this idempotent is the zero algebra")]
    ZeroQuotient,
    #[error("algebra is not Nakayama")]
    NotNakayama,
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("radical computation unsupported in small characteristic: {0}")]
    SmallCharacteristic(String),
    #[error("degree {degree} exceeds the resolution cap {cap}")]
    DegreeOverflow { degree: usize, cap: usize },
    #[error("presentation cap {0} too small: kernel generators beyond cap needed")]
    CapTooSmall(usize),
    #[error("left approximation is not a monomorphism")]
    ApproximationNotMono,
    #[error("tilting module not verified: {0}")]
    TiltingNotVerified(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}
