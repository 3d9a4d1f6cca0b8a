use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("map is not continuous: preimage of open {0} is not open")]
    NotContinuous(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("element {0:#b} is not in the Boolean algebra with {1} atoms")]
    ForeignElement(u64, usize),

    #[error("Boolean algebra too large: {0} atoms (max {1})")]
    AlgebraTooLarge(usize, usize),

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("no ultrafilter extends the improper filter")]
    ImproperFilter,

    #[error("target is not Hausdorff (not discrete): cluster point of a pushed-forward ultrafilter is not unique")]
    TargetNotHausdorff,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse scalar `{0}`: {1}")]
    ParseScalar(String, String),

    #[error("cannot parse magnitude `{0}`")]
    ParseAbsValue(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("mismatched {0}")]
    Mismatch(&'static str),

    #[error("function is not constant on the component containing `{0}`")]
    NotLocallyConstant(String),

    #[error("ideal is not prime: its zero set meets {0} components")]
    NotPrime(usize),

    #[error("ideal is not maximal: its zero set meets {0} components")]
    NotMaximal(usize),

    #[error("function does not belong to the ideal")]
    NotInIdeal,

    #[error("empty space has no maximal ideals")]
    EmptySpace,

    #[error("radius must be positive")]
    ZeroRadius,

    #[error("scaling element must satisfy 0 < ‖f‖ <= |a|")]
    BadScale,

    #[error("unsupported extension `{0}` (no orthogonal basis available)")]
    UnsupportedExtension(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("malformed config: {0}")]
    Config(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
