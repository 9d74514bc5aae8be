use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("syntax error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow (limit {})", u16::MAX)]
    ExponentOverflow,
    #[error("too many variables ({0}, limit {1})")]
    TooManyVariables(usize, usize),
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("images are not homogeneous of one common degree for any positive weighting")]
    NonEquigenerated,
    #[error("map has a zero image")]
    ZeroImage,
    #[error("unit ideal has no projective dimension or degree")]
    UnitIdeal,
    #[error("ideal is not saturated")]
    NotSaturated,
    #[error("non-minimal resolution passed where a minimal one is required")]
    NotMinimal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("{what}: retry budget of {budget} exhausted (seed {seed})")]
    RetryBudget { what: String, budget: usize, seed: u64 },
    #[error("stabilization not reached: {0}")]
    NotStabilized(String),
    #[error("no case matches the invariants {0}")]
    Unclassified(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
