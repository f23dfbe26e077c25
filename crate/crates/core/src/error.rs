use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("weight of variable `{name}` must be positive")]
    NonPositiveWeight { name: String },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("ring declares {names} names but {weights} weights")]
    WeightCount { names: usize, weights: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("not homogeneous: term `{term}` has degree {found}, expected {expected}")]
    NotHomogeneous {
        term: String,
        found: u32,
        expected: u32,
    },
    #[error("the unit ideal is not a proper ideal")]
    ImproperIdeal,
    #[error("colon by the zero ideal is undefined")]
    ZeroColon,
    #[error("saturation did not stabilize after {rounds} rounds")]
    SaturationCap { rounds: usize },
    #[error("exponent must be at least {min}, got {k}")]
    InvalidExponent { k: usize, min: usize },
    #[error("containment failed: {0}")]
    NotContained(String),
    #[error("ideal is not a monomial ideal")]
    NotMonomial,
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
