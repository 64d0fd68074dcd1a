use thiserror::Error;

/// Errors raised by the algebra, map, lattice and surface operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` occurs in neither input")]
    VariableAbsent(String),
    #[error("both inputs are zero")]
    BothZero,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("expected a form in at most two variables, found {0}")]
    TooManyVariables(usize),
    #[error("empty generator list")]
    EmptyIdeal,
    #[error("zero generator in ideal")]
    ZeroGenerator,
    #[error("computation budget of {0} steps exhausted")]
    BudgetExceeded(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("the identity map has no fixed curve")]
    IdentityMap,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("lattice error: {0}")]
    Lattice(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
