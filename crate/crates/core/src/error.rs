use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("modulus {0} is not an odd prime")]
    InvalidModulus(u64),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("grading has {got} weights, ring has {expected} variables")]
    GradingMismatch { expected: usize, got: usize },
    #[error("no grading available")]
    MissingGrading,
    #[error("degree {bound} is smaller than the top degree {degree}")]
    DegreeTooSmall { bound: u64, degree: u64 },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("resource budget exhausted")]
    Timeout,
    #[error("colon by the zero ideal")]
    ZeroIdeal,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
