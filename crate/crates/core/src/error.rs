use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not symmetric in the listed roots")]
    NotSymmetric,
    #[error("series has non-unit constant term")]
    NonUnit,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("degree {degree} out of range (socle degree {socle})")]
    DegreeOutOfRange { degree: u32, socle: u32 },
    #[error("wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("tree is not irreducible")]
    NotIrreducible,
    #[error("right-hand side is not divisible by the edge monomial")]
    NotDivisible,
    #[error("box-tensor rank {0} exceeds cap {1}")]
    RankOverflow(u32, u32),
    #[error("r = {0} is not supported (only r = 1, 2)")]
    UnsupportedR(u32),
    #[error("no exceptional table for {0}")]
    MissingTable(String),
    #[error("monomial outside tabulated range: {0}")]
    OutOfTable(String),
    #[error("matrix row {0} does not sum to zero")]
    BadMatrix(usize),
    #[error("unsupported dialect: {0}")]
    UnsupportedDialect(String),
    #[error("unknown constant: {0}")]
    UnknownConstant(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
