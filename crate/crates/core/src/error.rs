use std::io;

use crate::coeff::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("coefficient domains differ: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("division by zero")]
    DivisionByZero,

    #[error("no admissible coefficient left to sample in {0}")]
    ExhaustedDomain(Domain),

    #[error("invalid modulus {0}: must be a prime >= 3 and < 2^63")]
    InvalidModulus(u64),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("monomial does not divide")]
    NotDivisible,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("monomial ideal needs at least one generator")]
    EmptyGeneratorSet,

    #[error("operation requires {expected} variables, ideal has {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("monomial ideal is not Artinian (missing a pure power of x{0})")]
    NotArtinian(usize),

    #[error("degree order violated: deg f1 = {first} exceeds deg f2 = {second}")]
    DegreeOrder { first: u32, second: u32 },

    #[error("degenerate (non-generic) input: {0}")]
    Degenerate(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidSpec(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn arity(expected: usize, found: usize) -> Self {
        Error::ArityMismatch { expected, found }
    }
}
