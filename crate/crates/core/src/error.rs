use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range 2..=4294967295")]
    ModulusOutOfRange(u64),
    #[error("field mismatch: Z_{left} vs Z_{right}")]
    FieldMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ragged input: row {row} has length {got}, expected {expected}")]
    RaggedInput {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("empty input")]
    EmptyInput,
    #[error("duplicate points: only {distinct} of {total} points are distinct")]
    DuplicatePoints { distinct: usize, total: usize },
    #[error(
        "field too small: |k| = {have}, need at least {needed} (m choose 2 + 1 for m = {points})"
    )]
    FieldTooSmall {
        have: u64,
        needed: u64,
        points: usize,
    },
    #[error("values are not pairwise distinct")]
    DuplicateValues,
    #[error("no realization found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("reduced separator vanishes at its own point")]
    NotApplicable,
    #[error("matrix is singular")]
    Singular,
    #[error("operation requires a {expected} basis, got {got}")]
    WrongKind { expected: String, got: String },
    #[error("coefficients do not realize distinct values on the points")]
    InvalidRealization,
    #[error("number of states {0} is not prime")]
    NonPrimeStates(u64),
    #[error(
        "inconsistent data: samples {first} and {second} are equal but have different successors"
    )]
    InconsistentData { first: usize, second: usize },
    #[error("no distinct domain state remains after collapsing duplicates")]
    DuplicateCollapseEmpty,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// True for violated mathematical preconditions, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::DuplicatePoints { .. }
                | Error::FieldTooSmall { .. }
                | Error::InconsistentData { .. }
                | Error::Singular
                | Error::DuplicateValues
                | Error::RetriesExhausted(_)
                | Error::NotApplicable
                | Error::InvalidRealization
                | Error::DuplicateCollapseEmpty
                | Error::DivisionByZero
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
