use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid symbol {0:?}; expected one of 0 1 a b (or 2 3)")]
    InvalidSymbol(char),

    #[error("invalid letter {0:?}; expected one of A B C D")]
    InvalidLetter(char),

    #[error("words must have positive length")]
    EmptyWord,

    #[error("generator rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },

    #[error("{what} needs {required} operations, over the enumeration limit of {limit}{hint}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        limit: u64,
        hint: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("the two words are identical")]
    IdenticalWords,

    #[error("a code needs at least 2 codewords, got {0}")]
    TooFewCodewords(usize),

    #[error(
        "no code of dimension >= 1 with minimum distance >= {d} found within {attempts} attempts"
    )]
    NoCodeFound { d: usize, attempts: usize },

    #[error("letter budget of {letters} is too small to announce a single codeword")]
    LettersExhausted { letters: usize },

    #[error("numeric overflow: {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
