use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet needs at least two distinct symbols")]
    AlphabetTooSmall,
    #[error("alphabet cannot have more than 255 symbols")]
    AlphabetTooLarge,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
    #[error("symbol index {index} out of range for alphabet of size {q}")]
    SymbolOutOfRange { index: u8, q: usize },
    #[error("{0} requires a nonempty word")]
    EmptyWord(&'static str),
    #[error("word is not rich")]
    NotRich,
    #[error("word is not a switch")]
    NotASwitch,
    #[error("word is not a palindrome")]
    NotAPalindrome,
    #[error("pattern does not occur as a factor")]
    NotAFactor,
    #[error("cannot roll back {steps} steps; only {available} letters appended")]
    RollbackTooFar { steps: usize, available: usize },
    #[error("{0}")]
    InvalidArgument(&'static str),
    #[error("falsification: {0}")]
    Falsification(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
