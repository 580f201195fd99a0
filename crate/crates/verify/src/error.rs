use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("action is not a bijection: elements {first} and {second} share an image")]
    NotBijective { first: usize, second: usize },
    #[error("image of element {index} lies outside the set")]
    OutsideSet { index: usize },
    #[error("element set contains duplicates")]
    DuplicateElement,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("unknown action {0:?}")]
    UnknownAction(String),
    #[error("unknown format {0:?}")]
    UnknownFormat(String),
    #[error("grid point {point} has {count} elements, above the ceiling {ceiling}")]
    GridTooLarge { point: String, count: usize, ceiling: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("cannot parse input: {0}")]
    Input(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] vpro_core::Error),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
