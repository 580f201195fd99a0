use thiserror::Error;

use crate::kreweras::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover ({0}, {1}) refers to an element outside the poset")]
    UnknownCoverElement(usize, usize),
    #[error("duplicate element id {0}")]
    DuplicateElement(String),
    #[error("cover relations contain a cycle")]
    Cycle,
    #[error("cover ({0}, {1}) is implied by transitivity")]
    RedundantCover(usize, usize),
    #[error("chain length must be at least 1, got {0}")]
    EmptyChain(usize),
    #[error("poset is not graded")]
    NotGraded,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid linear extension: {0}")]
    InvalidLinearExtension(String),
    #[error("poset is not of the form V x [n]")]
    NotVProduct,
    #[error("invalid Kreweras word: {0}")]
    InvalidKrewerasWord(String),
    #[error("q = {q} is too small, need at least {min}")]
    QTooSmall { q: usize, min: usize },
    #[error("invalid P-strict labeling: {0}")]
    InvalidLabeling(String),
    #[error("expected {expected} blocks, found {found}")]
    BlockCountMismatch { expected: usize, found: usize },
    #[error("letter {letter} occurs {found} times, expected {expected}")]
    LetterCountMismatch {
        letter: Letter,
        expected: usize,
        found: usize,
    },
    #[error("prefix condition fails at block {block} for letter {letter}")]
    PrefixViolation { block: usize, letter: Letter },
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("word has double arcs")]
    HasDoubleArcs,
    #[error("no double arc between blocks ({0}, {1})")]
    NoSuchDoubleArc(usize, usize),
    #[error("block sizes sum to {found}, word has length {expected}")]
    BlockSizeMismatch { expected: usize, found: usize },
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("poset mismatch")]
    PosetMismatch,
    #[error("invalid P-partition: {0}")]
    InvalidPPartition(String),
    #[error("not a poset automorphism: {0}")]
    NotAnAutomorphism(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
