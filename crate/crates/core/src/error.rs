use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter name {0:?}")]
    InvalidName(String),
    #[error("duplicate element {0:?}")]
    DuplicateElement(String),
    #[error("unknown letter {0:?}")]
    UnknownLetter(String),
    #[error("relations form a cycle through {0:?} and {1:?}")]
    CycleDetected(String, String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("posets have different carriers")]
    CarrierMismatch,
    #[error("poset has {0} elements, at most {max} are supported", max = crate::poset::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("letter {0:?} already belongs to the alphabet")]
    LetterCollision(String),
    #[error("augmentation adds the relation {0:?} < {1:?} between original letters")]
    AugmentationDistorts(String, String),
    #[error("poset has no least element")]
    NoLeast,
    #[error("poset has no greatest element")]
    NoGreatest,
    #[error("least and greatest element coincide")]
    DegenerateBounds,
    #[error("word contains the auxiliary letter {0:?}")]
    AuxInWord(String),
    #[error("{0}")]
    WrongAlphabet(String),
    #[error("size limit exceeded: {size} > {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("table is not a partial order: {0}")]
    NotAPoset(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}
