use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown character {ch:?} at offset {offset}")]
    UnknownCharacter { ch: char, offset: usize },

    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count must be at least {min}, got {got}")]
    TooFewStrands { min: usize, got: usize },

    #[error("malformed bracket form: {0}")]
    Bracket(String),

    #[error("generator {0} does not occur in the word; destabilize first")]
    MissingGenerator(usize),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("s = {0} is a jump point of the signature function")]
    OnJump(String),

    #[error("s = {0} must lie strictly between 0 and 1")]
    OutOfUnitInterval(String),

    #[error("could not certify the result within {bits} bits of precision")]
    PrecisionExhausted { bits: u32 },

    #[error("invalid torus parameters ({p}, {q}): {reason}")]
    TorusParams { p: i64, q: i64, reason: String },

    #[error("invalid family parameter: {0}")]
    FamilyParam(String),

    #[error("move failed: {0}")]
    Move(String),

    #[error("template error: {0}")]
    Template(String),

    #[error("script error: {0}")]
    Script(String),
}

pub type Result<T> = std::result::Result<T, Error>;
