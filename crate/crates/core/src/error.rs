use thiserror::Error;

use crate::gf2::BitVector;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("subspace is not q-isotropic: q({x}, {y}) = 1")]
    NotIsotropic { x: BitVector, y: BitVector },

    #[error("code is not all-even: {word} has odd weight")]
    NotAllEven { word: BitVector },

    #[error("code is not self-orthogonal: {x} . {y} = 1")]
    NotSelfOrthogonal { x: BitVector, y: BitVector },

    #[error("capacity exceeded: {what} needs {requested}, cap is {cap}")]
    Capacity {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
