use thiserror::Error;

use crate::alphabet::Letter;
use crate::tableau::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("letter {letter} out of range for m={m}, n={n}")]
    LetterOutOfRange { letter: Letter, m: u32, n: u32 },

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("tableau violation at {cell}: {reason}")]
    Violation { cell: Cell, reason: String },

    #[error("array violation: {0}")]
    Array(#[from] crate::array::ArrayViolation),

    #[error("{0} is not an outer corner")]
    NotOuterCorner(Cell),

    #[error("hole {0} lies outside the shape")]
    HoleOutsideShape(Cell),

    #[error("enumeration cap exceeded: {what} is {got}, cap {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },

    #[error("matrix constraint violated: {0}")]
    Matrix(String),

    /// A reverse step has no valid predecessor; the input is not in the image.
    #[error("infeasible reverse step: {0}")]
    Infeasible(String),
}
