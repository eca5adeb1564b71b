use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the crate.
///
/// Positions reported in messages are 1-based (row, column), matching the
/// labelling convention used throughout.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid diagram: black box ({row},{col}) has white boxes both to its left and above")]
    InvalidDiagram { row: usize, col: usize },

    #[error("grid must have at least one row and one column")]
    EmptyGrid,

    #[error("grid width {width} exceeds the supported maximum of {max} columns")]
    WidthTooLarge { width: usize, max: usize },

    #[error("row {row} has black boxes beyond the grid width")]
    RowOutOfWidth { row: usize },

    #[error("diagram dimensions {0}x{1} and {2}x{3} do not match")]
    GridMismatch(usize, usize, usize, usize),

    #[error("labels must be strictly increasing in row-major order")]
    BadLabelling,

    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("matrix dimension {size} exceeds the supported maximum of {max}")]
    MatrixTooLarge { size: usize, max: usize },

    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("matrix dimensions {0}x{1} and {2}x{3} are incompatible")]
    MatrixMismatch(usize, usize, usize, usize),

    #[error("index {index} out of range for dimension {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("matrix is not antisymmetric at ({row},{col})")]
    NotAntisymmetric { row: usize, col: usize },

    #[error("columns {cols:?} are entirely black")]
    AllBlackColumns { cols: Vec<usize> },

    #[error("stratum dimension is already 0")]
    ZeroStratum,

    #[error("no single blackening lowers the stratum dimension")]
    NoDescentStep,

    #[error("word is not reduced")]
    NotReduced,

    #[error("unsupported root system {name}")]
    UnsupportedRootSystem { name: String },

    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("subset entry {index} out of range for system size {size}")]
    SubsetOutOfRange { index: usize, size: usize },

    #[error("{count} diagrams exceed the enumeration cap of {cap}")]
    CapExceeded { count: BigUint, cap: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("thread pool error: {message}")]
    Parallel { message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
