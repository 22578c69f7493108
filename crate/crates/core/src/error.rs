use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyString,
    #[error("invalid Pauli character {found:?} at position {position}")]
    InvalidCharacter { position: usize, found: char },
    #[error("Pauli string mixes letter (IXYZ) and digit (0123) alphabets")]
    MixedAlphabet,
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("{n} qubits exceeds the sparse composition limit of {max}")]
    TooManyQubits { n: usize, max: usize },
    #[error("{n} qubits exceeds the dense matrix limit of {max}")]
    TooLargeForDense { n: usize, max: usize },
    #[error("axis at position {position} is not diagonal (expected I or Z)")]
    NonDiagonalAxis { position: usize },
    #[error("qubit index {index} out of range for {len} qubits")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NonSquare { rows: usize, row: usize, len: usize },
    #[error("matrix must act on at least one qubit")]
    ZeroQubits,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("term {index} has {found} qubits, expected {expected}")]
    LengthMismatch { index: usize, expected: usize, found: usize },
    #[error("no terms to sum")]
    EmptyTermList,
    #[error("coupling ({i}, {j}) invalid for {n} qubits; need i < j < n")]
    BetaShapeMismatch { i: usize, j: usize, n: usize },
}
