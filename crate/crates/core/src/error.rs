use alloc::vec::Vec;

use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix must be square and nonempty, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not skew-symmetrizable (entries ({i},{j}) and ({j},{i}))")]
    NotSkewSymmetrizable { i: usize, j: usize },
    #[error("symmetrizer {d:?} does not satisfy d_i b_ij = -d_j b_ji")]
    BadSymmetrizer { d: Vec<BigInt> },
    #[error("exchange matrix has a directed cycle through labels {cycle:?}")]
    NotAcyclic { cycle: Vec<usize> },
    #[error("label {label} out of range for rank {rank}")]
    LabelOutOfRange { label: usize, rank: usize },
    #[error("expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{vector:?} is not a real root")]
    NotARoot { vector: Vec<BigInt> },
    #[error("root status of {vector:?} unresolved at depth {depth}")]
    Unknown { vector: Vec<BigInt>, depth: usize },
    #[error("Euler condition {condition} fails at labels {labels:?}")]
    EulerViolation {
        condition: &'static str,
        labels: Vec<usize>,
    },
    #[error("entry ({i},{j}) of the recovered exchange matrix is not an integer")]
    NonIntegral { i: usize, j: usize },
    #[error("root system is not finite at the requested depth")]
    InfiniteType,
    #[error("c-vector set {key:?} reached with two different exchange matrices")]
    CollisionMismatch { key: Vec<Vec<BigInt>> },
    #[error("seed c-vectors {seed:?} disagree with framework tuple {framework:?}")]
    FrameworkMismatch {
        seed: Vec<Vec<BigInt>>,
        framework: Vec<Vec<BigInt>>,
    },
    #[error("invariant violated: {0}")]
    Invariant(&'static str),
}
