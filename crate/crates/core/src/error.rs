use core::fmt;

use crate::complex::Simplex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Adjacency input is not an n x n matrix.
    NotSquare { rows: usize, row: usize, len: usize },
    NotSymmetric { i: usize, j: usize },
    NonZeroDiagonal { i: usize },
    /// Two complexes (or a complex and a chain) disagree on the vertex universe.
    VertexCountMismatch { expected: usize, found: usize },
    VertexOutOfRange { vertex: u32, n: usize },
    InvalidSimplex,
    DimensionMismatch { expected: usize, found: usize },
    InvalidDimension(usize),
    NotInComplex(Simplex),
    NotACycle,
    /// The cycle is a boundary where a nontrivial class was required.
    TrivialCycle,
    EmptySequence,
    InvalidDepth,
    SnapshotOutOfRange { t: usize, len: usize },
    /// Persistence output and sequence disagree during cycle tracking.
    TraceMismatch,
    /// A simulation or oracle parameter is out of range.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare { rows, row, len } => {
                write!(f, "adjacency matrix is not square: {rows} rows but row {row} has {len} entries")
            }
            Error::NotSymmetric { i, j } => {
                write!(f, "adjacency matrix is not symmetric at ({i}, {j})")
            }
            Error::NonZeroDiagonal { i } => write!(f, "adjacency matrix has a self loop at {i}"),
            Error::VertexCountMismatch { expected, found } => {
                write!(f, "vertex universe mismatch: expected n = {expected}, found n = {found}")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is outside 1..={n}")
            }
            Error::InvalidSimplex => f.write_str("simplex needs 1 to 3 distinct vertices"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected a {expected}-dimensional simplex, found dimension {found}")
            }
            Error::InvalidDimension(k) => write!(f, "homology dimension {k} is not supported"),
            Error::NotInComplex(s) => write!(f, "simplex {s} is not in the complex"),
            Error::NotACycle => f.write_str("chain is not a cycle"),
            Error::TrivialCycle => f.write_str("cycle is a boundary"),
            Error::EmptySequence => f.write_str("snapshot sequence is empty"),
            Error::InvalidDepth => f.write_str("maximum hop depth must be at least 1"),
            Error::SnapshotOutOfRange { t, len } => {
                write!(f, "snapshot {t} is outside 1..={len}")
            }
            Error::TraceMismatch => {
                f.write_str("persistence output does not match the zigzag sequence")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
