use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} supports at most {limit}, got {got}")]
    Cap {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("connection distance {distance} is outside 1..={max} for n = {n}")]
    DistanceOutOfRange {
        distance: usize,
        n: usize,
        max: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is not a subset of the ground set")]
    NotSubset,
    #[error("the given set is not a face of the complex")]
    NotAFace,
    #[error("dimension {dim} is out of range (complex has dimension {max})")]
    DimensionOutOfRange { dim: isize, max: isize },
    #[error("complex is not pure")]
    NonPure,
    #[error("division of {numerator} by {denominator} is not exact")]
    NonExactDivision {
        numerator: String,
        denominator: String,
    },
    #[error("formula produced a negative Betti number {value} at ({i}, {d})")]
    NegativeBetti { i: usize, d: usize, value: String },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors raised because an input exceeds a size cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::Cap { .. })
    }

    pub(crate) fn cap(what: &'static str, limit: usize, got: usize) -> Self {
        Error::Cap { what, limit, got }
    }
}
