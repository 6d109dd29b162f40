use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("unsupported tower profile: {0}")]
    UnsupportedProfile(String),

    #[error("polyhedron is empty")]
    Empty,

    #[error("polyhedron has lineality")]
    HasLineality,

    #[error("point is not a vertex")]
    NotAVertex,

    #[error("vertex classification disagrees with face rank: {0}")]
    VertexRankMismatch(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("cone is not pointed")]
    NotPointed,

    #[error("weight is unbounded below: exponent {0:?} is negative on a recession direction")]
    UnboundedBelow(Vec<i64>),

    #[error("monomial with exponent {0:?} is not in the tilted algebra of the vertex")]
    NotInTiltedAlgebra(Vec<i64>),

    #[error("formal Laurent polynomial has no terms")]
    EmptyLaurent,

    #[error("lattice arithmetic overflowed i64")]
    LatticeOverflow,

    #[error("not plottable: n={n}, k={k}")]
    NotPlottable { n: usize, k: usize },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
