use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("relation is not antisymmetric: `{0}` <= `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),

    #[error("carrier of size {size} exceeds the supported maximum of {max}")]
    CarrierTooLarge { size: usize, max: usize },

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("lattice is not distributive: a={a}, b={b}, c={c} violates a∧(b∨c) = (a∧b)∨(a∧c)")]
    NotDistributive { a: String, b: String, c: String },

    #[error("invalid nucleus: {0}")]
    InvalidNucleus(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("{what} of size {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
